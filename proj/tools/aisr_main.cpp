#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aisr/evaluator.hpp"
#include "aisr/json_io.hpp"
#include "aisr/representation.hpp"
#include "aisr/version.hpp"

namespace {

using aisr::Json;

struct GlobalOpts {
    std::string output = "human";
    std::uint64_t seed = 0;
    std::uint64_t budget = aisr::kDefaultBudget;
    std::uint64_t guard = aisr::kDefaultGuard;
};

struct SemiringRef {
    aisr::CarrierKind kind;
    int n = 0;
};

SemiringRef parse_semiring(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon + 1 == text.size()) {
        throw aisr::Error("semiring must be given as KIND:n, e.g. R:3");
    }
    SemiringRef ref;
    ref.kind = aisr::carrier_kind_from(text.substr(0, colon));
    const std::string dim = text.substr(colon + 1);
    try {
        std::size_t used = 0;
        ref.n = std::stoi(dim, &used);
        if (used != dim.size()) throw std::invalid_argument(dim);
    } catch (const std::exception&) {
        throw aisr::Error("semiring dimension '" + dim + "' is not an integer");
    }
    if (ref.n < 1) throw aisr::Error("semiring dimension must be positive");
    return ref;
}

// Prints either the JSON envelope or the human text, then yields `code`.
int finish(const GlobalOpts& g, const std::string& command, Json inputs, const char* payload_key,
           Json payload, const std::string& human, int code) {
    if (g.output == "json") {
        Json envelope;
        envelope["command"] = command;
        envelope["version"] = aisr::kVersion;
        envelope["seed"] = g.seed;
        envelope["inputs"] = std::move(inputs);
        envelope[payload_key] = std::move(payload);
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << human;
    }
    return code;
}

std::string describe_counterexample(const aisr::Assignment& a, const aisr::Carrier& c) {
    std::string out;
    for (const auto& [letter, id] : a) {
        out += "  " + letter.name() + " = " + c.element_str(id) + "\n";
    }
    return out;
}

int run_check(const GlobalOpts& g, const std::string& semiring_text, const std::string& identity_text,
              std::uint64_t samples, const std::vector<std::string>& verify_ce) {
    const SemiringRef ref = parse_semiring(semiring_text);
    const aisr::Carrier carrier = aisr::enumerate_carrier(ref.kind, ref.n, g.guard);
    const aisr::Identity id = aisr::parse_identity(identity_text);

    Json inputs{{"semiring", semiring_text},
                {"identity", identity_text},
                {"canonical", aisr::format_identity(id)}};

    if (!verify_ce.empty()) {
        aisr::Assignment a;
        for (const auto& item : verify_ce) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw aisr::Error("--verify-counterexample expects LETTER=LITERAL, got '" + item +
                                  "'");
            }
            const aisr::Letter letter(item.substr(0, eq));
            const std::string literal = item.substr(eq + 1);
            const auto elem = carrier.find_literal(literal);
            if (!elem) {
                throw aisr::Error("'" + literal + "' is not an element of " +
                                  aisr::carrier_kind_name(ref.kind) + ":" + std::to_string(ref.n));
            }
            a[letter] = *elem;
        }
        const aisr::ElemId lhs = aisr::eval_sum(id.lhs(), a, carrier);
        const aisr::ElemId rhs = aisr::eval_sum(id.rhs(), a, carrier);
        const bool valid = lhs != rhs;
        inputs["verify_counterexample"] = verify_ce;
        Json verdict{{"counterexample_valid", valid},
                     {"lhs_value", carrier.element_str(lhs)},
                     {"rhs_value", carrier.element_str(rhs)}};
        std::string human = valid ? "counterexample confirmed: lhs = " + carrier.element_str(lhs) +
                                        ", rhs = " + carrier.element_str(rhs) + "\n"
                                  : "not a counterexample: both sides = " +
                                        carrier.element_str(lhs) + "\n";
        return finish(g, "check", std::move(inputs), "verdict", std::move(verdict), human,
                      valid ? 1 : 0);
    }

    const aisr::CheckStrategy strategy = samples > 0
                                             ? aisr::CheckStrategy::random(g.seed, samples)
                                             : aisr::CheckStrategy::exhaustive();
    if (samples > 0) inputs["random"] = samples;
    const aisr::Verdict v = aisr::check_identity(id, carrier, strategy, g.budget);

    std::string human;
    if (v.holds && v.mode == aisr::CheckMode::exhaustive) {
        human = "holds (exhaustive, " + std::to_string(v.substitutions_checked) +
                " substitutions)\n";
    } else if (v.holds) {
        human = "no counterexample in " + std::to_string(v.samples) + " samples (seed " +
                std::to_string(v.seed) + ")\n";
    } else {
        human = "refuted after " + std::to_string(v.substitutions_checked) + " substitutions\n" +
                describe_counterexample(*v.counterexample, carrier);
    }
    return finish(g, "check", std::move(inputs), "verdict", aisr::verdict_json(v, carrier), human,
                  v.holds ? 0 : 1);
}

int run_jk(const GlobalOpts& g, const std::string& identity_text, int k, bool threshold) {
    const aisr::Identity id = aisr::parse_identity(identity_text);
    Json inputs{{"identity", identity_text}, {"canonical", aisr::format_identity(id)}};

    if (threshold) {
        inputs["threshold"] = true;
        const aisr::JkThreshold t = aisr::jk_threshold(id);
        const std::string human =
            t.all_k ? "threshold: ALL\n" : "threshold: " + std::to_string(t.value) + "\n";
        return finish(g, "jk", std::move(inputs), "verdict", aisr::jk_threshold_json(t), human, 0);
    }

    inputs["k"] = k;
    const aisr::JkVerdict v = aisr::jk_member(id, k);
    std::string human;
    if (v.member) {
        human = "member of J_" + std::to_string(k) + "\n";
    } else {
        human = "not in J_" + std::to_string(k) + ": subword '" + v.witness->word.str() +
                "' appears only in the " + aisr::side_name(v.witness->side) + " union\n";
    }
    return finish(g, "jk", std::move(inputs), "verdict", aisr::jk_verdict_json(v, k), human,
                  v.member ? 0 : 1);
}

int run_basis(const GlobalOpts& g, int k) {
    const aisr::Identity id = aisr::basis_identity(k);
    const std::string text = aisr::format_identity(id);
    Json report{{"k", k}, {"identity", text}};
    return finish(g, "basis", Json{{"k", k}}, "report", std::move(report), text + "\n", 0);
}

int run_crosscheck(const GlobalOpts& g, int n, std::uint64_t count, int alphabet, int max_summands,
                   int max_len) {
    aisr::SamplerConfig cfg;
    cfg.alphabet_size = alphabet;
    cfg.max_summands_per_side = max_summands;
    cfg.max_word_len = max_len;
    const aisr::AgreementReport report = aisr::agreement_experiment(n, cfg, g.seed, count, g.budget);

    Json inputs{{"n", n},
                {"count", count},
                {"alphabet", alphabet},
                {"max_summands", max_summands},
                {"max_len", max_len}};
    std::ostringstream human;
    human << "n = " << report.n << ", k = " << report.k << "\n"
          << "identities tested: " << report.identities_tested << " (seed " << report.seed
          << ")\n"
          << "all agree: " << (report.all_agree ? "yes" : "no") << "\n";
    for (const auto idx : report.disagreements) {
        const auto& rec = report.records[idx];
        human << "disagreement at index " << rec.index << ": " << rec.identity_text << " [jk="
              << (rec.jk_member ? "member" : "non-member") << " C=" << (rec.holds_c ? "yes" : "no")
              << " S=" << (rec.holds_s ? "yes" : "no") << " U=" << (rec.holds_u ? "yes" : "no")
              << " R=" << (rec.holds_r ? "yes" : "no") << "]\n";
    }
    return finish(g, "crosscheck", std::move(inputs), "report",
                  aisr::agreement_report_json(report), human.str(), report.all_agree ? 0 : 1);
}

int run_enumerate(const GlobalOpts& g, const std::string& semiring_text, bool count_only) {
    const SemiringRef ref = parse_semiring(semiring_text);
    const aisr::Carrier carrier =
        aisr::enumerate_carrier(ref.kind, ref.n, g.guard, /*build_tables=*/false);

    Json inputs{{"semiring", semiring_text}, {"count_only", count_only}};
    Json report{{"kind", aisr::carrier_kind_name(ref.kind)},
                {"n", ref.n},
                {"count", carrier.size()}};
    std::string human;
    if (count_only) {
        human = std::to_string(carrier.size()) + "\n";
    } else {
        Json elements = Json::array();
        for (aisr::ElemId i = 0; i < carrier.size(); ++i) {
            const std::string literal = carrier.element_str(i);
            elements.push_back(literal);
            human += literal + "\n";
        }
        report["elements"] = std::move(elements);
    }
    return finish(g, "enumerate", std::move(inputs), "report", std::move(report), human, 0);
}

int run_verify_rep(const GlobalOpts& g, int n, std::uint64_t samples) {
    const aisr::RepMode mode = samples > 0 ? aisr::RepMode::random : aisr::RepMode::exhaustive;
    const aisr::RepresentationReport report =
        aisr::verify_representation(n, mode, g.seed, samples, g.guard);

    Json inputs{{"n", n}};
    if (samples > 0) inputs["random"] = samples;
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::ostringstream human;
    human << "n = " << n << " (" << (mode == aisr::RepMode::exhaustive ? "exhaustive" : "random")
          << ")\n"
          << "faithful: " << yn(report.faithful) << "\n"
          << "extensive: " << yn(report.extensive) << "\n"
          << "order preserving: " << yn(report.order_preserving) << "\n"
          << "join compatible: " << yn(report.join_compatible) << "\n"
          << "longest chain length: " << report.longest_chain_length << "\n";
    if (report.counterexample) {
        const auto& ce = *report.counterexample;
        human << "counterexample (" << ce.property << ")";
        if (!ce.q.empty()) human << " q=" << ce.q;
        if (!ce.q2.empty()) human << " q2=" << ce.q2;
        if (!ce.a.empty()) human << " a=" << ce.a;
        if (!ce.b.empty()) human << " b=" << ce.b;
        human << "\n";
    }
    return finish(g, "verify-rep", std::move(inputs), "report", aisr::rep_report_json(report),
                  human.str(), report.all_ok() ? 0 : 1);
}

int run_corpus(const GlobalOpts& g, const std::string& path, const std::string& semiring_text) {
    const SemiringRef ref = parse_semiring(semiring_text);
    const aisr::Carrier carrier = aisr::enumerate_carrier(ref.kind, ref.n, g.guard);

    std::ifstream in(path);
    if (!in) throw aisr::Error("cannot open corpus file '" + path + "'");

    Json results = Json::array();
    std::ostringstream human;
    std::uint64_t held = 0;
    std::uint64_t refuted = 0;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        aisr::Identity id = [&] {
            try {
                return aisr::parse_identity(line);
            } catch (const aisr::ParseError& e) {
                throw aisr::Error("line " + std::to_string(line_no) + ": " + e.what());
            }
        }();
        const aisr::Verdict v =
            aisr::check_identity(id, carrier, aisr::CheckStrategy::exhaustive(), g.budget);
        v.holds ? ++held : ++refuted;
        Json entry{{"line", line_no},
                   {"identity", aisr::format_identity(id)},
                   {"holds", v.holds}};
        human << "line " << line_no << ": " << (v.holds ? "holds" : "refuted");
        if (!v.holds) {
            Json ce = Json::object();
            std::string parts;
            for (const auto& [letter, elem] : *v.counterexample) {
                ce[letter.name()] = carrier.element_str(elem);
                if (!parts.empty()) parts += ", ";
                parts += letter.name() + " = " + carrier.element_str(elem);
            }
            entry["counterexample"] = std::move(ce);
            human << " (" << parts << ")";
        }
        human << "\n";
        results.push_back(std::move(entry));
    }
    human << (held + refuted) << " identities: " << held << " held, " << refuted << " refuted\n";

    Json inputs{{"file", path}, {"semiring", semiring_text}};
    Json report{{"total", held + refuted},
                {"held", held},
                {"refuted", refuted},
                {"results", std::move(results)}};
    return finish(g, "corpus", std::move(inputs), "report", std::move(report), human.str(),
                  refuted == 0 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Identity checking in semirings of reflexive boolean matrices and of order "
                 "preserving extensive chain transformations"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--output", g.output, "Output format")
        ->check(CLI::IsMember({"human", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for randomized modes")->capture_default_str();
    app.add_option("--budget", g.budget, "Word-evaluation budget")
        ->envname("AISR_BUDGET")
        ->capture_default_str();
    app.add_option("--guard", g.guard, "Carrier enumeration size guard")->capture_default_str();

    std::string semiring;
    std::string identity;
    std::string file;
    std::uint64_t samples = 0;
    std::uint64_t count = 1000;
    std::vector<std::string> verify_ce;
    int k = 1;
    bool threshold = false;
    bool count_only = false;
    int n = 2;
    int alphabet = 3;
    int max_summands = 3;
    int max_len = 4;

    auto* check = app.add_subcommand("check", "Check an identity in one carrier");
    check->add_option("--semiring", semiring, "Carrier as KIND:n (KIND in R,U,S,C)")->required();
    check->add_option("--identity", identity, "Identity text, e.g. \"x y = x + y\"")->required();
    check->add_option("--random", samples, "Use this many random substitutions");
    check->add_option("--verify-counterexample", verify_ce,
                      "LETTER=LITERAL assignment to re-check (repeatable)");

    auto* jk = app.add_subcommand("jk", "Decide membership in J_k");
    jk->add_option("--identity", identity, "Identity text")->required();
    auto* k_opt = jk->add_option("--k", k, "Subword length bound");
    jk->add_flag("--threshold", threshold, "Report the largest k with membership")
        ->excludes(k_opt);

    auto* basis = app.add_subcommand("basis", "Print the k-th basis identity");
    basis->add_option("--k", k, "Basis parameter (>= 1)")->required()->check(CLI::PositiveNumber);

    auto* crosscheck = app.add_subcommand("crosscheck", "Sampled decision/semantics agreement");
    crosscheck->add_option("--n", n, "Carrier dimension")->required()->check(CLI::PositiveNumber);
    crosscheck->add_option("--count", count, "Number of sampled identities")
        ->capture_default_str();
    crosscheck->add_option("--alphabet", alphabet, "Sampler alphabet size")
        ->capture_default_str();
    crosscheck->add_option("--max-summands", max_summands, "Sampler summand bound per side")
        ->capture_default_str();
    crosscheck->add_option("--max-len", max_len, "Sampler word length bound")
        ->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "List a carrier's elements");
    enumerate->add_option("--semiring", semiring, "Carrier as KIND:n")->required();
    enumerate->add_flag("--count-only", count_only, "Print only the element count");

    auto* verify_rep = app.add_subcommand("verify-rep", "Verify the vector action of R_n");
    verify_rep->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
    verify_rep->add_option("--random", samples, "Use this many random samples");

    auto* corpus = app.add_subcommand("corpus", "Check every identity in a file");
    corpus->add_option("--file", file, "Corpus file, one identity per line")->required();
    corpus->add_option("--semiring", semiring, "Carrier as KIND:n")->required();

    for (auto* sub : {check, jk, basis, crosscheck, enumerate, verify_rep, corpus}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(g, semiring, identity, samples, verify_ce);
        if (jk->parsed()) {
            if (!threshold && k_opt->count() == 0) {
                throw aisr::Error("jk needs either --k or --threshold");
            }
            return run_jk(g, identity, k, threshold);
        }
        if (basis->parsed()) return run_basis(g, k);
        if (crosscheck->parsed()) return run_crosscheck(g, n, count, alphabet, max_summands, max_len);
        if (enumerate->parsed()) return run_enumerate(g, semiring, count_only);
        if (verify_rep->parsed()) return run_verify_rep(g, n, samples);
        if (corpus->parsed()) return run_corpus(g, file, semiring);
    } catch (const aisr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
