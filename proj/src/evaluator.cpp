#include "aisr/evaluator.hpp"

#include <string>

#include "aisr/decision.hpp"
#include "aisr/rng.hpp"

namespace aisr {

ElemId eval_word(const Word& w, const Assignment& a, const Carrier& c) {
    if (w.empty()) throw EmptyWord("cannot evaluate the empty word");
    const auto lookup = [&](const Letter& x) {
        const auto it = a.find(x);
        if (it == a.end()) throw UnboundLetter("letter '" + x.name() + "' has no assigned element");
        return it->second;
    };
    const auto& letters = w.letters();
    ElemId acc = lookup(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i) acc = c.mul(acc, lookup(letters[i]));
    return acc;
}

ElemId eval_sum(const FormalSum& s, const Assignment& a, const Carrier& c) {
    const auto& words = s.summands();
    ElemId acc = eval_word(words[0], a, c);
    for (std::size_t i = 1; i < words.size(); ++i) acc = c.add(acc, eval_word(words[i], a, c));
    return acc;
}

namespace {

// Word-evaluations both sides of one substitution cost.
std::uint64_t summand_count(const Identity& id) {
    return id.lhs().size() + id.rhs().size();
}

Assignment make_assignment(const std::vector<Letter>& alphabet, const std::vector<ElemId>& digits) {
    Assignment a;
    for (std::size_t i = 0; i < alphabet.size(); ++i) a.emplace(alphabet[i], digits[i]);
    return a;
}

// Defensive re-evaluation promised by the Verdict contract.
void self_check(const Identity& id, const Assignment& a, const Carrier& c) {
    if (eval_sum(id.lhs(), a, c) == eval_sum(id.rhs(), a, c)) {
        throw Error("internal error: counterexample failed its re-evaluation");
    }
}

}  // namespace

Verdict check_identity(const Identity& id, const Carrier& c, const CheckStrategy& strategy,
                       std::uint64_t budget) {
    Verdict v;
    v.mode = strategy.mode;
    const auto& alphabet = id.alphabet();
    const std::uint64_t size = c.size();
    const std::uint64_t cost_per_substitution = summand_count(id);

    if (strategy.mode == CheckMode::exhaustive) {
        // Substitution-space size with saturation, for the budget check
        // and the Infeasible message.
        std::uint64_t space = 1;
        bool overflow = false;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (space > budget / size) {  // space * size would already exceed the budget
                overflow = true;
                break;
            }
            space *= size;
        }
        if (overflow || space > budget / cost_per_substitution) {
            const std::string shown =
                overflow ? std::to_string(size) + "^" + std::to_string(alphabet.size())
                         : std::to_string(space);
            throw Infeasible("exhaustive check needs " + shown +
                             " substitutions, beyond the word-evaluation budget of " +
                             std::to_string(budget) + "; use random mode");
        }

        std::vector<ElemId> digits(alphabet.size(), 0);
        for (std::uint64_t step = 0; step < space; ++step) {
            const Assignment a = make_assignment(alphabet, digits);
            ++v.substitutions_checked;
            if (eval_sum(id.lhs(), a, c) != eval_sum(id.rhs(), a, c)) {
                self_check(id, a, c);
                v.holds = false;
                v.counterexample = a;
                return v;
            }
            // Mixed-radix increment, last letter fastest.
            for (std::size_t i = digits.size(); i-- > 0;) {
                if (++digits[i] < size) break;
                digits[i] = 0;
            }
        }
        v.holds = true;
        return v;
    }

    v.seed = strategy.seed;
    v.samples = strategy.samples;
    if (strategy.samples > budget / cost_per_substitution) {
        throw Infeasible("random check with " + std::to_string(strategy.samples) +
                         " samples exceeds the word-evaluation budget of " +
                         std::to_string(budget));
    }
    std::vector<ElemId> digits(alphabet.size(), 0);
    for (std::uint64_t s = 0; s < strategy.samples; ++s) {
        SplitMix64 rng(SplitMix64::substream(strategy.seed, s));
        for (auto& d : digits) d = static_cast<ElemId>(rng.below(size));
        const Assignment a = make_assignment(alphabet, digits);
        ++v.substitutions_checked;
        if (eval_sum(id.lhs(), a, c) != eval_sum(id.rhs(), a, c)) {
            self_check(id, a, c);
            v.holds = false;
            v.counterexample = a;
            return v;
        }
    }
    v.holds = true;
    return v;
}

AgreementRecord agreement_record(const Identity& id, std::uint64_t index, const Carrier& c_c,
                                 const Carrier& c_s, const Carrier& c_u, const Carrier& c_r,
                                 std::uint64_t budget) {
    const int k = c_c.dim() - 1;
    AgreementRecord rec;
    rec.index = index;
    rec.identity_text = format_identity(id);
    rec.jk_member = jk_member(id, k).member;
    const auto strategy = CheckStrategy::exhaustive();
    rec.holds_c = check_identity(id, c_c, strategy, budget).holds;
    rec.holds_s = check_identity(id, c_s, strategy, budget).holds;
    rec.holds_u = check_identity(id, c_u, strategy, budget).holds;
    rec.holds_r = check_identity(id, c_r, strategy, budget).holds;
    return rec;
}

AgreementReport agreement_experiment(int n, const SamplerConfig& cfg, std::uint64_t seed,
                                     std::uint64_t count, std::uint64_t budget) {
    AgreementReport report;
    report.n = n;
    report.k = n - 1;
    report.cfg = cfg;
    report.seed = seed;

    const Carrier c_c = enumerate_carrier(CarrierKind::C, n);
    const Carrier c_s = enumerate_carrier(CarrierKind::S, n);
    const Carrier c_u = enumerate_carrier(CarrierKind::U, n);
    const Carrier c_r = enumerate_carrier(CarrierKind::R, n);

    report.records.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Identity id = sample_identity(cfg, SplitMix64::substream(seed, i));
        AgreementRecord rec = agreement_record(id, i, c_c, c_s, c_u, c_r, budget);
        if (!rec.agree()) report.disagreements.push_back(i);
        report.records.push_back(std::move(rec));
    }
    report.identities_tested = count;
    report.all_agree = report.disagreements.empty();
    return report;
}

}  // namespace aisr
