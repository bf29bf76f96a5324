#include "aisr/json_io.hpp"

namespace aisr {

Json jk_verdict_json(const JkVerdict& v, int k) {
    Json j;
    j["k"] = k;
    j["member"] = v.member;
    if (v.witness) {
        j["witness"] = Json{{"word", v.witness->word.str()},
                            {"side", side_name(v.witness->side)}};
    }
    return j;
}

Json jk_threshold_json(const JkThreshold& t) {
    Json j;
    j["all"] = t.all_k;
    if (!t.all_k) j["threshold"] = t.value;
    return j;
}

Json verdict_json(const Verdict& v, const Carrier& c) {
    Json j;
    j["holds"] = v.holds;
    j["mode"] = v.mode == CheckMode::exhaustive ? "exhaustive" : "random";
    if (v.mode == CheckMode::random) {
        j["seed"] = v.seed;
        j["samples"] = v.samples;
    }
    j["substitutions_checked"] = v.substitutions_checked;
    if (v.counterexample) {
        Json ce = Json::object();
        for (const auto& [letter, id] : *v.counterexample) ce[letter.name()] = c.element_str(id);
        j["counterexample"] = std::move(ce);
    }
    return j;
}

Json rep_report_json(const RepresentationReport& r) {
    Json j;
    j["n"] = r.n;
    j["mode"] = r.mode == RepMode::exhaustive ? "exhaustive" : "random";
    if (r.mode == RepMode::random) {
        j["seed"] = r.seed;
        j["samples"] = r.samples;
    }
    j["faithful"] = r.faithful;
    j["extensive"] = r.extensive;
    j["order_preserving"] = r.order_preserving;
    j["join_compatible"] = r.join_compatible;
    j["longest_chain_length"] = r.longest_chain_length;
    j["all_ok"] = r.all_ok();
    if (r.counterexample) {
        const auto& ce = *r.counterexample;
        Json cj;
        cj["property"] = ce.property;
        if (!ce.q.empty()) cj["q"] = ce.q;
        if (!ce.q2.empty()) cj["q2"] = ce.q2;
        if (!ce.a.empty()) cj["a"] = ce.a;
        if (!ce.b.empty()) cj["b"] = ce.b;
        j["counterexample"] = std::move(cj);
    }
    return j;
}

Json agreement_record_json(const AgreementRecord& rec) {
    return Json{{"index", rec.index},         {"identity", rec.identity_text},
                {"jk_member", rec.jk_member}, {"holds_c", rec.holds_c},
                {"holds_s", rec.holds_s},     {"holds_u", rec.holds_u},
                {"holds_r", rec.holds_r},     {"agree", rec.agree()}};
}

Json agreement_report_json(const AgreementReport& r) {
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["config"] = Json{{"alphabet_size", r.cfg.alphabet_size},
                       {"max_summands_per_side", r.cfg.max_summands_per_side},
                       {"max_word_len", r.cfg.max_word_len}};
    j["seed"] = r.seed;
    j["identities_tested"] = r.identities_tested;
    j["all_agree"] = r.all_agree;
    Json dis = Json::array();
    for (const auto idx : r.disagreements) dis.push_back(agreement_record_json(r.records[idx]));
    j["disagreements"] = std::move(dis);
    return j;
}

}  // namespace aisr
