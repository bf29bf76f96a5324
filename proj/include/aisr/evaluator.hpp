#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aisr/carrier.hpp"
#include "aisr/terms.hpp"

namespace aisr {

// A substitution: every letter of the identity under test maps to an
// element of one fixed carrier.
using Assignment = std::map<Letter, ElemId>;

enum class CheckMode { exhaustive, random };

struct CheckStrategy {
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t seed = 0;     // random mode only
    std::uint64_t samples = 0;  // random mode only

    static CheckStrategy exhaustive() { return {}; }
    static CheckStrategy random(std::uint64_t seed, std::uint64_t samples) {
        return {CheckMode::random, seed, samples};
    }
};

// Cost unit for the feasibility budget: one word-evaluation is one
// summand evaluated under one substitution.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct Verdict {
    bool holds = true;
    std::optional<Assignment> counterexample;  // present iff !holds
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t substitutions_checked = 0;
};

// Left-to-right fold of the carrier's multiplication over w's letters.
// Throws UnboundLetter if a letter of w is missing from a, EmptyWord on
// the empty word.
ElemId eval_word(const Word& w, const Assignment& a, const Carrier& c);

// Carrier addition over eval_word of each summand. Independent of
// summand order and duplicates by construction of FormalSum.
ElemId eval_sum(const FormalSum& s, const Assignment& a, const Carrier& c);

// Does every substitution into c make both sides of id equal?
//
// Exhaustive mode iterates all |c|^|alphabet| assignments as a
// mixed-radix counter (letters in alphabet order, the last letter
// cycling fastest) and reports the first counterexample, which is
// therefore the canonically least one. Random mode draws `samples`
// independent uniform assignments from seed-stable substreams, so its
// verdicts do not depend on how the samples are scheduled.
//
// Throws Infeasible when the run would exceed `budget` word-evaluations.
// Every returned counterexample has been re-evaluated before returning.
Verdict check_identity(const Identity& id, const Carrier& c, const CheckStrategy& strategy,
                       std::uint64_t budget = kDefaultBudget);

// One sampled identity's verdicts across the decision procedure and the
// four concrete carriers of dimension n.
struct AgreementRecord {
    std::uint64_t index = 0;
    std::string identity_text;
    bool jk_member = false;
    bool holds_c = false;
    bool holds_s = false;
    bool holds_u = false;
    bool holds_r = false;

    bool agree() const {
        return jk_member == holds_c && holds_c == holds_s && holds_s == holds_u &&
               holds_u == holds_r;
    }
};

struct AgreementReport {
    int n = 0;
    int k = 0;  // always n - 1
    SamplerConfig cfg;
    std::uint64_t seed = 0;
    std::uint64_t identities_tested = 0;
    std::vector<AgreementRecord> records;
    std::vector<std::uint64_t> disagreements;  // indices into records
    bool all_agree = true;
};

// Verdicts for one explicit identity against C_n, S_n, U_n, R_n and the
// k = n-1 decision procedure. The carriers must all have dimension n.
AgreementRecord agreement_record(const Identity& id, std::uint64_t index, const Carrier& c_c,
                                 const Carrier& c_s, const Carrier& c_u, const Carrier& c_r,
                                 std::uint64_t budget = kDefaultBudget);

// Samples `count` identities (identity i uses seed substream i) and
// records their verdicts. all_agree iff disagreements is empty.
AgreementReport agreement_experiment(int n, const SamplerConfig& cfg, std::uint64_t seed,
                                     std::uint64_t count, std::uint64_t budget = kDefaultBudget);

}  // namespace aisr
