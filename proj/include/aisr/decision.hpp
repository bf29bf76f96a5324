#pragma once

#include <optional>

#include "aisr/terms.hpp"

namespace aisr {

enum class Side { lhs, rhs };

const char* side_name(Side s) noexcept;

struct JkWitness {
    Word word;   // length <= k, in the subword union of exactly one side
    Side side;   // the side whose union contains it
};

struct JkVerdict {
    bool member = false;
    std::optional<JkWitness> witness;  // present iff !member
};

// Membership in J_k: the two sides' unions of length-<=k subword sets
// must coincide. On failure the witness is the canonically least word
// of the symmetric difference.
JkVerdict jk_member(const Identity& id, int k);

// Largest k with id in J_k, capped at K_max = the maximum word length
// in id. Subword sets stabilize at the word length, so membership at
// K_max means membership for every k; that case reports all_k.
// Every identity is in J_0, so value >= 0 always.
struct JkThreshold {
    bool all_k = false;
    int value = 0;  // meaningful iff !all_k
};

JkThreshold jk_threshold(const Identity& id);

}  // namespace aisr
