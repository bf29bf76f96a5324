#include "aisr/decision.hpp"

#include <algorithm>

namespace aisr {

namespace {

WordSet side_union(const FormalSum& side, int k) {
    WordSet all;
    for (const Word& w : side.summands()) {
        WordSet s = subwords_up_to(w, k);
        all.insert(s.begin(), s.end());
    }
    return all;
}

}  // namespace

const char* side_name(Side s) noexcept { return s == Side::lhs ? "lhs" : "rhs"; }

JkVerdict jk_member(const Identity& id, int k) {
    const WordSet left = side_union(id.lhs(), k);
    const WordSet right = side_union(id.rhs(), k);
    if (left == right) return {true, std::nullopt};

    // Walk both sorted sets in parallel; the first word present in only
    // one of them is the canonically least element of the symmetric
    // difference.
    auto l = left.begin();
    auto r = right.begin();
    while (l != left.end() && r != right.end()) {
        if (*l == *r) {
            ++l;
            ++r;
        } else if (*l < *r) {
            return {false, JkWitness{*l, Side::lhs}};
        } else {
            return {false, JkWitness{*r, Side::rhs}};
        }
    }
    if (l != left.end()) return {false, JkWitness{*l, Side::lhs}};
    return {false, JkWitness{*r, Side::rhs}};
}

JkThreshold jk_threshold(const Identity& id) {
    const int k_max = static_cast<int>(id.max_word_length());
    // One pass at k_max is enough: for k <= k_max the union of s_k sets
    // is exactly the length-<=k slice of the union of s_{k_max} sets.
    const WordSet left = side_union(id.lhs(), k_max);
    const WordSet right = side_union(id.rhs(), k_max);

    auto member_at = [&](int k) {
        auto keep = [k](const Word& w) { return static_cast<int>(w.length()) <= k; };
        auto l = left.begin();
        auto r = right.begin();
        for (;;) {
            while (l != left.end() && !keep(*l)) ++l;
            while (r != right.end() && !keep(*r)) ++r;
            if (l == left.end() || r == right.end()) return l == left.end() && r == right.end();
            if (*l != *r) return false;
            ++l;
            ++r;
        }
    };

    if (member_at(k_max)) return {true, k_max};
    for (int k = k_max - 1; k >= 1; --k) {
        if (member_at(k)) return {false, k};
    }
    return {false, 0};
}

}  // namespace aisr
