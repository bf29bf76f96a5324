#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "aisr/carrier.hpp"
#include "aisr/matrix.hpp"

namespace aisr {

// A nonzero boolean vector of dimension n <= 32, ordered componentwise.
// These are the points the reflexive matrices act on.
class BoolVector {
public:
    BoolVector(int n, std::uint32_t bits);

    static BoolVector parse(std::string_view literal);  // e.g. "101"
    std::string str() const;

    int dim() const noexcept { return n_; }
    std::uint32_t bits() const noexcept { return bits_; }
    bool get(int i) const noexcept { return (bits_ >> i) & 1u; }

    bool operator==(const BoolVector&) const = default;

private:
    int n_;
    std::uint32_t bits_;
};

// Right action q.a by vector-matrix multiplication over the boolean
// semiring. Requires matching dimensions and a reflexive matrix; the
// result is nonzero because q <= q.a.
BoolVector act(const BoolVector& q, const BoolMatrix& a);

enum class RepMode { exhaustive, random };

struct RepCounterexample {
    std::string property;  // which check failed
    std::string q, q2;     // vector literals ("" when unused)
    std::string a, b;      // matrix literals ("" when unused)
};

// Outcome of checking that the action of R_n on nonzero boolean vectors
// is a faithful representation by order preserving extensive
// transformations whose addition acts as pointwise supremum, over a
// poset whose longest chain has exactly n elements.
struct RepresentationReport {
    int n = 0;
    bool faithful = false;
    bool extensive = false;
    bool order_preserving = false;
    bool join_compatible = false;
    int longest_chain_length = 0;
    RepMode mode = RepMode::exhaustive;
    std::uint64_t seed = 0;     // random mode only
    std::uint64_t samples = 0;  // random mode only
    std::optional<RepCounterexample> counterexample;  // present iff some flag is false

    bool all_ok() const noexcept {
        return faithful && extensive && order_preserving && join_compatible;
    }
};

// Exhaustive mode checks every (q, q', a, b); it needs R_n to pass the
// enumeration guard. Random mode draws `samples` seeded tuples for the
// pointwise properties; faithfulness and the chain length are cheap and
// are verified exhaustively in both modes (faithfulness through
// distinguishing basis vectors, which read off matrix rows).
RepresentationReport verify_representation(int n, RepMode mode, std::uint64_t seed = 0,
                                           std::uint64_t samples = 0,
                                           std::uint64_t guard = kDefaultGuard);

}  // namespace aisr
