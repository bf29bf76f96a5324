#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aisr/chain.hpp"
#include "aisr/matrix.hpp"

namespace aisr {

// The four element families:
//   R: reflexive boolean matrices (all diagonal entries 1)
//   U: upper triangular reflexive boolean matrices
//   S: stair triangular matrices
//   C: order preserving extensive transformations of an n-chain
enum class CarrierKind { R, U, S, C };

const char* carrier_kind_name(CarrierKind kind) noexcept;
CarrierKind carrier_kind_from(std::string_view name);

using ElemId = std::uint32_t;

inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 21;
inline constexpr std::size_t kTableThreshold = 4096;

// A fully enumerated finite ai-semiring. Elements carry dense ids
// 0..size-1 in canonical order: matrices sorted lexicographically on
// their row-major off-diagonal bit string, chain maps lexicographically
// on their value tuples. Element 0 is always the multiplicative
// identity. Operations go through cached Cayley tables when the carrier
// has at most kTableThreshold elements, and through the structural
// operations plus rank computation otherwise.
class Carrier {
public:
    CarrierKind kind() const noexcept { return kind_; }
    int dim() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }
    bool has_tables() const noexcept { return !add_table_.empty(); }

    ElemId add(ElemId a, ElemId b) const;
    ElemId mul(ElemId a, ElemId b) const;

    bool matrix_kind() const noexcept { return kind_ != CarrierKind::C; }

    BoolMatrix matrix(ElemId id) const;  // matrix kinds only
    ChainMap chain(ElemId id) const;     // kind C only

    // Literal text of an element ("110;011;001" or "2,3,3").
    std::string element_str(ElemId id) const;

    // Id of a structural element, or nullopt when it does not belong to
    // this carrier (wrong dimension or failing the kind's predicate).
    std::optional<ElemId> find_matrix(const BoolMatrix& m) const;
    std::optional<ElemId> find_chain(const ChainMap& f) const;
    std::optional<ElemId> find_literal(std::string_view literal) const;

private:
    friend Carrier enumerate_carrier(CarrierKind kind, int n, std::uint64_t guard, bool build_tables);

    Carrier() = default;

    ElemId matrix_rank(const BoolMatrix& m) const;
    ElemId chain_rank_of_values(const int* values) const;
    void build_tables();

    CarrierKind kind_ = CarrierKind::R;
    int n_ = 1;
    std::size_t size_ = 0;
    std::vector<std::pair<int, int>> free_positions_;   // R/U: off-diagonal slots, row-major
    std::vector<std::uint8_t> chain_storage_;           // C: size*n packed value tuples
    std::vector<std::uint64_t> chain_suffix_counts_;    // S/C: completion counts for ranking
    std::vector<std::uint16_t> add_table_, mul_table_;  // built iff size <= kTableThreshold
};

// Enumerates all elements of the requested family. Throws TooLarge when
// the element count would exceed guard. build_tables=false skips the
// Cayley tables even for small carriers (useful when a caller only needs
// the element list).
Carrier enumerate_carrier(CarrierKind kind, int n, std::uint64_t guard = kDefaultGuard,
                          bool build_tables = true);

// The semiring isomorphism between stair matrices and chain maps:
// matrix -> f(i) = max{ j : a_ij = 1 }, chain -> a_ij = 1 iff i <= j <= f(i).
// The directions are mutually inverse; products map to apply-left-first
// compositions and sums to joins.
ChainMap stair_chain_iso(const BoolMatrix& stair);
BoolMatrix stair_chain_iso(const ChainMap& f);

}  // namespace aisr
