#include "aisr/carrier.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace aisr {

const char* carrier_kind_name(CarrierKind kind) noexcept {
    switch (kind) {
        case CarrierKind::R: return "R";
        case CarrierKind::U: return "U";
        case CarrierKind::S: return "S";
        case CarrierKind::C: return "C";
    }
    return "?";
}

CarrierKind carrier_kind_from(std::string_view name) {
    if (name == "R") return CarrierKind::R;
    if (name == "U") return CarrierKind::U;
    if (name == "S") return CarrierKind::S;
    if (name == "C") return CarrierKind::C;
    throw Error("unknown semiring kind '" + std::string(name) + "' (expected R, U, S or C)");
}

namespace {

std::vector<std::pair<int, int>> free_positions_for(CarrierKind kind, int n) {
    std::vector<std::pair<int, int>> ps;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (kind == CarrierKind::U && j < i) continue;
            ps.emplace_back(i, j);
        }
    }
    return ps;
}

// chain_suffix_counts[(i-1)*(n+1) + v] = number of ways to extend a
// partial map with f(i-1)=v (v=0 when i=1) to a full order preserving
// extensive map. Entry for i = n+1 is 1.
std::vector<std::uint64_t> suffix_counts(int n) {
    std::vector<std::uint64_t> cs(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    auto at = [&](int i, int v) -> std::uint64_t& {
        return cs[static_cast<std::size_t>(i - 1) * (n + 1) + v];
    };
    for (int v = 0; v <= n; ++v) at(n + 1, v) = 1;
    for (int i = n; i >= 1; --i) {
        for (int v = n; v >= 0; --v) {
            std::uint64_t total = 0;
            for (int w = std::max(v, i); w <= n; ++w) total += at(i + 1, w);
            at(i, v) = total;
        }
    }
    return cs;
}

}  // namespace

ElemId Carrier::chain_rank_of_values(const int* values) const {
    const int n = n_;
    auto cs = [&](int i, int v) {
        return chain_suffix_counts_[static_cast<std::size_t>(i - 1) * (n + 1) + v];
    };
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        for (int w = std::max(prev, i); w < values[i - 1]; ++w) rank += cs(i + 1, w);
        prev = values[i - 1];
    }
    return static_cast<ElemId>(rank);
}

ElemId Carrier::matrix_rank(const BoolMatrix& m) const {
    if (kind_ == CarrierKind::S) {
        int values[BoolMatrix::kMaxDim];
        for (int i = 0; i < n_; ++i) {
            values[i] = i + std::bit_width(m.row(i) >> i);  // 1-based row end
        }
        return chain_rank_of_values(values);
    }
    // R/U: the id is the free-position bit string, first position most
    // significant.
    std::uint64_t id = 0;
    for (const auto& [i, j] : free_positions_) id = (id << 1) | (m.get(i, j) ? 1u : 0u);
    return static_cast<ElemId>(id);
}

BoolMatrix Carrier::matrix(ElemId id) const {
    if (!matrix_kind()) throw Error("carrier C holds chain maps, not matrices");
    if (id >= size_) throw Error("element id out of range");
    if (kind_ == CarrierKind::S) {
        const std::uint8_t* vals = &chain_storage_[static_cast<std::size_t>(id) * n_];
        std::vector<int> v(vals, vals + n_);
        return stair_chain_iso(ChainMap(n_, std::move(v)));
    }
    BoolMatrix m = BoolMatrix::identity(n_);
    const std::size_t bits = free_positions_.size();
    for (std::size_t b = 0; b < bits; ++b) {
        if ((id >> (bits - 1 - b)) & 1u) {
            m.set(free_positions_[b].first, free_positions_[b].second, true);
        }
    }
    return m;
}

ChainMap Carrier::chain(ElemId id) const {
    if (kind_ != CarrierKind::C) throw Error("only carrier C holds chain maps");
    if (id >= size_) throw Error("element id out of range");
    const std::uint8_t* vals = &chain_storage_[static_cast<std::size_t>(id) * n_];
    return ChainMap(n_, std::vector<int>(vals, vals + n_));
}

std::string Carrier::element_str(ElemId id) const {
    return matrix_kind() ? matrix(id).str() : chain(id).str();
}

std::optional<ElemId> Carrier::find_matrix(const BoolMatrix& m) const {
    if (!matrix_kind() || m.dim() != n_) return std::nullopt;
    const MatrixClass cls = classify(m);
    switch (kind_) {
        case CarrierKind::R:
            if (!cls.reflexive) return std::nullopt;
            break;
        case CarrierKind::U:
            if (!cls.upper_triangular) return std::nullopt;
            break;
        case CarrierKind::S:
            if (!cls.stair) return std::nullopt;
            break;
        case CarrierKind::C: return std::nullopt;
    }
    return matrix_rank(m);
}

std::optional<ElemId> Carrier::find_chain(const ChainMap& f) const {
    if (kind_ != CarrierKind::C || f.dim() != n_) return std::nullopt;
    return chain_rank_of_values(f.values().data());
}

std::optional<ElemId> Carrier::find_literal(std::string_view literal) const {
    if (matrix_kind()) return find_matrix(BoolMatrix::parse(literal));
    return find_chain(ChainMap::parse(literal));
}

ElemId Carrier::add(ElemId a, ElemId b) const {
    if (a >= size_ || b >= size_) throw Error("element id out of range");
    if (has_tables()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
    if (kind_ == CarrierKind::C) {
        int joined[BoolMatrix::kMaxDim];
        const std::uint8_t* fa = &chain_storage_[static_cast<std::size_t>(a) * n_];
        const std::uint8_t* fb = &chain_storage_[static_cast<std::size_t>(b) * n_];
        for (int i = 0; i < n_; ++i) joined[i] = std::max<int>(fa[i], fb[i]);
        return chain_rank_of_values(joined);
    }
    return matrix_rank(mat_add(matrix(a), matrix(b)));
}

ElemId Carrier::mul(ElemId a, ElemId b) const {
    if (a >= size_ || b >= size_) throw Error("element id out of range");
    if (has_tables()) return mul_table_[static_cast<std::size_t>(a) * size_ + b];
    if (kind_ == CarrierKind::C) {
        int composed[BoolMatrix::kMaxDim];
        const std::uint8_t* fa = &chain_storage_[static_cast<std::size_t>(a) * n_];
        const std::uint8_t* fb = &chain_storage_[static_cast<std::size_t>(b) * n_];
        for (int i = 0; i < n_; ++i) composed[i] = fb[fa[i] - 1];  // apply a first
        return chain_rank_of_values(composed);
    }
    return matrix_rank(mat_mul(matrix(a), matrix(b)));
}

void Carrier::build_tables() {
    const std::size_t m = size_;
    add_table_.resize(m * m);
    mul_table_.resize(m * m);

    if (kind_ == CarrierKind::C) {
        std::vector<ChainMap> elems;
        elems.reserve(m);
        for (ElemId id = 0; id < m; ++id) elems.push_back(chain(id));
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                const ChainMap sum = chain_join(elems[a], elems[b]);
                const ChainMap prod = chain_compose(elems[a], elems[b]);
                add_table_[a * m + b] = static_cast<std::uint16_t>(chain_rank_of_values(sum.values().data()));
                mul_table_[a * m + b] = static_cast<std::uint16_t>(chain_rank_of_values(prod.values().data()));
            }
        }
        return;
    }

    std::vector<BoolMatrix> elems;
    elems.reserve(m);
    for (ElemId id = 0; id < m; ++id) elems.push_back(matrix(id));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            add_table_[a * m + b] = static_cast<std::uint16_t>(matrix_rank(mat_add(elems[a], elems[b])));
            mul_table_[a * m + b] = static_cast<std::uint16_t>(matrix_rank(mat_mul(elems[a], elems[b])));
        }
    }
}

Carrier enumerate_carrier(CarrierKind kind, int n, std::uint64_t guard, bool build_tables) {
    if (n < 1 || n > BoolMatrix::kMaxDim) {
        throw Error("carrier size parameter must be in [1, 32], got " + std::to_string(n));
    }
    Carrier c;
    c.kind_ = kind;
    c.n_ = n;

    // Ids are 32-bit; a guard beyond that could not be honored anyway.
    guard = std::min<std::uint64_t>(guard, std::uint64_t{1} << 31);

    const std::string label = std::string(carrier_kind_name(kind)) + "_" + std::to_string(n);

    if (kind == CarrierKind::R || kind == CarrierKind::U) {
        c.free_positions_ = free_positions_for(kind, n);
        const std::size_t bits = c.free_positions_.size();
        if (bits > 63 || (std::uint64_t{1} << bits) > guard) {
            const std::string count =
                bits > 63 ? "2^" + std::to_string(bits) : std::to_string(std::uint64_t{1} << bits);
            throw TooLarge(label + " has " + count + " elements, which exceeds the enumeration guard of " +
                           std::to_string(guard));
        }
        c.size_ = std::size_t{1} << bits;
    } else {
        c.chain_suffix_counts_ = suffix_counts(n);
        const std::uint64_t total = c.chain_suffix_counts_[0];  // cs(1, 0)
        if (total > guard) {
            throw TooLarge(label + " has " + std::to_string(total) +
                           " elements, which exceeds the enumeration guard of " + std::to_string(guard));
        }
        c.size_ = static_cast<std::size_t>(total);
        // Enumerate value tuples in lexicographic order; for stair
        // matrices this coincides with the row-major bit-string order.
        c.chain_storage_.reserve(c.size_ * static_cast<std::size_t>(n));
        std::vector<std::uint8_t> cur(static_cast<std::size_t>(n));
        auto dfs = [&](auto&& self, int i, int prev) -> void {
            if (i > n) {
                c.chain_storage_.insert(c.chain_storage_.end(), cur.begin(), cur.end());
                return;
            }
            for (int w = std::max(prev, i); w <= n; ++w) {
                cur[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(w);
                self(self, i + 1, w);
            }
        };
        dfs(dfs, 1, 0);
        assert(c.chain_storage_.size() == c.size_ * static_cast<std::size_t>(n));
    }

    if (build_tables && c.size_ <= kTableThreshold) c.build_tables();
    return c;
}

ChainMap stair_chain_iso(const BoolMatrix& stair) {
    if (!classify(stair).stair) throw NotStair("matrix is not stair triangular: " + stair.str());
    std::vector<int> values(static_cast<std::size_t>(stair.dim()));
    for (int i = 0; i < stair.dim(); ++i) {
        values[static_cast<std::size_t>(i)] = i + std::bit_width(stair.row(i) >> i);
    }
    return ChainMap(stair.dim(), std::move(values));
}

BoolMatrix stair_chain_iso(const ChainMap& f) {
    BoolMatrix m(f.dim());
    for (int i = 1; i <= f.dim(); ++i) {
        // 1-entries of row i at columns i..f(i), 0-based bits i-1..f(i)-1.
        const std::uint32_t hi = f.apply(i) >= 32 ? ~0u : (1u << f.apply(i)) - 1u;
        const std::uint32_t lo = (1u << (i - 1)) - 1u;
        m.set_row(i - 1, hi & ~lo);
    }
    return m;
}

}  // namespace aisr
