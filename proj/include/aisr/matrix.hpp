#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "aisr/errors.hpp"

namespace aisr {

// n x n matrix over the boolean semiring, n <= 32. Rows are packed into
// 32-bit words (bit j of rows_[i] is the entry at row i, column j), so
// addition is word-wise OR and multiplication reduces to ORing rows.
class BoolMatrix {
public:
    static constexpr int kMaxDim = 32;

    explicit BoolMatrix(int n);

    static BoolMatrix identity(int n);

    // Literal format: rows of 0/1 characters joined by ';', e.g.
    // "110;011;001".
    static BoolMatrix parse(std::string_view literal);
    std::string str() const;

    int dim() const noexcept { return n_; }

    bool get(int i, int j) const noexcept { return (rows_[static_cast<std::size_t>(i)] >> j) & 1u; }
    void set(int i, int j, bool v) noexcept {
        const std::uint32_t bit = 1u << j;
        if (v) rows_[static_cast<std::size_t>(i)] |= bit;
        else rows_[static_cast<std::size_t>(i)] &= ~bit;
    }

    std::uint32_t row(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }
    void set_row(int i, std::uint32_t bits) noexcept { rows_[static_cast<std::size_t>(i)] = bits; }

    bool operator==(const BoolMatrix& other) const noexcept {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int n_;
    std::array<std::uint32_t, kMaxDim> rows_{};  // bits at columns >= n stay zero
};

// Entrywise OR / boolean matrix product. Both require equal dimensions.
BoolMatrix mat_add(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix mat_mul(const BoolMatrix& a, const BoolMatrix& b);

// Hereditary flags: stair implies upper_triangular implies reflexive.
struct MatrixClass {
    bool reflexive = false;
    bool upper_triangular = false;  // reflexive with zeros below the diagonal
    bool stair = false;             // each row a contiguous block [i, f(i)], f nondecreasing
};

MatrixClass classify(const BoolMatrix& a);

// Canonical order: lexicographic on the row-major bit string. Used for
// carrier element ordering.
bool matrix_less(const BoolMatrix& a, const BoolMatrix& b);

}  // namespace aisr
