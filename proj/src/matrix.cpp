#include "aisr/matrix.hpp"

#include <bit>
#include <vector>

namespace aisr {

BoolMatrix::BoolMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxDim) {
        throw Error("matrix dimension must be in [1, 32], got " + std::to_string(n));
    }
}

BoolMatrix BoolMatrix::identity(int n) {
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) m.set_row(i, 1u << i);
    return m;
}

BoolMatrix BoolMatrix::parse(std::string_view literal) {
    std::vector<std::string_view> rows;
    std::size_t start = 0;
    for (;;) {
        const std::size_t semi = literal.find(';', start);
        rows.push_back(literal.substr(start, semi == std::string_view::npos ? semi : semi - start));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxDim) throw Error("matrix literal must have 1..32 rows");
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
            throw Error("matrix literal row " + std::to_string(i + 1) + " must have exactly " +
                        std::to_string(n) + " characters");
        }
        for (int j = 0; j < n; ++j) {
            const char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') throw Error("matrix literal entries must be 0 or 1");
            m.set(i, j, c == '1');
        }
    }
    return m;
}

std::string BoolMatrix::str() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i > 0) out.push_back(';');
        for (int j = 0; j < n_; ++j) out.push_back(get(i, j) ? '1' : '0');
    }
    return out;
}

namespace {

void require_same_dim(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
    }
}

}  // namespace

BoolMatrix mat_add(const BoolMatrix& a, const BoolMatrix& b) {
    require_same_dim(a, b);
    BoolMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i) r.set_row(i, a.row(i) | b.row(i));
    return r;
}

BoolMatrix mat_mul(const BoolMatrix& a, const BoolMatrix& b) {
    require_same_dim(a, b);
    BoolMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        std::uint32_t bits = a.row(i);
        std::uint32_t acc = 0;
        while (bits != 0) {
            acc |= b.row(std::countr_zero(bits));
            bits &= bits - 1;
        }
        r.set_row(i, acc);
    }
    return r;
}

MatrixClass classify(const BoolMatrix& a) {
    MatrixClass out;
    const int n = a.dim();

    out.reflexive = true;
    for (int i = 0; i < n; ++i) {
        if (!a.get(i, i)) {
            out.reflexive = false;
            break;
        }
    }
    if (!out.reflexive) return out;

    out.upper_triangular = true;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t below = a.row(i) & ((1u << i) - 1u);
        if (below != 0) {
            out.upper_triangular = false;
            break;
        }
    }
    if (!out.upper_triangular) return out;

    // Row i must be the block [i, end_i] with no gaps, ends nondecreasing.
    out.stair = true;
    int prev_end = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint32_t run = a.row(i) >> i;  // diagonal at bit 0
        if ((run & (run + 1)) != 0) {
            out.stair = false;
            break;
        }
        const int end = i + std::bit_width(run) - 1;
        if (end < prev_end) {
            out.stair = false;
            break;
        }
        prev_end = end;
    }
    return out;
}

bool matrix_less(const BoolMatrix& a, const BoolMatrix& b) {
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            const bool x = a.get(i, j);
            const bool y = b.get(i, j);
            if (x != y) return !x;  // 0 precedes 1
        }
    }
    return false;
}

}  // namespace aisr
