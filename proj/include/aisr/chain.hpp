#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aisr/errors.hpp"

namespace aisr {

// An order preserving, extensive transformation of the chain 1 < ... < n,
// stored as the value tuple (f(1), ..., f(n)). Points and values are
// 1-based. Both invariants are enforced at construction:
//   extensive:        f(i) >= i
//   order preserving: f(i) <= f(j) for i <= j
class ChainMap {
public:
    ChainMap(int n, std::vector<int> values);

    static ChainMap identity(int n);

    // Literal format: comma-separated values, e.g. "2,3,3".
    static ChainMap parse(std::string_view literal);
    std::string str() const;

    int dim() const noexcept { return n_; }
    int apply(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& values() const noexcept { return values_; }

    bool operator==(const ChainMap&) const = default;

private:
    int n_;
    std::vector<int> values_;
};

// Composition in apply-left-first order: (f;g)(i) = g(f(i)). This is the
// product of C_n, matching the postfix action convention used across the
// library.
ChainMap chain_compose(const ChainMap& f, const ChainMap& g);

// Pointwise maximum, the join of C_n. The maximum of two nondecreasing
// extensive maps is again nondecreasing and extensive.
ChainMap chain_join(const ChainMap& f, const ChainMap& g);

}  // namespace aisr
