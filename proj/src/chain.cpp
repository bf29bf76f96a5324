#include "aisr/chain.hpp"

#include <algorithm>

namespace aisr {

ChainMap::ChainMap(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw NotValidChainMap("chain size must be >= 1");
    if (static_cast<int>(values_.size()) != n) {
        throw NotValidChainMap("expected " + std::to_string(n) + " values, got " +
                               std::to_string(values_.size()));
    }
    for (int i = 1; i <= n; ++i) {
        const int v = values_[static_cast<std::size_t>(i - 1)];
        if (v < i || v > n) {
            throw NotValidChainMap("value f(" + std::to_string(i) + ")=" + std::to_string(v) +
                                   " violates extensiveness or the range [1," + std::to_string(n) + "]");
        }
        if (i > 1 && v < values_[static_cast<std::size_t>(i - 2)]) {
            throw NotValidChainMap("values must be nondecreasing (order preservation), f(" +
                                   std::to_string(i) + ") < f(" + std::to_string(i - 1) + ")");
        }
    }
}

ChainMap ChainMap::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return ChainMap(n, std::move(v));
}

ChainMap ChainMap::parse(std::string_view literal) {
    std::vector<int> vals;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = literal.find(',', start);
        const std::string_view piece =
            literal.substr(start, comma == std::string_view::npos ? comma : comma - start);
        if (piece.empty()) throw NotValidChainMap("empty value in chain map literal");
        int v = 0;
        for (char c : piece) {
            if (c < '0' || c > '9') throw NotValidChainMap("chain map values must be integers");
            v = v * 10 + (c - '0');
            if (v > 1'000'000) throw NotValidChainMap("chain map value out of range");
        }
        vals.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    const int n = static_cast<int>(vals.size());
    return ChainMap(n, std::move(vals));
}

std::string ChainMap::str() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        if (i > 0) out.push_back(',');
        out += std::to_string(values_[static_cast<std::size_t>(i)]);
    }
    return out;
}

namespace {

void require_same_dim(const ChainMap& f, const ChainMap& g) {
    if (f.dim() != g.dim()) {
        throw DimensionMismatch("chain sizes differ: " + std::to_string(f.dim()) + " vs " +
                                std::to_string(g.dim()));
    }
}

}  // namespace

ChainMap chain_compose(const ChainMap& f, const ChainMap& g) {
    require_same_dim(f, g);
    std::vector<int> v(static_cast<std::size_t>(f.dim()));
    for (int i = 1; i <= f.dim(); ++i) v[static_cast<std::size_t>(i - 1)] = g.apply(f.apply(i));
    return ChainMap(f.dim(), std::move(v));
}

ChainMap chain_join(const ChainMap& f, const ChainMap& g) {
    require_same_dim(f, g);
    std::vector<int> v(static_cast<std::size_t>(f.dim()));
    for (int i = 1; i <= f.dim(); ++i) {
        v[static_cast<std::size_t>(i - 1)] = std::max(f.apply(i), g.apply(i));
    }
    return ChainMap(f.dim(), std::move(v));
}

}  // namespace aisr
