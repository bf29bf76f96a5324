#include "aisr/representation.hpp"

#include <algorithm>
#include <bit>

#include "aisr/rng.hpp"

namespace aisr {

BoolVector::BoolVector(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > 32) throw Error("vector dimension must be in [1, 32]");
    const std::uint32_t mask = n == 32 ? ~0u : (1u << n) - 1u;
    if ((bits & ~mask) != 0) throw Error("vector has bits beyond its dimension");
    if (bits == 0) throw Error("the zero vector is excluded from Q");
}

BoolVector BoolVector::parse(std::string_view literal) {
    if (literal.empty() || literal.size() > 32) throw Error("vector literal must have 1..32 characters");
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < literal.size(); ++i) {
        if (literal[i] == '1') bits |= 1u << i;
        else if (literal[i] != '0') throw Error("vector literal entries must be 0 or 1");
    }
    return BoolVector(static_cast<int>(literal.size()), bits);
}

std::string BoolVector::str() const {
    std::string out;
    for (int i = 0; i < n_; ++i) out.push_back(get(i) ? '1' : '0');
    return out;
}

BoolVector act(const BoolVector& q, const BoolMatrix& a) {
    if (q.dim() != a.dim()) {
        throw DimensionMismatch("vector dimension " + std::to_string(q.dim()) +
                                " does not match matrix dimension " + std::to_string(a.dim()));
    }
    if (!classify(a).reflexive) throw NotReflexive("the action is defined for reflexive matrices only");
    std::uint32_t bits = q.bits();
    std::uint32_t out = 0;
    while (bits != 0) {
        out |= a.row(std::countr_zero(bits));
        bits &= bits - 1;
    }
    return BoolVector(q.dim(), out);
}

namespace {

// Raw kernel of act(): OR of the rows selected by q.
std::uint32_t act_bits(std::uint32_t q, const BoolMatrix& a) {
    std::uint32_t out = 0;
    while (q != 0) {
        out |= a.row(std::countr_zero(q));
        q &= q - 1;
    }
    return out;
}

std::string vec_str(int n, std::uint32_t bits) { return BoolVector(n, bits).str(); }

}  // namespace

RepresentationReport verify_representation(int n, RepMode mode, std::uint64_t seed,
                                           std::uint64_t samples, std::uint64_t guard) {
    RepresentationReport rep;
    rep.n = n;
    rep.mode = mode;
    if (mode == RepMode::random) {
        rep.seed = seed;
        rep.samples = samples;
    }
    if (n > 31) throw Error("verify_representation supports n <= 31");

    const Carrier carrier = enumerate_carrier(CarrierKind::R, n, guard, /*build_tables=*/false);
    const std::size_t m = carrier.size();
    std::vector<BoolMatrix> mats;
    mats.reserve(m);
    for (ElemId id = 0; id < m; ++id) mats.push_back(carrier.matrix(id));

    const std::uint32_t full = (1u << n) - 1u;

    auto fail = [&](RepCounterexample ce) {
        rep.counterexample = std::move(ce);
    };

    // Faithfulness: e_i.a is exactly row i of a, so two matrices that
    // differ at all are separated by some basis vector. Verified in two
    // exhaustive steps: the readout e_i.a = row_i(a) for every a, and
    // pairwise distinctness of the row arrays (neighbors after sorting).
    rep.faithful = true;
    for (std::size_t x = 0; x < m && rep.faithful; ++x) {
        for (int i = 0; i < n; ++i) {
            if (act_bits(1u << i, mats[x]) != mats[x].row(i)) {
                rep.faithful = false;
                fail({"faithful", vec_str(n, 1u << i), "", mats[x].str(), ""});
                break;
            }
        }
    }
    if (rep.faithful) {
        std::vector<ElemId> order(m);
        for (std::size_t x = 0; x < m; ++x) order[x] = static_cast<ElemId>(x);
        const auto row_less = [&](ElemId x, ElemId y) {
            for (int i = 0; i < n; ++i) {
                if (mats[x].row(i) != mats[y].row(i)) return mats[x].row(i) < mats[y].row(i);
            }
            return false;
        };
        std::sort(order.begin(), order.end(), row_less);
        for (std::size_t x = 0; x + 1 < m; ++x) {
            if (!row_less(order[x], order[x + 1]) && !row_less(order[x + 1], order[x])) {
                rep.faithful = false;
                fail({"faithful", "", "", mats[order[x]].str(), mats[order[x + 1]].str()});
                break;
            }
        }
    }

    // Longest chain in <Q, <=>: strict componentwise growth raises the
    // popcount, so no chain can have more than n elements; the witness
    // e_1 < e_1+e_2 < ... < (1,...,1) realizes n.
    bool chain_ok = true;
    for (std::uint32_t q = 1; q <= full && chain_ok; ++q) {
        for (std::uint32_t p = 1; p < q; ++p) {
            const bool strictly_below = (p & q) == p;  // p <= q, p != q
            if (strictly_below && std::popcount(p) >= std::popcount(q)) {
                chain_ok = false;
                fail({"chain_length", vec_str(n, p), vec_str(n, q), "", ""});
                break;
            }
        }
    }
    std::uint32_t witness = 0;
    for (int i = 0; i < n && chain_ok; ++i) {
        const std::uint32_t next = witness | (1u << i);
        if (std::popcount(next) != i + 1) chain_ok = false;
        witness = next;
    }
    rep.longest_chain_length = chain_ok ? n : 0;

    rep.extensive = true;
    rep.order_preserving = true;
    rep.join_compatible = true;

    auto check_extensive = [&](std::uint32_t q, std::size_t a) {
        const std::uint32_t qa = act_bits(q, mats[a]);
        if ((q & qa) != q) {
            rep.extensive = false;
            fail({"extensive", vec_str(n, q), "", mats[a].str(), ""});
            return false;
        }
        return true;
    };
    auto check_monotone = [&](std::uint32_t q, std::uint32_t q2, std::size_t a) {
        // q <= q2 must give q.a <= q2.a
        const std::uint32_t qa = act_bits(q, mats[a]);
        const std::uint32_t q2a = act_bits(q2, mats[a]);
        if ((qa & q2a) != qa) {
            rep.order_preserving = false;
            fail({"order_preserving", vec_str(n, q), vec_str(n, q2), mats[a].str(), ""});
            return false;
        }
        return true;
    };
    auto check_join = [&](std::uint32_t q, std::size_t a, std::size_t b) {
        const BoolMatrix sum = mat_add(mats[a], mats[b]);
        if (act_bits(q, sum) != (act_bits(q, mats[a]) | act_bits(q, mats[b]))) {
            rep.join_compatible = false;
            fail({"join_compatible", vec_str(n, q), "", mats[a].str(), mats[b].str()});
            return false;
        }
        return true;
    };

    if (mode == RepMode::exhaustive) {
        for (std::size_t a = 0; a < m && rep.extensive; ++a) {
            for (std::uint32_t q = 1; q <= full; ++q) {
                if (!check_extensive(q, a)) break;
            }
        }
        // Enumerate pairs q <= q2 as submasks of q2.
        for (std::size_t a = 0; a < m && rep.order_preserving; ++a) {
            for (std::uint32_t q2 = 1; q2 <= full; ++q2) {
                for (std::uint32_t q = q2; q != 0; q = (q - 1) & q2) {
                    if (!check_monotone(q, q2, a)) break;
                }
                if (!rep.order_preserving) break;
            }
        }
        for (std::size_t a = 0; a < m && rep.join_compatible; ++a) {
            for (std::size_t b = 0; b < m && rep.join_compatible; ++b) {
                for (std::uint32_t q = 1; q <= full; ++q) {
                    if (!check_join(q, a, b)) break;
                }
            }
        }
    } else {
        for (std::uint64_t s = 0; s < samples; ++s) {
            SplitMix64 rng(SplitMix64::substream(seed, s));
            const std::uint32_t q = 1u + static_cast<std::uint32_t>(rng.below(full));
            const std::uint32_t q2 = q | (1u + static_cast<std::uint32_t>(rng.below(full)));
            const auto a = static_cast<std::size_t>(rng.below(m));
            const auto b = static_cast<std::size_t>(rng.below(m));
            if (!check_extensive(q, a)) break;
            if (!check_monotone(q, q2, a)) break;
            if (!check_join(q, a, b)) break;
        }
    }

    return rep;
}

}  // namespace aisr
