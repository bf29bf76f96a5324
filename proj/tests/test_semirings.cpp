#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "aisr/carrier.hpp"
#include "aisr/chain.hpp"
#include "aisr/matrix.hpp"
#include "aisr/rng.hpp"
#include "test_util.hpp"

using aisr::BoolMatrix;
using aisr::Carrier;
using aisr::CarrierKind;
using aisr::ChainMap;
using aisr::ElemId;

namespace {

BoolMatrix random_matrix(aisr::SplitMix64& rng, int n, bool reflexive) {
    BoolMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.set(i, j, rng.below(2) == 1);
        if (reflexive) m.set(i, i, true);
    }
    return m;
}

}  // namespace

TEST_CASE("matrix literal parse and str round trip") {
    const BoolMatrix m = BoolMatrix::parse("110;011;001");
    CHECK(m.dim() == 3);
    CHECK(m.get(0, 0));
    CHECK(m.get(0, 1));
    CHECK_FALSE(m.get(0, 2));
    CHECK(m.str() == "110;011;001");
    CHECK(BoolMatrix::parse(m.str()) == m);

    CHECK(BoolMatrix::identity(2).str() == "10;01");
    CHECK(BoolMatrix::parse("1") == BoolMatrix::identity(1));

    CHECK_THROWS_AS(BoolMatrix::parse(""), aisr::Error);
    CHECK_THROWS_AS(BoolMatrix::parse("10;0"), aisr::Error);
    CHECK_THROWS_AS(BoolMatrix::parse("12;01"), aisr::Error);
    CHECK_THROWS_AS(BoolMatrix::parse("10;01;11"), aisr::Error);
}

TEST_CASE("mat_add and mat_mul pinned examples") {
    const BoolMatrix a = BoolMatrix::parse("11;01");
    const BoolMatrix b = BoolMatrix::parse("10;11");
    const BoolMatrix ones = BoolMatrix::parse("11;11");
    CHECK(aisr::mat_add(a, b) == ones);
    CHECK(aisr::mat_mul(a, b) == ones);
    CHECK(aisr::mat_add(a, a) == a);
    CHECK(aisr::mat_add(a, BoolMatrix(2)) == a);
    CHECK(aisr::mat_mul(BoolMatrix::identity(2), a) == a);
    CHECK(aisr::mat_mul(a, BoolMatrix::identity(2)) == a);
    CHECK_THROWS_AS(aisr::mat_mul(a, BoolMatrix::identity(3)), aisr::DimensionMismatch);
    CHECK_THROWS_AS(aisr::mat_add(a, BoolMatrix::identity(3)), aisr::DimensionMismatch);
}

TEST_CASE("matrix operations match the triple-loop oracle") {
    aisr::SplitMix64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        const BoolMatrix a = random_matrix(rng, n, false);
        const BoolMatrix b = random_matrix(rng, n, false);
        CHECK(aisr::mat_mul(a, b) == oracle::mat_mul(a, b));
        CHECK(aisr::mat_add(a, b) == oracle::mat_add(a, b));
    }
}

TEST_CASE("product of reflexive matrices is reflexive and dominates both") {
    aisr::SplitMix64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        const BoolMatrix a = random_matrix(rng, n, true);
        const BoolMatrix b = random_matrix(rng, n, true);
        const BoolMatrix p = aisr::mat_mul(a, b);
        CHECK(oracle::is_reflexive(p));
        // a <= ab and b <= ab entrywise, since the other factor is reflexive.
        CHECK(aisr::mat_add(p, a) == p);
        CHECK(aisr::mat_add(p, b) == p);
    }
}

TEST_CASE("classify pinned examples") {
    const aisr::MatrixClass id3 = aisr::classify(BoolMatrix::identity(3));
    CHECK(id3.reflexive);
    CHECK(id3.upper_triangular);
    CHECK(id3.stair);

    const aisr::MatrixClass gap = aisr::classify(BoolMatrix::parse("101;011;001"));
    CHECK(gap.reflexive);
    CHECK(gap.upper_triangular);
    CHECK_FALSE(gap.stair);

    const aisr::MatrixClass full = aisr::classify(BoolMatrix::parse("11;11"));
    CHECK(full.reflexive);
    CHECK_FALSE(full.upper_triangular);
    CHECK_FALSE(full.stair);

    const aisr::MatrixClass hollow = aisr::classify(BoolMatrix::parse("01;10"));
    CHECK_FALSE(hollow.reflexive);
    CHECK_FALSE(hollow.upper_triangular);
    CHECK_FALSE(hollow.stair);
}

TEST_CASE("classify matches the entrywise oracle and is hereditary") {
    aisr::SplitMix64 rng(8);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(5));
        const BoolMatrix m = random_matrix(rng, n, rng.below(2) == 1);
        const aisr::MatrixClass c = aisr::classify(m);
        CHECK(c.reflexive == oracle::is_reflexive(m));
        CHECK(c.upper_triangular == oracle::is_upper(m));
        CHECK(c.stair == oracle::is_stair(m));
        if (c.stair) CHECK(c.upper_triangular);
        if (c.upper_triangular) CHECK(c.reflexive);
    }
}

TEST_CASE("chain map invariants are enforced") {
    CHECK_NOTHROW(ChainMap(3, {1, 3, 3}));
    CHECK_NOTHROW(ChainMap(3, {1, 2, 3}));
    CHECK_NOTHROW(ChainMap(1, {1}));
    CHECK_THROWS_AS(ChainMap(3, {1, 1, 3}), aisr::NotValidChainMap);   // not extensive
    CHECK_THROWS_AS(ChainMap(3, {3, 2, 3}), aisr::NotValidChainMap);   // not monotone
    CHECK_THROWS_AS(ChainMap(3, {1, 2, 4}), aisr::NotValidChainMap);   // out of range
    CHECK_THROWS_AS(ChainMap(3, {0, 2, 3}), aisr::NotValidChainMap);   // out of range
    CHECK_THROWS_AS(ChainMap(3, {1, 2}), aisr::NotValidChainMap);      // wrong arity
    CHECK(ChainMap::parse("2,3,3").values() == std::vector<int>{2, 3, 3});
    CHECK(ChainMap::parse("2,3,3").str() == "2,3,3");
    CHECK_THROWS_AS(ChainMap::parse(""), aisr::Error);
    CHECK_THROWS_AS(ChainMap::parse("2,,3"), aisr::Error);
    CHECK_THROWS_AS(ChainMap::parse("a,b"), aisr::Error);
}

TEST_CASE("chain compose and join pinned examples") {
    const ChainMap f(3, {1, 3, 3});
    const ChainMap g(3, {2, 2, 3});
    CHECK(aisr::chain_compose(f, g) == ChainMap(3, {2, 3, 3}));
    CHECK(aisr::chain_join(f, g) == ChainMap(3, {2, 3, 3}));

    const ChainMap h(3, {2, 2, 3});
    CHECK(aisr::chain_compose(h, h) == ChainMap(3, {2, 2, 3}));
    CHECK(aisr::chain_compose(f, ChainMap::identity(3)) == f);
    CHECK(aisr::chain_compose(ChainMap::identity(3), f) == f);
    CHECK(aisr::chain_join(f, f) == f);
    CHECK(aisr::chain_join(f, ChainMap::identity(3)) == f);
    CHECK_THROWS_AS(aisr::chain_compose(f, ChainMap::identity(2)), aisr::DimensionMismatch);
    CHECK_THROWS_AS(aisr::chain_join(f, ChainMap::identity(2)), aisr::DimensionMismatch);
}

TEST_CASE("chain operations stay inside C_n") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = oracle::chain_maps(n);
        for (const ChainMap& f : all) {
            for (const ChainMap& g : all) {
                CHECK_NOTHROW(aisr::chain_compose(f, g));
                CHECK_NOTHROW(aisr::chain_join(f, g));
            }
        }
    }
}

TEST_CASE("carrier sizes match the forced counts and the oracle") {
    CHECK(aisr::enumerate_carrier(CarrierKind::R, 2).size() == 4);
    for (int n = 1; n <= 3; ++n) {
        CHECK(aisr::enumerate_carrier(CarrierKind::R, n).size() ==
              oracle::reflexive_matrices(n).size());
    }
    CHECK(aisr::enumerate_carrier(CarrierKind::R, 4, aisr::kDefaultGuard, false).size() == 4096);
    CHECK(aisr::enumerate_carrier(CarrierKind::R, 5, aisr::kDefaultGuard, false).size() ==
          std::size_t{1} << 20);

    const std::size_t u_sizes[] = {1, 2, 8, 64, 1024};
    for (int n = 1; n <= 5; ++n) {
        CHECK(aisr::enumerate_carrier(CarrierKind::U, n).size() == u_sizes[n - 1]);
    }

    const std::size_t catalan[] = {1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n) {
        CHECK(aisr::enumerate_carrier(CarrierKind::C, n).size() == catalan[n - 1]);
        CHECK(aisr::enumerate_carrier(CarrierKind::S, n).size() == catalan[n - 1]);
        CHECK(aisr::enumerate_carrier(CarrierKind::C, n).size() == oracle::chain_maps(n).size());
    }
}

TEST_CASE("guard rejects oversized carriers with a useful count") {
    CHECK_THROWS_AS(aisr::enumerate_carrier(CarrierKind::R, 6), aisr::TooLarge);
    try {
        aisr::enumerate_carrier(CarrierKind::R, 6);
    } catch (const aisr::TooLarge& e) {
        const std::string msg = e.what();
        CHECK(msg.find("1073741824") != std::string::npos);
    }
    CHECK_THROWS_AS(aisr::enumerate_carrier(CarrierKind::U, 8), aisr::TooLarge);
    CHECK_THROWS_AS(aisr::enumerate_carrier(CarrierKind::C, 16), aisr::TooLarge);
    // A tighter guard rejects what the default admits.
    CHECK_THROWS_AS(aisr::enumerate_carrier(CarrierKind::R, 3, 63), aisr::TooLarge);
    CHECK_NOTHROW(aisr::enumerate_carrier(CarrierKind::R, 3, 64));
}

TEST_CASE("carrier enumeration order is canonical") {
    // Matrix kinds: lexicographic on the row-major off-diagonal bit
    // string, so id 0 is the identity matrix and ids follow matrix_less.
    for (const auto kind : {CarrierKind::R, CarrierKind::U}) {
        const Carrier c = aisr::enumerate_carrier(kind, 3);
        CHECK(c.matrix(0) == BoolMatrix::identity(3));
        for (ElemId id = 0; id + 1 < c.size(); ++id) {
            CHECK(aisr::matrix_less(c.matrix(id), c.matrix(id + 1)));
        }
    }
    const Carrier s = aisr::enumerate_carrier(CarrierKind::S, 4);
    for (ElemId id = 0; id + 1 < s.size(); ++id) {
        CHECK(aisr::matrix_less(s.matrix(id), s.matrix(id + 1)));
    }
    const Carrier c4 = aisr::enumerate_carrier(CarrierKind::C, 4);
    CHECK(c4.chain(0) == ChainMap::identity(4));
    for (ElemId id = 0; id + 1 < c4.size(); ++id) {
        CHECK(c4.chain(id).values() < c4.chain(id + 1).values());
    }
}

TEST_CASE("carrier elements round trip through literals and lookups") {
    for (const auto kind : {CarrierKind::R, CarrierKind::U, CarrierKind::S, CarrierKind::C}) {
        for (int n = 1; n <= 3; ++n) {
            const Carrier c = aisr::enumerate_carrier(kind, n);
            std::set<std::string> seen;
            for (ElemId id = 0; id < c.size(); ++id) {
                const std::string lit = c.element_str(id);
                CHECK(seen.insert(lit).second);
                REQUIRE(c.find_literal(lit).has_value());
                CHECK(*c.find_literal(lit) == id);
                if (c.matrix_kind()) {
                    CHECK(*c.find_matrix(c.matrix(id)) == id);
                } else {
                    CHECK(*c.find_chain(c.chain(id)) == id);
                }
            }
        }
    }
}

TEST_CASE("find_matrix rejects matrices outside the family") {
    const Carrier u3 = aisr::enumerate_carrier(CarrierKind::U, 3);
    CHECK_FALSE(u3.find_matrix(BoolMatrix::parse("100;110;001")).has_value());
    CHECK_FALSE(u3.find_matrix(BoolMatrix::parse("000;010;001")).has_value());
    CHECK_FALSE(u3.find_matrix(BoolMatrix::identity(2)).has_value());
    const Carrier s3 = aisr::enumerate_carrier(CarrierKind::S, 3);
    CHECK_FALSE(s3.find_matrix(BoolMatrix::parse("101;011;001")).has_value());
    CHECK(s3.find_matrix(BoolMatrix::parse("110;011;001")).has_value());
}

TEST_CASE("carriers enumerate exactly the defining families") {
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> expected_r;
        std::set<std::string> expected_u;
        std::set<std::string> expected_s;
        for (const BoolMatrix& m : oracle::reflexive_matrices(n)) {
            expected_r.insert(m.str());
            if (oracle::is_upper(m)) expected_u.insert(m.str());
            if (oracle::is_stair(m)) expected_s.insert(m.str());
        }
        std::set<std::string> expected_c;
        for (const ChainMap& f : oracle::chain_maps(n)) expected_c.insert(f.str());

        const auto listing = [](const Carrier& c) {
            std::set<std::string> out;
            for (ElemId id = 0; id < c.size(); ++id) out.insert(c.element_str(id));
            return out;
        };
        CHECK(listing(aisr::enumerate_carrier(CarrierKind::R, n)) == expected_r);
        CHECK(listing(aisr::enumerate_carrier(CarrierKind::U, n)) == expected_u);
        CHECK(listing(aisr::enumerate_carrier(CarrierKind::S, n)) == expected_s);
        CHECK(listing(aisr::enumerate_carrier(CarrierKind::C, n)) == expected_c);
    }
}

TEST_CASE("table and direct operations agree") {
    for (const auto kind : {CarrierKind::R, CarrierKind::U, CarrierKind::S, CarrierKind::C}) {
        const int n = kind == CarrierKind::R ? 3 : 4;
        const Carrier tabled = aisr::enumerate_carrier(kind, n);
        const Carrier direct = aisr::enumerate_carrier(kind, n, aisr::kDefaultGuard, false);
        REQUIRE(tabled.has_tables());
        REQUIRE_FALSE(direct.has_tables());
        REQUIRE(tabled.size() == direct.size());
        for (ElemId a = 0; a < tabled.size(); ++a) {
            for (ElemId b = 0; b < tabled.size(); ++b) {
                CHECK(tabled.add(a, b) == direct.add(a, b));
                CHECK(tabled.mul(a, b) == direct.mul(a, b));
            }
        }
    }
}

TEST_CASE("closure holds exhaustively in carriers up to 4096 elements") {
    const std::pair<CarrierKind, int> cases[] = {
        {CarrierKind::R, 4}, {CarrierKind::U, 4}, {CarrierKind::S, 6}, {CarrierKind::C, 6}};
    for (const auto& [kind, n] : cases) {
        const Carrier c = aisr::enumerate_carrier(kind, n, aisr::kDefaultGuard, false);
        REQUIRE(c.size() <= 4096);
        std::uint64_t violations = 0;
        if (c.matrix_kind()) {
            std::vector<BoolMatrix> elems;
            for (ElemId id = 0; id < c.size(); ++id) elems.push_back(c.matrix(id));
            for (ElemId a = 0; a < c.size(); ++a) {
                for (ElemId b = 0; b < c.size(); ++b) {
                    const auto sum = c.find_matrix(aisr::mat_add(elems[a], elems[b]));
                    const auto prod = c.find_matrix(aisr::mat_mul(elems[a], elems[b]));
                    if (!sum || *sum != c.add(a, b)) ++violations;
                    if (!prod || *prod != c.mul(a, b)) ++violations;
                }
            }
        } else {
            std::vector<ChainMap> elems;
            for (ElemId id = 0; id < c.size(); ++id) elems.push_back(c.chain(id));
            for (ElemId a = 0; a < c.size(); ++a) {
                for (ElemId b = 0; b < c.size(); ++b) {
                    const auto sum = c.find_chain(aisr::chain_join(elems[a], elems[b]));
                    const auto prod = c.find_chain(aisr::chain_compose(elems[a], elems[b]));
                    if (!sum || *sum != c.add(a, b)) ++violations;
                    if (!prod || *prod != c.mul(a, b)) ++violations;
                }
            }
        }
        INFO("kind " << aisr::carrier_kind_name(kind) << " n " << n);
        CHECK(violations == 0);
    }
}

TEST_CASE("semiring laws hold on random triples in large carriers") {
    const std::pair<CarrierKind, int> cases[] = {
        {CarrierKind::R, 4}, {CarrierKind::R, 5}, {CarrierKind::U, 5}, {CarrierKind::S, 7},
        {CarrierKind::C, 7}};
    for (const auto& [kind, n] : cases) {
        const Carrier c = aisr::enumerate_carrier(kind, n, aisr::kDefaultGuard, false);
        aisr::SplitMix64 rng(100 + n);
        std::uint64_t violations = 0;
        for (int trial = 0; trial < 100000; ++trial) {
            const auto x = static_cast<ElemId>(rng.below(c.size()));
            const auto y = static_cast<ElemId>(rng.below(c.size()));
            const auto z = static_cast<ElemId>(rng.below(c.size()));
            if (c.add(x, y) != c.add(y, x)) ++violations;
            if (c.add(x, x) != x) ++violations;
            if (c.add(c.add(x, y), z) != c.add(x, c.add(y, z))) ++violations;
            if (c.mul(c.mul(x, y), z) != c.mul(x, c.mul(y, z))) ++violations;
            if (c.mul(x, c.add(y, z)) != c.add(c.mul(x, y), c.mul(x, z))) ++violations;
            if (c.mul(c.add(y, z), x) != c.add(c.mul(y, x), c.mul(z, x))) ++violations;
        }
        INFO("kind " << aisr::carrier_kind_name(kind) << " n " << n);
        CHECK(violations == 0);
    }
}

TEST_CASE("stair_chain_iso pinned examples and round trips") {
    CHECK(aisr::stair_chain_iso(BoolMatrix::parse("110;011;001")) == ChainMap(3, {2, 3, 3}));
    CHECK(aisr::stair_chain_iso(ChainMap(3, {2, 3, 3})) == BoolMatrix::parse("110;011;001"));
    for (int n = 1; n <= 5; ++n) {
        CHECK(aisr::stair_chain_iso(BoolMatrix::identity(n)) == ChainMap::identity(n));
    }
    CHECK_THROWS_AS(aisr::stair_chain_iso(BoolMatrix::parse("101;011;001")), aisr::NotStair);
    CHECK_THROWS_AS(aisr::stair_chain_iso(BoolMatrix::parse("10;11")), aisr::NotStair);

    for (const ChainMap& f : oracle::chain_maps(4)) {
        CHECK(aisr::stair_chain_iso(aisr::stair_chain_iso(f)) == f);
    }
}

TEST_CASE("stair_chain_iso is a semiring isomorphism aligned with carrier ids") {
    for (int n = 1; n <= 5; ++n) {
        const Carrier s = aisr::enumerate_carrier(CarrierKind::S, n);
        const Carrier c = aisr::enumerate_carrier(CarrierKind::C, n);
        REQUIRE(s.size() == c.size());
        for (ElemId id = 0; id < s.size(); ++id) {
            CHECK(aisr::stair_chain_iso(s.matrix(id)) == c.chain(id));
        }
        for (ElemId a = 0; a < s.size(); ++a) {
            for (ElemId b = 0; b < s.size(); ++b) {
                CHECK(s.add(a, b) == c.add(a, b));
                CHECK(s.mul(a, b) == c.mul(a, b));
                CHECK(aisr::stair_chain_iso(aisr::mat_mul(s.matrix(a), s.matrix(b))) ==
                      aisr::chain_compose(c.chain(a), c.chain(b)));
                CHECK(aisr::stair_chain_iso(aisr::mat_add(s.matrix(a), s.matrix(b))) ==
                      aisr::chain_join(c.chain(a), c.chain(b)));
            }
        }
    }
}
