#include <doctest.h>

#include <gcoh/gmodule.hpp>

#include <set>

using namespace gcoh;
using exactla::IntMatrix;
using exactla::Ring;

TEST_CASE("sign module over Z/2") {
    auto c2 = cyclic_group(2);
    auto neg = IntMatrix::from_rows(Ring::z(), {{-1}});
    auto m = module_from_generators(c2, {Int(0)}, {neg});
    CHECK(m.rank() == 1);
    CHECK(!m.is_finite());
    CHECK(m.act(1, {Int(5)}) == std::vector<Int>{-5});
    CHECK(m.act(0, {Int(5)}) == std::vector<Int>{5});
    Int p;
    int k;
    CHECK(!m.p_primary(&p, &k));
}

TEST_CASE("mu4 as a module: inversion action on Z/4") {
    auto c2 = cyclic_group(2);
    auto neg = IntMatrix::from_rows(Ring::z(), {{-1}});
    auto m = module_from_generators(c2, {Int(4)}, {neg});
    CHECK(m.act(1, {Int(1)}) == std::vector<Int>{3});
    CHECK(m.act(1, {Int(3)}) == std::vector<Int>{1});
    Int p;
    int k;
    CHECK(m.p_primary(&p, &k));
    CHECK(p == 2);
    CHECK(k == 2);
}

TEST_CASE("invalid actions are rejected") {
    auto c2 = cyclic_group(2);
    // not an involution
    auto twice = IntMatrix::from_rows(Ring::z(), {{2}});
    CHECK_THROWS_AS(module_from_generators(c2, {Int(0)}, {twice}), InputError);
    // map not respecting orders: Z/2 -> Z/4 by 1 is not well-defined under x2
    auto c1 = cyclic_group(2);
    auto ok = module_from_generators(c1, {Int(2)}, {IntMatrix::from_rows(Ring::z(), {{1}})});
    auto tg = module_from_generators(c1, {Int(4)}, {IntMatrix::from_rows(Ring::z(), {{1}})});
    GModuleMap bad{ok, tg, IntMatrix::from_rows(Ring::z(), {{1}})};
    CHECK_THROWS_AS(bad.validate(), InputError);
    GModuleMap good{ok, tg, IntMatrix::from_rows(Ring::z(), {{2}})};
    good.validate();
}

TEST_CASE("permutation module of S3 on cosets of a point stabilizer") {
    auto s3 = symmetric_group(3);
    // order-2 subgroup: pick any transposition
    std::vector<int> stab;
    for (int e = 0; e < 6; ++e)
        if (s3->order_of(e) <= 2 && static_cast<int>(stab.size()) < 2) stab.push_back(e);
    auto m = permutation_module(s3, stab, Ring::z());
    CHECK(m.rank() == 3);
    // permutation matrices: every column has a single 1
    for (int g = 0; g < 6; ++g) {
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int i = 0; i < 3; ++i) {
                CHECK(m.action[g].at(i, j) >= 0);
                s += m.action[g].at(i, j);
            }
            CHECK(s == 1);
        }
    }
    // the action is transitive: some g moves coset 0 to each position
    std::set<int> hit;
    for (int g = 0; g < 6; ++g)
        for (int i = 0; i < 3; ++i)
            if (m.action[g].at(i, 0) == 1) hit.insert(i);
    CHECK(hit.size() == 3);
}

TEST_CASE("quotient by a stable sublattice") {
    // Z^2 with swap action; quotient by the diagonal (1,1) gives Z with sign-like action
    auto c2 = cyclic_group(2);
    auto swap = IntMatrix::from_rows(Ring::z(), {{0, 1}, {1, 0}});
    auto m = module_from_generators(c2, {Int(0), Int(0)}, {swap});
    IntMatrix diag(Ring::z(), 2, 1);
    diag.at(0, 0) = 1;
    diag.at(1, 0) = 1;
    auto q = quotient_module(m, diag);
    CHECK(q.quo.rank() == 1);
    CHECK(q.quo.orders == std::vector<Int>{0});
    // swap acts by -1 on the quotient: (x, y) -> (y, x) = -(x, y) + (x+y)(1,1)
    CHECK(q.quo.action[1].at(0, 0) == -1);
    // projection of (1,0) and section roundtrip
    auto c = q.proj.apply({Int(1), Int(0)});
    CHECK(q.proj.apply(q.sect.apply(c)) == c);

    // non-stable lattice rejected: span of (1,0) is not swap-stable
    IntMatrix e0(Ring::z(), 2, 1);
    e0.at(0, 0) = 1;
    CHECK_THROWS_AS(quotient_module(m, e0), InputError);
}

TEST_CASE("quotient with torsion orders") {
    // (Z/4)^2 swap action, quotient by (2,2)
    auto c2 = cyclic_group(2);
    auto swap = IntMatrix::from_rows(Ring::z(), {{0, 1}, {1, 0}});
    auto m = module_from_generators(c2, {Int(4), Int(4)}, {swap});
    IntMatrix rel(Ring::z(), 2, 1);
    rel.at(0, 0) = 2;
    rel.at(1, 0) = 2;
    auto q = quotient_module(m, rel);
    std::multiset<Int> orders(q.quo.orders.begin(), q.quo.orders.end());
    CHECK(orders == std::multiset<Int>{2, 4});
}
