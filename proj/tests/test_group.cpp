#include <doctest.h>

#include <gcoh/group.hpp>

#include <set>

using namespace gcoh;

TEST_CASE("cyclic groups") {
    auto g = cyclic_group(6);
    CHECK(g->size() == 6);
    CHECK(g->is_abelian());
    std::set<int> orders;
    for (int e = 0; e < 6; ++e) orders.insert(g->order_of(e));
    CHECK(orders == std::set<int>{1, 2, 3, 6});
    for (int e = 0; e < 6; ++e) CHECK(g->mul(e, g->inv(e)) == 0);
    auto g20 = cyclic_group(20);  // table path
    CHECK(g20->size() == 20);
    CHECK(g20->order_of(1) == 20);
}

TEST_CASE("symmetric and dihedral groups") {
    auto s3 = symmetric_group(3);
    CHECK(s3->size() == 6);
    CHECK(!s3->is_abelian());
    auto s4 = symmetric_group(4);
    CHECK(s4->size() == 24);
    auto d4 = dihedral_group(4);
    CHECK(d4->size() == 8);
    CHECK(!d4->is_abelian());
    auto v4 = klein_four_group();
    CHECK(v4->size() == 4);
    CHECK(v4->is_abelian());
    for (int e = 1; e < 4; ++e) CHECK(v4->order_of(e) == 2);
}

TEST_CASE("gl3_f2 has order 168 with elements of order 7") {
    auto g = gl3_f2();
    CHECK(g->size() == 168);
    std::set<int> orders;
    for (int e = 0; e < g->size(); ++e) orders.insert(g->order_of(e));
    CHECK(orders == std::set<int>{1, 2, 3, 4, 7});
}

TEST_CASE("word data reconstructs elements") {
    auto g = symmetric_group(4);
    const auto& word = g->word_data();
    const auto& gens = g->generators();
    for (int e = 1; e < g->size(); ++e) {
        auto [parent, gi] = word[e];
        CHECK(g->mul(gens[gi], parent) == e);
    }
}

TEST_CASE("from_table validates group axioms") {
    // Z/3 is fine
    CHECK(FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}).size() == 3);
    // latin square with identity but no two-sided inverses / associativity
    std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                          {1, 0, 3, 4, 2},
                                          {2, 3, 4, 0, 1},
                                          {3, 4, 1, 2, 0},
                                          {4, 2, 0, 1, 3}};
    CHECK_THROWS_AS(FiniteGroup::from_table(loop), InputError);
    // identity must be element 0
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InputError);
    // broken latin square
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
}

TEST_CASE("subgroups of S3") {
    auto s3 = symmetric_group(3);
    auto subs = s3->subgroups();
    CHECK(subs.size() == 6);  // 1 + three Z/2 + Z/3 + S3
    int by_size[7] = {0};
    for (const auto& h : subs) by_size[h.size()]++;
    CHECK(by_size[1] == 1);
    CHECK(by_size[2] == 3);
    CHECK(by_size[3] == 1);
    CHECK(by_size[6] == 1);
}
