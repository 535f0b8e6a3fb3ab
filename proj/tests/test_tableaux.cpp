#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreath/tableaux.hpp"
#include "wreath/colored_permutation.hpp"

#include <map>
#include <set>

using namespace wreath;

TEST_CASE("partition enumeration and basics") {
    auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(6).size() == 11);

    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition()) == Partition());
    for (const Partition& lambda : partitions(6)) {
        CHECK(conjugate(conjugate(lambda)) == lambda);
        CHECK(conjugate(lambda).size() == lambda.size());
    }

    CHECK(single_row(0) == Partition());
    CHECK(single_row(4) == Partition({4}));
    CHECK(odd_columns(Partition({2, 1})) == 1);
    CHECK(odd_columns(Partition({3})) == 3);
    CHECK(odd_columns(Partition({1, 1})) == 0);
    CHECK(odd_columns(Partition()) == 0);
}

TEST_CASE("multipartition enumeration") {
    // oracle: pairs of partitions with sizes summing to 2
    CHECK(multipartitions(2, 2).size() == 5);
    CHECK(multipartitions(1, 4).size() == 5);
    CHECK(multipartitions(3, 0).size() == 1);
    std::size_t count = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b)
            count += partitions(a).size() * partitions(b).size() *
                     partitions(3 - a - b).size();
    CHECK(multipartitions(3, 3).size() == count);

    std::set<MultiPartition> dedup;
    for (const auto& mu : multipartitions(3, 3)) {
        CHECK(mu.size() == 3);
        dedup.insert(mu);
    }
    CHECK(dedup.size() == multipartitions(3, 3).size());
}

TEST_CASE("standard multitableaux counting") {
    MultiPartition two_singletons(std::vector<Partition>{Partition({1}), Partition({1})});
    CHECK(standard_multitableaux(two_singletons).size() == 2);
    CHECK(count_standard(two_singletons) == 2);

    MultiPartition row2(std::vector<Partition>{Partition({2}), Partition()});
    CHECK(standard_multitableaux(row2).size() == 1);
    CHECK(count_standard(row2) == 1);

    // oracle: sum of squares over the 5 multipartitions of Fer(2,2) is 1+1+1+1+4
    std::int64_t sum_sq = 0;
    for (const auto& mu : multipartitions(2, 2)) sum_sq += count_standard(mu) * count_standard(mu);
    CHECK(sum_sq == 8);

    // hook-length fast path agrees with direct enumeration
    for (auto [r, n] : {std::pair{1, 5}, std::pair{2, 4}, std::pair{3, 3}}) {
        for (const auto& mu : multipartitions(r, n)) {
            auto listed = standard_multitableaux(mu);
            CHECK(static_cast<std::int64_t>(listed.size()) == count_standard(mu));
            std::set<StandardMultiTableau> dedup(listed.begin(), listed.end());
            CHECK(dedup.size() == listed.size());
            for (const auto& t : listed) CHECK(t.shape() == mu);
        }
    }
}

TEST_CASE("sum rules tie tableaux to the group") {
    for (auto [r, n] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{3, 2}}) {
        std::int64_t squares = 0, straight = 0;
        for (const auto& mu : multipartitions(r, n)) {
            std::int64_t f = count_standard(mu);
            squares += f * f;
            straight += f;
        }
        CHECK(squares == group_order(r, n));
        CHECK(straight ==
              static_cast<std::int64_t>(enumerate_absolute_involutions(r, n).size()));
    }
}

TEST_CASE("classical Robinson-Schensted") {
    auto [p1, q1] = rs_classical({{1, 2}, {1, 2}});
    CHECK(p1 == Tableau({{1, 2}}));
    CHECK(q1 == Tableau({{1, 2}}));

    auto [p2, q2] = rs_classical({{1, 2}, {2, 1}});
    CHECK(p2 == Tableau({{1}, {2}}));
    CHECK(q2 == Tableau({{1}, {2}}));

    auto [p3, q3] = rs_classical({{1, 2, 3}, {2, 3, 1}});
    CHECK(p3 == Tableau({{1, 3}, {2}}));
    CHECK(q3 == Tableau({{1, 2}, {3}}));

    TwoLineArray back = rs_classical_inverse(p3, q3);
    CHECK(back.top == std::vector<int>{1, 2, 3});
    CHECK(back.bottom == std::vector<int>{2, 3, 1});

    CHECK_THROWS_AS(rs_classical({{1, 2}, {2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(rs_classical({{2, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("generalized RSK on window examples") {
    auto [p, q] = rsk(ColoredPermutation::identity(3, 4));
    CHECK(p.component(0) == Tableau(std::vector<std::vector<int>>{{1, 2, 3, 4}}));
    CHECK(p.component(1) == Tableau());
    CHECK(p == q);

    auto [pb, qb] = rsk(parse_window(2, "[-1,2]"));
    CHECK(pb.component(0) == Tableau(std::vector<std::vector<int>>{{2}}));
    CHECK(pb.component(1) == Tableau(std::vector<std::vector<int>>{{1}}));
    CHECK(pb == qb);
    CHECK(pb.shape() ==
          MultiPartition(std::vector<Partition>{Partition({1}), Partition({1})}));
}

TEST_CASE("RSK is a bijection onto same-shape pairs") {
    for (auto [r, n] : {std::pair{2, 3}, std::pair{1, 4}, std::pair{3, 2}}) {
        std::set<std::pair<StandardMultiTableau, StandardMultiTableau>> images;
        for (const auto& g : enumerate_group(r, n)) {
            auto [p, q] = rsk(g);
            CHECK(p.shape() == q.shape());
            images.insert({p, q});
            CHECK(inverse_rsk(p, q, r) == g);
        }
        CHECK(images.size() == static_cast<std::size_t>(group_order(r, n)));
        // image is every same-shape pair
        std::int64_t pairs = 0;
        for (const auto& mu : multipartitions(r, n)) {
            std::int64_t f = count_standard(mu);
            pairs += f * f;
        }
        CHECK(static_cast<std::int64_t>(images.size()) == pairs);
    }
}

TEST_CASE("P = Q exactly on absolute involutions") {
    for (auto [r, n] : {std::pair{2, 3}, std::pair{3, 2}}) {
        for (const auto& g : enumerate_group(r, n)) {
            auto [p, q] = rsk(g);
            CHECK((p == q) == is_absolute_involution(g));
        }
    }
}

TEST_CASE("equal tableau pairs invert to absolute involutions") {
    for (const auto& mu : multipartitions(2, 3))
        for (const auto& t : standard_multitableaux(mu))
            CHECK(is_absolute_involution(inverse_rsk(t, t, 2)));
}

TEST_CASE("inverse_rsk validates shapes") {
    auto [p, q] = rsk(parse_window(2, "[-1,2]"));
    auto [p2, q2] = rsk(parse_window(2, "[1,2]"));
    CHECK_THROWS_AS(inverse_rsk(p, q2, 2), std::invalid_argument);
}

TEST_CASE("shape_of and the fixed-point/odd-column law") {
    CHECK(shape_of(ColoredPermutation::identity(2, 5)) ==
          MultiPartition(std::vector<Partition>{Partition({5}), Partition()}));

    ColoredPermutation v = parse_window(2, "[-3,2,-1,8,-9,-6,7,4,-5]");
    MultiPartition sh = shape_of(v);
    CHECK(sh.component(0).size() == 4);
    CHECK(odd_columns(sh.component(0)) == 2);
    CHECK(sh.component(1).size() == 5);
    CHECK(odd_columns(sh.component(1)) == 1);

    CHECK_THROWS_AS(shape_of(parse_window(1, "[2,3,1]")), std::invalid_argument);

    // exhaustive law across I(2,4)
    for (const auto& u : enumerate_absolute_involutions(2, 4)) {
        MultiPartition mu = shape_of(u);
        for (int c = 0; c < 2; ++c) {
            CHECK(mu.component(c).size() == fix_stat(u, c) + 2 * pair_stat(u, c));
            CHECK(odd_columns(mu.component(c)) == fix_stat(u, c));
        }
    }
}
