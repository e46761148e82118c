#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "detsum/dimension.hpp"
#include "detsum/rng.hpp"

using namespace detsum;

namespace {

const std::vector<std::vector<long long>> kPaperAPrime = {
    {5, 6, 8, 9}, {5, 6, 8, 9}, {2, 3, 5, 6}};

DegreeMatrix all_ones_rect(int k) {
    return DegreeMatrix::validate(std::vector<std::vector<long long>>(
        static_cast<std::size_t>(k - 1), std::vector<long long>(static_cast<std::size_t>(k), 1)));
}

DegreeMatrix random_ordered_clean(Rng& rng, int rows, int cols, long long offset_max) {
    std::vector<long long> r(rows), c(cols);
    for (auto& v : r) v = static_cast<long long>(rng.below(offset_max + 1));
    for (auto& v : c) v = static_cast<long long>(rng.below(offset_max + 1));
    std::sort(r.begin(), r.end(), std::greater<>());
    std::sort(c.begin(), c.end());
    std::vector<std::vector<long long>> g(rows, std::vector<long long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g[i][j] = r[i] + c[j];
    return DegreeMatrix::validate(g);
}

}  // namespace

TEST_CASE("clamped binomials") {
    CHECK(clamped_binomial(5, 2) == 10);
    CHECK(clamped_binomial(2, 2) == 1);
    CHECK(clamped_binomial(1, 2) == 0);
    CHECK(clamped_binomial(-3, 2) == 0);
    CHECK(clamped_binomial(0, 0) == 1);
    CHECK(clamped_binomial(63, 3) == 39711);
}

TEST_CASE("resolution degrees") {
    SUBCASE("the worked 3 x 4 matrix") {
        const auto res = resolution_degrees(DegreeMatrix::validate(kPaperAPrime));
        CHECK(res.generator_degrees == std::vector<long long>{20, 19, 17, 16});
        CHECK(res.syzygy_degrees == std::vector<long long>{25, 25, 22});
        CHECK(res.max_syzygy_degree() == 25);
    }
    SUBCASE("all-1 matrices") {
        for (int k = 2; k <= 6; ++k) {
            const auto res = resolution_degrees(all_ones_rect(k));
            CHECK(res.generator_degrees ==
                  std::vector<long long>(static_cast<std::size_t>(k), k - 1));
            CHECK(res.syzygy_degrees ==
                  std::vector<long long>(static_cast<std::size_t>(k - 1), k));
        }
    }
    SUBCASE("1 x 2 complete intersection") {
        const auto res = resolution_degrees(DegreeMatrix::validate({{2, 3}}));
        CHECK(res.generator_degrees == std::vector<long long>{3, 2});
        CHECK(res.syzygy_degrees == std::vector<long long>{5});
    }
    SUBCASE("square input is rejected") {
        CHECK_THROWS_AS(resolution_degrees(DegreeMatrix::validate({{1, 1}, {1, 1}})),
                        std::invalid_argument);
    }
}

TEST_CASE("the largest syzygy degree is T on random shapes") {
    Rng rng(41);
    for (int t = 0; t < 60; ++t) {
        const int k = 2 + static_cast<int>(rng.below(4));
        const DegreeMatrix a = random_ordered_clean(rng, k - 1, k, 6);
        CHECK(resolution_degrees(a).max_syzygy_degree() == a.big_T());
    }
}

TEST_CASE("point counts") {
    CHECK(point_count(all_ones_rect(3)) == 3);  // twisted cubic hyperplane section
    CHECK(point_count(DegreeMatrix::validate({{2, 3}})) == 6);
    CHECK(point_count(DegreeMatrix::validate(kPaperAPrime)) == 214);
    for (int k = 2; k <= 8; ++k)
        CHECK(point_count(all_ones_rect(k)) == clamped_binomial(k, 2));
}

TEST_CASE("sections of the twisted ideal sheaf") {
    for (int k = 2; k <= 8; ++k)
        CHECK(h0_ideal_sheaf(all_ones_rect(k), k) == 3 * k + 1);
    CHECK(h0_ideal_sheaf(all_ones_rect(3), 1) == 0);  // below the least generator degree
    CHECK(h0_ideal_sheaf(DegreeMatrix::validate({{2, 3}}), 3) == 5);
}

TEST_CASE("curve degree and genus") {
    SUBCASE("twisted cubic") {
        const auto inv = curve_degree_and_genus(all_ones_rect(3));
        CHECK(inv.degree == 3);
        CHECK(inv.genus == 0);
    }
    SUBCASE("(2,3) complete intersection") {
        const auto inv = curve_degree_and_genus(DegreeMatrix::validate({{2, 3}}));
        CHECK(inv.degree == 6);
        CHECK(inv.genus == 4);
    }
    SUBCASE("the linear family's Hilbert scheme dimension is 4 deg") {
        const int k = 3;
        const auto rep = dimension_report_linear(k);
        CHECK(*rep.dim_hilb == 4 * curve_degree_and_genus(all_ones_rect(k)).degree);
    }
    SUBCASE("curve degree equals the plane point count on random shapes") {
        Rng rng(42);
        for (int t = 0; t < 40; ++t) {
            const int k = 2 + static_cast<int>(rng.below(4));
            const DegreeMatrix a = random_ordered_clean(rng, k - 1, k, 4);
            CHECK(curve_degree_and_genus(a).degree == point_count(a));
        }
    }
}

TEST_CASE("cube family reports") {
    SUBCASE("a = 1: the variety already fills the cubics") {
        const auto rep = dimension_report_all_equal(3, 1);
        CHECK(rep.theta == 19);
        CHECK(rep.dim_V == 19);
        CHECK(rep.expected_s == 1);
    }
    SUBCASE("a = 2") {
        const auto rep = dimension_report_all_equal(3, 2);
        CHECK(rep.theta == 83);
        CHECK(rep.dim_V == 73);
        CHECK(rep.expected_s == 2);
    }
    SUBCASE("expected summand transitions at a = 2 and a = 9") {
        for (long long a = 1; a <= 12; ++a) {
            const auto rep = dimension_report_all_equal(3, a);
            const long long expect = a == 1 ? 1 : (a <= 8 ? 2 : 3);
            CHECK(rep.expected_s == expect);
        }
    }
    SUBCASE("no closed form outside k = 3") {
        CHECK_THROWS_AS(dimension_report_all_equal(4, 2), std::invalid_argument);
        CHECK_THROWS_AS(dimension_report_all_equal(2, 2), std::invalid_argument);
    }
}

TEST_CASE("linear family reports") {
    SUBCASE("k = 3 matches the cubic case") {
        const auto rep = dimension_report_linear(3);
        CHECK(rep.theta == 19);
        CHECK(rep.dim_V == 19);
        CHECK(*rep.dim_hilb == 12);
        CHECK(*rep.fiber_dim == 9);
        CHECK(*rep.dim_Z == 21);
        CHECK(rep.expected_s == 1);
        CHECK(*rep.conjecture_s == 1);
    }
    SUBCASE("k = 4") {
        const auto rep = dimension_report_linear(4);
        CHECK(rep.dim_V == 33);
        CHECK(*rep.conjecture_s == 2);
    }
    SUBCASE("structure identities and the below-k bound") {
        for (int k = 2; k <= 20; ++k) {
            const auto rep = dimension_report_linear(k);
            CHECK(rep.dim_V == 2ll * k * k + 1);
            CHECK(*rep.dim_Z == *rep.dim_hilb + *rep.fiber_dim);
            CHECK(*rep.conjecture_s < k);
            CHECK(*rep.conjecture_s >= 1);
        }
    }
    CHECK_THROWS_AS(dimension_report_linear(1), std::invalid_argument);
}

TEST_CASE("coarse count bound") {
    SUBCASE("two summands cannot cover 3 x 3 all-20") {
        const auto b2 = asymptotic_bound(3, 2, 20, 4);
        CHECK(b2.lhs == 9 * 2 * clamped_binomial(23, 3));
        CHECK(b2.rhs == clamped_binomial(63, 3));
        CHECK(b2.lhs < b2.rhs);
        const auto b3 = asymptotic_bound(3, 3, 20, 4);
        CHECK(b3.lhs >= b3.rhs);
        CHECK(b3.threshold_s == 3);
    }
    SUBCASE("five variables approach k^2 for 2 x 2 matrices") {
        CHECK(asymptotic_bound(2, 1, 200, 5).threshold_s == 4);
        CHECK(asymptotic_bound(2, 1, 2000, 5).threshold_s == 4);
    }
}
