#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "detsum/dimension.hpp"
#include "detsum/form_matrix.hpp"
#include "detsum/ideal.hpp"

using namespace detsum;

namespace {

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

// Materialize-then-rank oracle for the streaming reducer.
std::size_t materialized_rank(const GeneratorSet& gens, long long d, const PrimeField& f) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const Form& g : gens.generators()) {
        if (g.degree() > d) continue;
        for (Form& prod : monomial_multiples(g, static_cast<int>(d)))
            rows.push_back(std::move(prod).release_coeffs());
    }
    const std::size_t cols = MonomialBasis::get(gens.n_vars(), static_cast<int>(d)).size();
    CoefficientMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    return rank(m, f);
}

}  // namespace

TEST_CASE("the unit generator fills every degree") {
    const PrimeField f;
    GeneratorSet gens(3);
    gens.add(Form::constant(3, 1));
    for (long long d : {0, 1, 4}) {
        const RankReport r = ideal_dimension_in_degree(gens, d, f);
        CHECK(r.full);
        CHECK(r.achieved_rank == r.ambient_dim);
        CHECK(hilbert_function(gens, d, f) == 0);
    }
}

TEST_CASE("a single square generator: x^2 in degree 3") {
    const PrimeField f;
    GeneratorSet gens(3);
    const std::uint8_t e[3] = {2, 0, 0};
    gens.add(Form::monomial(3, e, 1));
    const RankReport r = ideal_dimension_in_degree(gens, 3, f);
    CHECK(r.achieved_rank == 3);  // x^3, x^2 y, x^2 z
    CHECK(r.ambient_dim == 10);
    CHECK_FALSE(r.full);
}

TEST_CASE("one matrix of quadrics never fills the sextics") {
    const PrimeField f;
    Rng rng(21);
    const DegreeMatrix a = DegreeMatrix::validate({{2, 2, 2}, {2, 2, 2}, {2, 2, 2}});
    GeneratorSet gens(4);
    gens.add_all(submaximal_minors(FormMatrix::random(a, 4, f, rng), f));
    const RankReport r = ideal_dimension_in_degree(gens, 6, f);
    CHECK(r.ambient_dim == 84);
    CHECK_FALSE(r.full);
    CHECK(r.achieved_rank == materialized_rank(gens, 6, f));
}

TEST_CASE("empty generator sets leave the whole slice") {
    const PrimeField f;
    const GeneratorSet gens(3);
    CHECK(hilbert_function(gens, 2, f) == 6);
    CHECK(ideal_dimension_in_degree(gens, 2, f).achieved_rank == 0);
}

TEST_CASE("streaming rank equals the materialized oracle") {
    const PrimeField f;
    Rng rng(22);
    for (int t = 0; t < 15; ++t) {
        GeneratorSet gens(3);
        const int count = 1 + static_cast<int>(rng.below(4));
        for (int i = 0; i < count; ++i)
            gens.add(random_form(3, 1 + static_cast<int>(rng.below(3)), f, rng));
        const long long d = 2 + static_cast<long long>(rng.below(4));
        const RankReport r = ideal_dimension_in_degree(gens, d, f);
        CHECK(r.achieved_rank == materialized_rank(gens, d, f));
        CHECK(r.ambient_dim ==
              r.achieved_rank + hilbert_function(gens, d, f));
    }
}

TEST_CASE("appending generators never decreases the rank") {
    const PrimeField f;
    Rng rng(23);
    for (int t = 0; t < 15; ++t) {
        GeneratorSet small(4), big(4);
        const Form g1 = random_form(4, 2, f, rng);
        const Form g2 = random_form(4, 3, f, rng);
        small.add(g1);
        big.add(g1);
        big.add(g2);
        const long long d = 4;
        CHECK(ideal_dimension_in_degree(big, d, f).achieved_rank >=
              ideal_dimension_in_degree(small, d, f).achieved_rank);
    }
}

TEST_CASE("minors of one general matrix reach the predicted point count") {
    const PrimeField f;
    Rng rng(24);
    const DegreeMatrix a =
        DegreeMatrix::validate({{5, 6, 8, 9}, {5, 6, 8, 9}, {2, 3, 5, 6}});
    GeneratorSet gens(3);
    gens.add_all(maximal_minors(FormMatrix::random(a, 3, f, rng), f));
    CHECK(hilbert_function(gens, 25, f) ==
          static_cast<std::size_t>(point_count(a)));
    CHECK(point_count(a) == 214);
}

TEST_CASE("stabilized values match the point count for random ternary shapes") {
    const PrimeField f;
    Rng rng(25);
    for (int t = 0; t < 8; ++t) {
        const int k = 2 + static_cast<int>(rng.below(3));
        const DegreeMatrix a = random_ordered_clean(rng, k - 1, k, 2);
        GeneratorSet gens(3);
        gens.add_all(maximal_minors(FormMatrix::random(a, 3, f, rng), f));
        const long long T = a.big_T();
        const auto points = static_cast<std::size_t>(point_count(a));
        for (long long d = std::max(0ll, T - 2); d <= T; ++d)
            CHECK(hilbert_function(gens, d, f) == points);
    }
}

TEST_CASE("multiplication by a general linear form") {
    const PrimeField f;
    SUBCASE("with no generators, degree 1 can only reach one dimension") {
        Rng rng(26);
        const GeneratorSet gens(4);
        CHECK_FALSE(lefschetz_surjective(gens, 1, f, rng));
    }
    SUBCASE("an already-full ideal stays full") {
        Rng rng(27);
        GeneratorSet gens(4);
        gens.add(Form::constant(4, 1));
        CHECK(lefschetz_surjective(gens, 3, f, rng));
    }
    SUBCASE("pooled minors of k matrices surject at T and beyond") {
        Rng rng(28);
        for (int t = 0; t < 5; ++t) {
            const int k = 2 + static_cast<int>(rng.below(2));
            const DegreeMatrix a = random_ordered_clean(rng, k - 1, k, 1);
            GeneratorSet gens(4);
            for (int i = 0; i < k; ++i)
                gens.add_all(maximal_minors(FormMatrix::random(a, 4, f, rng), f));
            CHECK(lefschetz_surjective(gens, a.big_T(), f, rng));
            CHECK(lefschetz_surjective(gens, a.big_T() + 1, f, rng));
        }
    }
}

TEST_CASE("zero generators are dropped; mismatched variables rejected") {
    GeneratorSet gens(3);
    gens.add(Form(3, 4));
    CHECK(gens.generators().empty());
    CHECK_THROWS_AS(gens.add(Form::constant(4, 1)), std::invalid_argument);
}
