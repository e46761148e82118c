#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "detsum/field.hpp"
#include "detsum/rng.hpp"

using namespace detsum;

namespace {

// Independent oracle: cross-multiplication elimination with no inverses,
// counting pivots.
std::size_t naive_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const std::uint64_t pv = m[rank][c] % p;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t f = m[r][c] % p;
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                const unsigned __int128 lhs = (unsigned __int128)pv * (m[r][j] % p);
                const unsigned __int128 rhs = (unsigned __int128)f * (m[rank][j] % p);
                m[r][j] = (std::uint64_t)((lhs + (unsigned __int128)p * p - rhs) % p);
            }
        }
        ++rank;
    }
    return rank;
}

CoefficientMatrix make_matrix(const std::vector<std::vector<std::uint64_t>>& rows) {
    CoefficientMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m.set(i, j, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("primality checking at construction") {
    CHECK(is_prime_u64(65521));
    CHECK(is_prime_u64(7));
    CHECK(is_prime_u64((1ull << 61) - 1));  // Mersenne
    CHECK_FALSE(is_prime_u64(65520));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_NOTHROW(PrimeField{65521});
    CHECK_THROWS_AS(PrimeField{65520}, std::invalid_argument);
    CHECK_THROWS_AS(PrimeField{2}, std::invalid_argument);  // p > 2 required
    CHECK_THROWS_AS(PrimeField{1}, std::invalid_argument);
}

TEST_CASE("field operations on the default prime") {
    const PrimeField f;
    CHECK(f.p() == 65521);
    CHECK(f.add(65520, 1) == 0);  // wraparound
    CHECK(f.mul(2, f.inv(2)) == 1);
    CHECK(f.sub(0, 1) == 65520);
    CHECK(f.neg(0) == 0);
    CHECK(f.reduce(-1) == 65520);
    CHECK(f.reduce(65522) == 1);
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    CHECK_THROWS_WITH(f.inv(0), "zero division");
}

TEST_CASE("inverse mod 7 matches brute force over residues") {
    const PrimeField f(7);
    for (std::uint64_t a = 1; a < 7; ++a) {
        std::uint64_t expect = 0;
        for (std::uint64_t x = 1; x < 7; ++x)
            if (a * x % 7 == 1) expect = x;
        CHECK(f.inv(a) == expect);
    }
    CHECK(f.inv(3) == 5);
}

TEST_CASE("field axioms on random triples") {
    const PrimeField f;
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t a = rng.below(f.p()), b = rng.below(f.p()), c = rng.below(f.p());
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
}

TEST_CASE("rank examples") {
    const PrimeField f;
    CHECK(rank(make_matrix({{1, 0}, {0, 1}}), f) == 2);
    CHECK(rank(make_matrix({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}), f) == 0);
    // row2 = 2*row1
    CHECK(rank(make_matrix({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), f) == 2);
}

TEST_CASE("rank early exit stops at the requested value") {
    const PrimeField f;
    const auto m = make_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rank(m, f, 2) == 2);
    CHECK(rank(m, f) == 3);
}

TEST_CASE("incremental reducer basics") {
    const PrimeField f;
    RowReducer r(f, 2);
    CHECK(r.absorb({1, 0}));
    CHECK_FALSE(r.absorb({1, 0}));
    CHECK(r.rank() == 1);

    RowReducer r2(f, 2);
    CHECK(r2.absorb({0, 1}));
    CHECK(r2.absorb({1, 0}));
    CHECK(r2.rank() == 2);

    CHECK_THROWS_AS(r2.absorb({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("rank agrees with the fraction-free oracle on random instances") {
    const PrimeField f;
    Rng rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng.below(20), c = 1 + rng.below(20);
        std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(c));
        for (auto& row : rows)
            for (auto& v : row)
                // small value range so rank-deficient instances actually occur
                v = rng.below(4) == 0 ? 0 : rng.below(f.p());
        // sprinkle duplicated rows
        if (n > 2 && rng.below(2) == 0) rows[n - 1] = rows[0];
        CoefficientMatrix m(n, c);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        CHECK(rank(m, f) == naive_rank(rows, f.p()));
    }
}

TEST_CASE("rank is invariant under row permutation and row scaling") {
    const PrimeField f;
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.below(8), c = 2 + rng.below(8);
        std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(c));
        for (auto& row : rows)
            for (auto& v : row) v = rng.below(5);
        const std::size_t base = naive_rank(rows, f.p());
        CHECK(base <= std::min(n, c));

        // permute
        auto perm = rows;
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
        // scale one row by a nonzero element
        auto scaled = rows;
        const std::uint64_t s = 1 + rng.below(f.p() - 1);
        for (auto& v : scaled[rng.below(n)]) v = f.mul(v, s);

        CoefficientMatrix mp(n, c), ms(n, c);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                mp.set(i, j, perm[i][j]);
                ms.set(i, j, scaled[i][j]);
            }
        CHECK(rank(mp, f) == base);
        CHECK(rank(ms, f) == base);
    }
}

TEST_CASE("large primes use the immediate-reduction path correctly") {
    for (std::uint64_t p : {2147483647ull /* 2^31-1: flush band */,
                            (1ull << 61) - 1 /* immediate path */}) {
        const PrimeField f(p);
        Rng rng(p);
        for (int trial = 0; trial < 10; ++trial) {
            const std::size_t n = 1 + rng.below(10), c = 1 + rng.below(10);
            std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(c));
            for (auto& row : rows)
                for (auto& v : row) v = rng.below(3) == 0 ? 0 : rng.below(p);
            if (n > 1) rows[n - 1] = rows[0];
            CoefficientMatrix m(n, c);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
            CHECK(rank(m, f) == naive_rank(rows, p));
        }
    }
}

TEST_CASE("seeded rng is reproducible and bounded draws are in range") {
    Rng a(99), b(99);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(1);
    for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
    CHECK(Rng::mix(1, 2) != Rng::mix(1, 3));
    CHECK(Rng::mix(1, 2) == Rng::mix(1, 2));
}
