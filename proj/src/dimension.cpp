#include "detsum/dimension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace detsum {

long long clamped_binomial(long long top, int r) {
    if (r < 0) throw std::invalid_argument("negative binomial order");
    if (top < r) return 0;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * static_cast<unsigned __int128>(top - r + i) / static_cast<unsigned>(i);
        if (acc > static_cast<unsigned __int128>(0x7fffffffffffffffll))
            throw std::overflow_error("binomial overflows 64 bits");
    }
    return static_cast<long long>(acc);
}

long long ResolutionData::max_syzygy_degree() const {
    return *std::max_element(syzygy_degrees.begin(), syzygy_degrees.end());
}

namespace {

const DegreeMatrix require_rect_clean_ordered(const DegreeMatrix& a_prime) {
    if (a_prime.is_square())
        throw std::invalid_argument("expected a (k-1) x k degree matrix");
    if (!a_prime.all_nonnegative())
        throw std::invalid_argument("expected non-negative entries");
    return a_prime.is_ordered() ? a_prime : a_prime.ordered();
}

/// Hilbert function of the quotient by the minors ideal, in `n_vars`
/// ambient variables, from the resolution's alternating sum.
long long hf_from_resolution(const ResolutionData& res, long long t, int n_vars) {
    const int r = n_vars - 1;
    long long value = clamped_binomial(t + r, r);
    for (long long m : res.generator_degrees) value -= clamped_binomial(t - m + r, r);
    for (long long b : res.syzygy_degrees) value += clamped_binomial(t - b + r, r);
    return value;
}

long long ceil_div(long long num, long long den) { return (num + den - 1) / den; }

}  // namespace

ResolutionData resolution_degrees(const DegreeMatrix& a_prime) {
    const DegreeMatrix m = require_rect_clean_ordered(a_prime);
    const auto r = m.row_offsets();
    const auto c = m.col_offsets();
    const long long total = std::accumulate(r.begin(), r.end(), 0ll) +
                            std::accumulate(c.begin(), c.end(), 0ll);
    ResolutionData res;
    for (long long cj : c) res.generator_degrees.push_back(total - cj);
    for (long long ri : r) res.syzygy_degrees.push_back(total + ri);
    return res;
}

long long point_count(const DegreeMatrix& a_prime) {
    const DegreeMatrix m = require_rect_clean_ordered(a_prime);
    return hf_from_resolution(resolution_degrees(m), m.big_T(), 3);
}

long long h0_ideal_sheaf(const DegreeMatrix& a_prime, long long d) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    const ResolutionData res = resolution_degrees(require_rect_clean_ordered(a_prime));
    long long h0 = 0;
    for (long long m : res.generator_degrees) h0 += clamped_binomial(d - m + 3, 3);
    for (long long b : res.syzygy_degrees) h0 -= clamped_binomial(d - b + 3, 3);
    return h0;
}

CurveInvariants curve_degree_and_genus(const DegreeMatrix& a_prime) {
    const ResolutionData res = resolution_degrees(require_rect_clean_ordered(a_prime));
    // Past the largest syzygy degree every binomial is unclamped, so the
    // alternating sum IS the Hilbert polynomial deg*t + 1 - genus.
    const long long t0 = res.max_syzygy_degree();
    const long long h0 = hf_from_resolution(res, t0, 4);
    const long long h1 = hf_from_resolution(res, t0 + 1, 4);
    CurveInvariants inv;
    inv.degree = h1 - h0;
    inv.genus = 1 - (h0 - inv.degree * t0);
    return inv;
}

DimensionReport dimension_report_all_equal(int k, long long a) {
    if (k != 3)
        throw std::invalid_argument("no closed form in the paper for k != 3");
    if (a < 1) throw std::invalid_argument("entry value must be positive");
    DimensionReport rep;
    rep.k = k;
    rep.a = a;
    rep.theta = (27 * a * a * a + 54 * a * a + 33 * a) / 6;
    rep.dim_V = (9 * a * a * a + 54 * a * a + 99 * a - 48) / 6;
    rep.expected_s = ceil_div(rep.theta + 1, rep.dim_V + 1);
    return rep;
}

DimensionReport dimension_report_linear(int k) {
    if (k < 2) throw std::invalid_argument("linear family needs k >= 2");
    const long long kk = k;
    DimensionReport rep;
    rep.k = k;
    rep.linear = true;
    rep.theta = clamped_binomial(kk + 3, 3) - 1;
    rep.dim_V = 2 * kk * kk + 1;
    rep.dim_hilb = 2 * kk * kk - 2 * kk;
    rep.fiber_dim = 3 * kk;
    rep.dim_Z = 2 * kk * kk + kk;
    rep.expected_s = ceil_div(rep.theta + 1, rep.dim_V + 1);
    // ceil(k/12 + 1/2 + 10k/(12k^2+12)) over the common denominator 12(k^2+1).
    const long long den = 12 * (kk * kk + 1);
    const long long num = kk * (kk * kk + 1) + 6 * (kk * kk + 1) + 10 * kk;
    rep.conjecture_s = ceil_div(num, den);
    return rep;
}

AsymptoticBound asymptotic_bound(int k, long long s, long long a, int n_vars) {
    if (k < 1 || s < 1 || a < 0 || n_vars < 3)
        throw std::invalid_argument("asymptotic bound needs k,s >= 1, a >= 0, n >= 3");
    const long long dim_slice = clamped_binomial(a + n_vars - 1, n_vars - 1);
    const unsigned __int128 lhs128 = static_cast<unsigned __int128>(k) * k * s * dim_slice;
    if (lhs128 > static_cast<unsigned __int128>(0x7fffffffffffffffll))
        throw std::overflow_error("bound overflows 64 bits");
    AsymptoticBound out;
    out.lhs = static_cast<long long>(lhs128);
    out.rhs = clamped_binomial(static_cast<long long>(k) * a + n_vars - 1, n_vars - 1);
    out.threshold_s = ceil_div(out.rhs, static_cast<long long>(k) * k * dim_slice);
    return out;
}

}  // namespace detsum
