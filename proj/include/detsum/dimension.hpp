#pragma once

#include <optional>
#include <vector>

#include "detsum/degree_matrix.hpp"

namespace detsum {

/// C(top, r), zero whenever top < r. The zero clamp matches the graded
/// dimension of a twisted free module, so alternating sums over a
/// resolution give exact Hilbert function values at every degree.
long long clamped_binomial(long long top, int r);

/// Generator and syzygy degrees of the minors ideal presented by a
/// (k-1) x k degree matrix: with the certificate a_ij = r_i + c_j,
/// generator j (the minor deleting column j) has degree
/// sum(r) + sum(c) - c_j and syzygy i has degree sum(r) + sum(c) + r_i.
struct ResolutionData {
    std::vector<long long> generator_degrees;  // k values, in column order
    std::vector<long long> syzygy_degrees;     // k-1 values, in row order
    long long max_syzygy_degree() const;
};

ResolutionData resolution_degrees(const DegreeMatrix& a_prime);

/// Number of plane points cut out by the maximal minors of a general
/// ternary matrix with this degree matrix: the stable Hilbert function
/// value, evaluated from the resolution at t = big_T.
long long point_count(const DegreeMatrix& a_prime);

/// h^0 of the degree-d ideal sheaf of the space curve presented by a
/// (k-1) x k degree matrix.
long long h0_ideal_sheaf(const DegreeMatrix& a_prime, long long d);

struct CurveInvariants {
    long long degree = 0;
    long long genus = 0;
};

/// Degree and arithmetic genus of that curve, read off the Hilbert
/// polynomial at two stable points (exact integer arithmetic, no fitting).
CurveInvariants curve_degree_and_genus(const DegreeMatrix& a_prime);

/// Counting report for the two families with printed closed forms:
/// all-entries-a 3 x 3 matrices ("cube") and all-entries-1 k x k matrices
/// ("linear"). theta is the projective dimension of the space of
/// degree-d forms; expected_s = ceil((theta + 1) / (dim_V + 1)). The
/// Hilbert-scheme decomposition (dim_hilb, fiber_dim, dim_Z) and the
/// conjectured summand count exist for the linear family only.
struct DimensionReport {
    int k = 0;
    std::optional<long long> a;  // cube family only
    bool linear = false;
    long long theta = 0;
    long long dim_V = 0;
    std::optional<long long> dim_hilb;
    std::optional<long long> fiber_dim;
    std::optional<long long> dim_Z;
    long long expected_s = 0;
    std::optional<long long> conjecture_s;  // linear family only
};

/// k must be 3 (no closed form is available otherwise); a >= 1.
DimensionReport dimension_report_all_equal(int k, long long a);

/// k >= 2.
DimensionReport dimension_report_linear(int k);

/// The coarse count comparison for k x k all-a matrices in n variables:
/// lhs = k^2 * s * dim R_a bounds dim I_d from above, rhs = dim R_{ka}.
/// threshold_s is the least s with lhs >= rhs, a lower-bound witness for
/// the summand count when a is large.
struct AsymptoticBound {
    long long lhs = 0;
    long long rhs = 0;
    long long threshold_s = 0;
};

AsymptoticBound asymptotic_bound(int k, long long s, long long a, int n_vars);

}  // namespace detsum
