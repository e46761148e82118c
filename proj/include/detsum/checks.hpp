#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detsum/degree_matrix.hpp"
#include "detsum/ideal.hpp"

namespace detsum {

/// A full-rank witness certifies the statement generically in
/// characteristic zero (semicontinuity); the negative outcome is only
/// probabilistic and is reached after the configured number of redraws.
enum class Outcome { kCertifiedFull, kProbablyNotFull };

const char* outcome_label(Outcome o);  // "certified-full" / "probably-not-full"

struct CheckVerdict {
    std::string statement;
    DegreeMatrix degree_matrix;
    int summands = 0;
    int n_vars = 0;
    long long degree = 0;
    Outcome outcome = Outcome::kProbablyNotFull;
    RankReport rank;
    std::vector<std::string> notes;

    bool certified() const { return outcome == Outcome::kCertifiedFull; }
};

struct CheckContext {
    const PrimeField& field;
    std::uint64_t seed = 0;
    int max_trials = 3;  // fresh redraws before conceding probably-not-full
    int threads = 1;     // parallelism across independent walkthrough steps
};

/// k^(n-3), the summand count the general theorem guarantees.
long long main_theorem_bound(int k, int n_vars);

/// Draws s independent random matrices with the given degree matrix,
/// pools all their one-row-one-column-deleted minors, and tests whether
/// the pooled ideal fills the whole degree-trace(A) slice. Certified-full
/// means a general form of that degree in n_vars variables is a sum of s
/// such determinants. Throws ZeroDeterminantClassError when the degree
/// matrix kills every determinant.
CheckVerdict check_sum_of_determinants(const DegreeMatrix& a, int summands,
                                       int n_vars, const CheckContext& ctx);

/// The theorem instance: s = k^(n-3) summands.
CheckVerdict check_main_theorem(const DegreeMatrix& a, int n_vars,
                                const CheckContext& ctx);

struct MinSummandsResult {
    int min_s = 0;  // 0 when no s in range certified (unlucky trials)
    long long bound = 0;
    std::vector<CheckVerdict> verdicts;  // one per s tried, in order
};

/// Searches s = 1, 2, ... up to k^(n-3), stopping at the first certified
/// count. The result is an upper bound for the true minimal count,
/// generically exact up to flagged unlucky negative trials.
MinSummandsResult find_min_s(const DegreeMatrix& a, int n_vars,
                             const CheckContext& ctx);

/// One group of identically-shaped (k-1) x k degree matrices in a pooled
/// minors condition.
struct WeightedDegreeMatrix {
    DegreeMatrix matrix;
    int count = 1;
    std::string label;  // display only; defaults to B1, B2, ...
};

/// Ternary pooled-minors condition: draws the listed matrices, pools all
/// maximal minors, and tests fullness in the stated degree.
CheckVerdict check_M_condition(const std::vector<WeightedDegreeMatrix>& groups,
                               long long s_degree, const CheckContext& ctx);

/// One rung of the diameter-induction ladder. `direct` draws fresh random
/// matrices of the stated shapes; `constructive` rebuilds the witness the
/// induction prescribes (matrices for the previous condition with one row
/// scaled by a general linear form) and re-tests. The base rung has no
/// constructive half.
struct WalkthroughStep {
    std::string condition;
    long long degree = 0;
    CheckVerdict direct;
    std::optional<CheckVerdict> constructive;

    bool certified() const {
        return direct.certified() && (!constructive || constructive->certified());
    }
};

/// Replays the diameter induction for an ordered clean (k-1) x k matrix:
/// reduce all top rows by one, then climb back one row-bump at a time,
/// verifying every intermediate pooled-minors condition both directly and
/// through the constructive row-scaled witness. A diameter-0 input is a
/// single direct check at degree big_T.
std::vector<WalkthroughStep> lemma_walkthrough(const DegreeMatrix& a_prime,
                                               const CheckContext& ctx);

/// 3 x 3 matrices with minimal entry exactly 1: two summands suffice.
CheckVerdict check_three_by_three_min_entry_one(const DegreeMatrix& a,
                                                const CheckContext& ctx);

}  // namespace detsum
