#pragma once

#include <cstdint>
#include <vector>

#include "detsum/field.hpp"
#include "detsum/form.hpp"

namespace detsum {

/// Outcome of a graded-piece rank computation. A full result is a
/// certificate: full rank under a random specialization mod p implies
/// full rank over the rationals and hence generically in characteristic
/// zero (rank cannot grow under reduction). A non-full result is only
/// probabilistic evidence.
struct RankReport {
    long long target_degree = 0;
    std::size_t ambient_dim = 0;   // dim of the full degree slice
    std::size_t achieved_rank = 0;
    bool full = false;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;  // provenance, filled by the caller that drew randomness
    int trials_used = 1;
};

/// Homogeneous generators of an ideal. Zero forms are dropped at insertion,
/// so every stored generator's degree is its declared degree.
class GeneratorSet {
public:
    explicit GeneratorSet(int n_vars) : n_vars_(n_vars) {}

    void add(Form f);
    void add_all(std::vector<Form> forms);

    int n_vars() const { return n_vars_; }
    const std::vector<Form>& generators() const { return gens_; }

private:
    int n_vars_;
    std::vector<Form> gens_;
};

/// dim of the degree-d piece of the ideal, computed by streaming the
/// monomial multiples of each generator into a row reducer with early
/// exit at the ambient dimension. The Macaulay matrix is never
/// materialized.
RankReport ideal_dimension_in_degree(const GeneratorSet& gens, long long d,
                                     const PrimeField& field);

/// dim R_d - dim I_d.
std::size_t hilbert_function(const GeneratorSet& gens, long long d,
                             const PrimeField& field);

/// True iff I_d + L*R_{d-1} fills R_d for a random linear form L drawn
/// from rng.
bool lefschetz_surjective(const GeneratorSet& gens, long long d,
                          const PrimeField& field, Rng& rng);

}  // namespace detsum
