#include "detsum/ideal.hpp"

#include <stdexcept>

namespace detsum {

void GeneratorSet::add(Form f) {
    if (f.n_vars() != n_vars_)
        throw std::invalid_argument("generator variable count mismatch");
    if (f.is_zero()) return;
    gens_.push_back(std::move(f));
}

void GeneratorSet::add_all(std::vector<Form> forms) {
    for (auto& f : forms) add(std::move(f));
}

namespace {

void stream_ideal_rows(const GeneratorSet& gens, long long d, RowReducer& reducer) {
    const std::size_t ambient = reducer.cols();
    for (const Form& g : gens.generators()) {
        if (g.degree() > d) continue;
        if (reducer.rank() == ambient) return;
        for_each_monomial_multiple(g, static_cast<int>(d), [&](Form&& prod) {
            reducer.absorb(std::move(prod).release_coeffs());
            return reducer.rank() < ambient;
        });
    }
}

}  // namespace

RankReport ideal_dimension_in_degree(const GeneratorSet& gens, long long d,
                                     const PrimeField& field) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    const MonomialBasis& basis = MonomialBasis::get(gens.n_vars(), static_cast<int>(d));
    RowReducer reducer(field, basis.size());
    stream_ideal_rows(gens, d, reducer);

    RankReport report;
    report.target_degree = d;
    report.ambient_dim = basis.size();
    report.achieved_rank = reducer.rank();
    report.full = reducer.rank() == basis.size();
    report.prime = field.p();
    return report;
}

std::size_t hilbert_function(const GeneratorSet& gens, long long d,
                             const PrimeField& field) {
    const RankReport r = ideal_dimension_in_degree(gens, d, field);
    return r.ambient_dim - r.achieved_rank;
}

bool lefschetz_surjective(const GeneratorSet& gens, long long d,
                          const PrimeField& field, Rng& rng) {
    if (d < 1) throw std::invalid_argument("degree must be at least 1");
    const MonomialBasis& basis = MonomialBasis::get(gens.n_vars(), static_cast<int>(d));
    const Form linear = random_form(gens.n_vars(), 1, field, rng);

    RowReducer reducer(field, basis.size());
    stream_ideal_rows(gens, d, reducer);
    if (reducer.rank() < basis.size()) {
        for_each_monomial_multiple(linear, static_cast<int>(d), [&](Form&& prod) {
            reducer.absorb(std::move(prod).release_coeffs());
            return reducer.rank() < basis.size();
        });
    }
    return reducer.rank() == basis.size();
}

}  // namespace detsum
