#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "detsum/field.hpp"
#include "detsum/monomial.hpp"
#include "detsum/rng.hpp"

namespace detsum {

/// A homogeneous polynomial of fixed degree, stored densely on the graded
/// monomial basis of its (n_vars, degree) slice. The zero form is
/// representable at every degree and is treated as having any degree by
/// the arithmetic below.
class Form {
public:
    Form(int n_vars, int degree)
        : n_vars_(n_vars), degree_(degree),
          coeffs_(MonomialBasis::get(n_vars, degree).size(), 0) {}

    static Form constant(int n_vars, std::uint64_t value);
    static Form variable(int n_vars, int index);
    static Form monomial(int n_vars, std::span<const std::uint8_t> exponents,
                         std::uint64_t coeff);

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    const MonomialBasis& basis() const { return MonomialBasis::get(n_vars_, degree_); }

    std::span<const std::uint64_t> coeffs() const { return coeffs_; }
    std::uint64_t coeff(std::size_t i) const { return coeffs_[i]; }
    void set_coeff(std::size_t i, std::uint64_t v) { coeffs_[i] = v; }
    std::vector<std::uint64_t> release_coeffs() && { return std::move(coeffs_); }

    bool is_zero() const;
    bool operator==(const Form& other) const {
        return n_vars_ == other.n_vars_ && degree_ == other.degree_ &&
               coeffs_ == other.coeffs_;
    }

private:
    int n_vars_, degree_;
    std::vector<std::uint64_t> coeffs_;
};

/// Sum of homogeneous forms. A zero operand adopts the other's degree;
/// otherwise the degrees must match.
Form add(const Form& f, const Form& g, const PrimeField& field);
Form sub(const Form& f, const Form& g, const PrimeField& field);
Form negate(const Form& f, const PrimeField& field);
Form scale(const Form& f, std::uint64_t c, const PrimeField& field);

/// Exact product; the result has degree deg f + deg g.
Form multiply(const Form& f, const Form& g, const PrimeField& field);

/// Every coefficient uniform in [0, p); identically-zero draws are
/// resampled so that "general" forms are nonzero (in particular general
/// degree-0 entries are units).
Form random_form(int n_vars, int degree, const PrimeField& field, Rng& rng);

/// Streams m*f over all monomials m of degree (target_degree - deg f) in
/// basis order. The consumer returns false to stop early. This is the
/// degree-target slice of the principal ideal (f) presented row by row.
void for_each_monomial_multiple(const Form& f, int target_degree,
                                const std::function<bool(Form&&)>& consume);

/// Materialized variant of the stream above.
std::vector<Form> monomial_multiples(const Form& f, int target_degree);

}  // namespace detsum
