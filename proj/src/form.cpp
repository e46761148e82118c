#include "detsum/form.hpp"

#include <algorithm>
#include <stdexcept>

namespace detsum {

Form Form::constant(int n_vars, std::uint64_t value) {
    Form f(n_vars, 0);
    f.coeffs_[0] = value;
    return f;
}

Form Form::variable(int n_vars, int index) {
    if (index < 0 || index >= n_vars) throw std::invalid_argument("variable index out of range");
    std::vector<std::uint8_t> e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(n_vars, e, 1);
}

Form Form::monomial(int n_vars, std::span<const std::uint8_t> exponents,
                    std::uint64_t coeff) {
    int degree = 0;
    for (auto e : exponents) degree += e;
    Form f(n_vars, degree);
    f.coeffs_[f.basis().index_of(exponents)] = coeff;
    return f;
}

bool Form::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](std::uint64_t c) { return c == 0; });
}

namespace {

void require_same_vars(const Form& f, const Form& g) {
    if (f.n_vars() != g.n_vars())
        throw std::invalid_argument("variable-count mismatch between forms");
}

}  // namespace

Form add(const Form& f, const Form& g, const PrimeField& field) {
    require_same_vars(f, g);
    if (f.degree() != g.degree()) {
        if (f.is_zero()) return g;
        if (g.is_zero()) return f;
        throw std::invalid_argument("degree mismatch between nonzero forms");
    }
    Form out(f.n_vars(), f.degree());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out.set_coeff(i, field.add(f.coeff(i), g.coeff(i)));
    return out;
}

Form negate(const Form& f, const PrimeField& field) {
    Form out(f.n_vars(), f.degree());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out.set_coeff(i, field.neg(f.coeff(i)));
    return out;
}

Form sub(const Form& f, const Form& g, const PrimeField& field) {
    require_same_vars(f, g);
    if (f.degree() != g.degree()) {
        if (g.is_zero()) return f;
        if (f.is_zero()) return negate(g, field);
        throw std::invalid_argument("degree mismatch between nonzero forms");
    }
    Form out(f.n_vars(), f.degree());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out.set_coeff(i, field.sub(f.coeff(i), g.coeff(i)));
    return out;
}

Form scale(const Form& f, std::uint64_t c, const PrimeField& field) {
    Form out(f.n_vars(), f.degree());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out.set_coeff(i, field.mul(f.coeff(i), c));
    return out;
}

Form multiply(const Form& f, const Form& g, const PrimeField& field) {
    require_same_vars(f, g);
    const int n = f.n_vars();
    Form out(n, f.degree() + g.degree());
    if (f.is_zero() || g.is_zero()) return out;

    const MonomialBasis& bf = f.basis();
    const MonomialBasis& bg = g.basis();
    const MonomialBasis& bo = out.basis();
    std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < bf.size(); ++i) {
        const std::uint64_t ci = f.coeff(i);
        if (ci == 0) continue;
        const auto ei = bf.exponents_of(i);
        for (std::size_t j = 0; j < bg.size(); ++j) {
            const std::uint64_t cj = g.coeff(j);
            if (cj == 0) continue;
            const auto ej = bg.exponents_of(j);
            for (int v = 0; v < n; ++v)
                e[static_cast<std::size_t>(v)] =
                    static_cast<std::uint8_t>(ei[static_cast<std::size_t>(v)] +
                                              ej[static_cast<std::size_t>(v)]);
            const std::size_t idx = bo.index_of(e);
            out.set_coeff(idx, field.add(out.coeff(idx), field.mul(ci, cj)));
        }
    }
    return out;
}

Form random_form(int n_vars, int degree, const PrimeField& field, Rng& rng) {
    Form f(n_vars, degree);
    for (;;) {
        bool nonzero = false;
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            const std::uint64_t c = rng.below(field.p());
            f.set_coeff(i, c);
            nonzero = nonzero || c != 0;
        }
        if (nonzero) return f;
    }
}

void for_each_monomial_multiple(const Form& f, int target_degree,
                                const std::function<bool(Form&&)>& consume) {
    if (target_degree < f.degree())
        throw std::invalid_argument("target degree below the form's degree");
    const int n = f.n_vars();
    const MonomialBasis& multipliers = MonomialBasis::get(n, target_degree - f.degree());
    const MonomialBasis& bf = f.basis();
    const MonomialBasis& bo = MonomialBasis::get(n, target_degree);

    std::vector<std::uint8_t> e(static_cast<std::size_t>(n));
    for (std::size_t m = 0; m < multipliers.size(); ++m) {
        const auto em = multipliers.exponents_of(m);
        Form prod(n, target_degree);
        for (std::size_t t = 0; t < bf.size(); ++t) {
            const std::uint64_t c = f.coeff(t);
            if (c == 0) continue;
            const auto et = bf.exponents_of(t);
            for (int v = 0; v < n; ++v)
                e[static_cast<std::size_t>(v)] =
                    static_cast<std::uint8_t>(em[static_cast<std::size_t>(v)] +
                                              et[static_cast<std::size_t>(v)]);
            prod.set_coeff(bo.index_of(e), c);
        }
        if (!consume(std::move(prod))) return;
    }
}

std::vector<Form> monomial_multiples(const Form& f, int target_degree) {
    std::vector<Form> out;
    for_each_monomial_multiple(f, target_degree, [&](Form&& p) {
        out.push_back(std::move(p));
        return true;
    });
    return out;
}

}  // namespace detsum
