#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace detsum {

/// The monomials of one total degree in n variables, listed in graded
/// reverse-lexicographic order with x1 > x2 > ... > xn. Index 0 is x1^d
/// and the last index is xn^d. The listing is the positional basis for
/// every coefficient vector in the library, so it is fixed once and
/// reproduced identically across runs.
class MonomialBasis {
public:
    using Exponents = std::span<const std::uint8_t>;

    MonomialBasis(int n_vars, int degree);

    /// Process-wide cache; returned references stay valid forever.
    static const MonomialBasis& get(int n_vars, int degree);

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    std::size_t size() const { return flat_.size() / static_cast<std::size_t>(n_vars_); }

    Exponents exponents_of(std::size_t index) const {
        return Exponents(flat_.data() + index * static_cast<std::size_t>(n_vars_),
                         static_cast<std::size_t>(n_vars_));
    }

    /// Inverse of exponents_of; throws std::out_of_range if the exponent
    /// vector is not a monomial of this basis.
    std::size_t index_of(Exponents e) const;

    /// True iff a strictly precedes b in the listing (a > b in grevlex).
    static bool grevlex_before(Exponents a, Exponents b);

private:
    int n_vars_, degree_;
    std::vector<std::uint8_t> flat_;  // size() * n_vars entries
};

}  // namespace detsum
