#pragma once

#include <stdexcept>
#include <vector>

#include "detsum/degree_matrix.hpp"
#include "detsum/form.hpp"

namespace detsum {

/// Raised when asking for the determinant of a matrix whose degree
/// matrix forces it to vanish identically (a negative diagonal entry in
/// the ordered form creates a zero block touching the diagonal).
class ZeroDeterminantClassError : public std::invalid_argument {
public:
    ZeroDeterminantClassError()
        : std::invalid_argument("identically zero determinant class: the ordered degree "
                                "matrix has a negative diagonal entry") {}
};

/// Matrix of forms with a declared homogeneous degree matrix: every
/// nonzero entry has degree a_ij and entries at negative a_ij are zero.
class FormMatrix {
public:
    /// Entries row-major. Throws if a nonzero entry disagrees with its
    /// declared degree or sits at a negative one.
    FormMatrix(DegreeMatrix degrees, int n_vars, std::vector<Form> entries);

    /// Independent random forms at every non-negative position, zeros at
    /// the negative ones.
    static FormMatrix random(const DegreeMatrix& degrees, int n_vars,
                             const PrimeField& field, Rng& rng);

    int rows() const { return degrees_.rows(); }
    int cols() const { return degrees_.cols(); }
    int n_vars() const { return n_vars_; }
    const DegreeMatrix& degrees() const { return degrees_; }
    const Form& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols()) +
                        static_cast<std::size_t>(j)];
    }

    /// Square matrices only.
    FormMatrix transposed() const;

    /// Multiplies one row through by a linear form. The degree matrix of
    /// the result gains 1 on that row. For (k-1) x k inputs the maximal
    /// minors of the result are exactly the old minors times the form.
    FormMatrix with_row_scaled(int row, const Form& linear, const PrimeField& field) const;

private:
    DegreeMatrix degrees_;
    int n_vars_;
    std::vector<Form> entries_;
};

/// Exact determinant by column-subset Laplace expansion. The result has
/// degree trace(degree matrix); the 0 x 0 determinant is 1. Throws
/// ZeroDeterminantClassError when the degree matrix makes every
/// determinant vanish.
Form determinant(const FormMatrix& m, const PrimeField& field);

/// All k^2 minors with one row and one column deleted, unsigned, in
/// row-major (deleted row, deleted column) order. For k = 1 the single
/// minor is the constant 1.
std::vector<Form> submaximal_minors(const FormMatrix& m, const PrimeField& field);

/// The k minors of a (k-1) x k matrix, unsigned, ordered by deleted column.
std::vector<Form> maximal_minors(const FormMatrix& m, const PrimeField& field);

}  // namespace detsum
