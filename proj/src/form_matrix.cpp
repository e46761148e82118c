#include "detsum/form_matrix.hpp"

#include <algorithm>
#include <bit>

namespace detsum {

FormMatrix::FormMatrix(DegreeMatrix degrees, int n_vars, std::vector<Form> entries)
    : degrees_(std::move(degrees)), n_vars_(n_vars), entries_(std::move(entries)) {
    const std::size_t expect = static_cast<std::size_t>(degrees_.rows()) *
                               static_cast<std::size_t>(degrees_.cols());
    if (entries_.size() != expect) throw std::invalid_argument("entry grid shape mismatch");
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols(); ++j) {
            const Form& f = at(i, j);
            if (f.n_vars() != n_vars_)
                throw std::invalid_argument("entry variable count mismatch");
            if (f.is_zero()) continue;  // zero has any degree
            if (degrees_.at(i, j) < 0)
                throw std::invalid_argument("nonzero entry at a negative declared degree");
            if (f.degree() != degrees_.at(i, j))
                throw std::invalid_argument("entry degree disagrees with the degree matrix");
        }
    }
}

FormMatrix FormMatrix::random(const DegreeMatrix& degrees, int n_vars,
                              const PrimeField& field, Rng& rng) {
    std::vector<Form> entries;
    entries.reserve(static_cast<std::size_t>(degrees.rows()) *
                    static_cast<std::size_t>(degrees.cols()));
    for (int i = 0; i < degrees.rows(); ++i) {
        for (int j = 0; j < degrees.cols(); ++j) {
            const long long d = degrees.at(i, j);
            if (d < 0)
                entries.emplace_back(n_vars, 0);
            else
                entries.push_back(random_form(n_vars, static_cast<int>(d), field, rng));
        }
    }
    return FormMatrix(degrees, n_vars, std::move(entries));
}

FormMatrix FormMatrix::transposed() const {
    if (rows() != cols()) throw std::invalid_argument("transpose needs a square matrix");
    std::vector<std::vector<long long>> g(static_cast<std::size_t>(cols()),
                                          std::vector<long long>(static_cast<std::size_t>(rows())));
    std::vector<Form> entries;
    entries.reserve(entries_.size());
    for (int i = 0; i < cols(); ++i)
        for (int j = 0; j < rows(); ++j) {
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = degrees_.at(j, i);
            entries.push_back(at(j, i));
        }
    return FormMatrix(DegreeMatrix::validate(g), n_vars_, std::move(entries));
}

FormMatrix FormMatrix::with_row_scaled(int row, const Form& linear,
                                       const PrimeField& field) const {
    if (row < 0 || row >= rows()) throw std::invalid_argument("row index out of range");
    if (linear.degree() != 1 || linear.is_zero())
        throw std::invalid_argument("row scaling requires a nonzero linear form");
    std::vector<Form> entries;
    entries.reserve(entries_.size());
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            entries.push_back(i == row ? multiply(at(i, j), linear, field) : at(i, j));
    const int idx[1] = {row};
    return FormMatrix(degrees_.with_rows_shifted(idx, 1), n_vars_, std::move(entries));
}

namespace {

/// Signed determinant of the submatrix picked out by `row_ids` x `col_ids`
/// via subset dynamic programming: dp[S] is the determinant of the first
/// |S| rows on the column subset S, expanded along its last row.
Form det_of(const FormMatrix& m, const std::vector<int>& row_ids,
            const std::vector<int>& col_ids, const PrimeField& field) {
    const int k = static_cast<int>(row_ids.size());
    if (k != static_cast<int>(col_ids.size()))
        throw std::invalid_argument("determinant of a non-square selection");
    if (k == 0) return Form::constant(m.n_vars(), 1);

    std::vector<Form> dp;
    dp.reserve(std::size_t{1} << k);
    dp.emplace_back(Form::constant(m.n_vars(), 1));
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask)
        dp.emplace_back(m.n_vars(), 0);

    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
        const int level = std::popcount(mask);  // expand along row_ids[level-1]
        Form acc(m.n_vars(), 0);
        int t = 0;
        for (int j = 0; j < k; ++j) {
            if (!(mask & (std::uint32_t{1} << j))) continue;
            const Form& entry = m.at(row_ids[static_cast<std::size_t>(level - 1)],
                                     col_ids[static_cast<std::size_t>(j)]);
            if (!entry.is_zero()) {
                const Form& cofactor = dp[mask ^ (std::uint32_t{1} << j)];
                if (!cofactor.is_zero()) {
                    Form term = multiply(entry, cofactor, field);
                    acc = ((level - 1) + t) % 2 == 0 ? add(acc, term, field)
                                                     : sub(acc, term, field);
                }
            }
            ++t;
        }
        dp[mask] = std::move(acc);
    }
    return dp[(std::uint32_t{1} << k) - 1];
}

std::vector<int> iota_vec(int n, int skip = -1) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
    return v;
}

}  // namespace

Form determinant(const FormMatrix& m, const PrimeField& field) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant needs a square matrix");
    if (m.degrees().negativity() == NegativityClass::kZeroBlockFatal)
        throw ZeroDeterminantClassError();
    Form det = det_of(m, iota_vec(m.rows()), iota_vec(m.cols()), field);
    if (det.is_zero())
        return Form(m.n_vars(), static_cast<int>(std::max(0ll, m.degrees().trace())));
    return det;
}

std::vector<Form> submaximal_minors(const FormMatrix& m, const PrimeField& field) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("submaximal minors need a square matrix");
    const int k = m.rows();
    std::vector<Form> minors;
    minors.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            minors.push_back(det_of(m, iota_vec(k, i), iota_vec(k, j), field));
    return minors;
}

std::vector<Form> maximal_minors(const FormMatrix& m, const PrimeField& field) {
    if (m.cols() != m.rows() + 1)
        throw std::invalid_argument("maximal minors need a (k-1) x k matrix");
    std::vector<Form> minors;
    minors.reserve(static_cast<std::size_t>(m.cols()));
    for (int j = 0; j < m.cols(); ++j)
        minors.push_back(det_of(m, iota_vec(m.rows()), iota_vec(m.cols(), j), field));
    return minors;
}

}  // namespace detsum
