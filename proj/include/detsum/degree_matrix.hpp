#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace detsum {

/// Raised when a grid fails the homogeneity law a_ij + a_lm = a_im + a_lj.
/// Carries a violating index 4-tuple (1-based).
class HomogeneityError : public std::invalid_argument {
public:
    HomogeneityError(int i, int j, int l, int m, const std::string& what)
        : std::invalid_argument(what), i_(i), j_(j), l_(l), m_(m) {}
    int i() const { return i_; }
    int j() const { return j_; }
    int l() const { return l_; }
    int m() const { return m_; }

private:
    int i_, j_, l_, m_;
};

/// Raised by the text parser; positions are 1-based.
class DegreeMatrixParseError : public std::runtime_error {
public:
    DegreeMatrixParseError(int line, int column, const std::string& what)
        : std::runtime_error(what), line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// How negative entries affect determinants with this degree matrix
/// (judged on the ordered form):
///   kClean          all entries non-negative;
///   kZeroBlockFatal a diagonal entry is negative, which forces a zero
///                   block touching the diagonal: every determinant in
///                   this class vanishes identically;
///   kNegativeOpen   negative entries below the diagonal only; the
///                   minimal summand count here is an open question.
enum class NegativityClass { kClean, kZeroBlockFatal, kNegativeOpen };

/// Integer degree matrix, square (k x k) or one row short ((k-1) x k),
/// satisfying a_ij + a_lm = a_im + a_lj. Equivalently a_ij = r_i + c_j;
/// the decomposition normalized by c_1 = 0 is stored as a certificate.
/// Entries may be negative. Immutable.
class DegreeMatrix {
public:
    /// Validates shape and homogeneity; throws HomogeneityError with a
    /// witness tuple on failure.
    static DegreeMatrix validate(const std::vector<std::vector<long long>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    long long at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
                        static_cast<std::size_t>(j)];
    }

    std::span<const long long> row_offsets() const { return row_offsets_; }
    std::span<const long long> col_offsets() const { return col_offsets_; }

    long long min_entry() const;
    bool all_nonnegative() const { return min_entry() >= 0; }

    /// Rows non-decreasing left to right, columns increasing bottom to top.
    bool is_ordered() const;

    /// Stable permutation of rows and columns into ordered position.
    DegreeMatrix ordered() const;

    /// Square: diagonal sum (independent of row/column order).
    /// (k-1) x k: maximal trace over the square submatrices, which the
    /// certificate turns into sum(r) + sum(c) - min(c).
    long long trace() const;

    /// trace + top-left entry of the ordered matrix; only defined for
    /// (k-1) x k shapes. Equals the largest syzygy degree of the minors
    /// ideal this matrix presents.
    long long big_T() const;

    /// Constant gap between the first and last rows once ordered.
    long long diameter() const;

    DegreeMatrix with_row_deleted(int i) const;
    DegreeMatrix with_rows_shifted(std::span<const int> row_indices, long long delta) const;
    /// Square only: entry (i, j) moves to (k+1-j, k+1-i); preserves the trace.
    DegreeMatrix reflected_antidiagonal() const;

    /// Classification of the ordered form; square only.
    NegativityClass negativity() const;

    bool operator==(const DegreeMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    std::vector<std::vector<long long>> grid() const;

    /// One row per line, base-10 entries separated by single spaces,
    /// LF endings.
    std::string to_text() const;
    static DegreeMatrix parse_text(const std::string& content);
    /// {"rows": [[...], ...]}
    std::string to_json() const;
    static DegreeMatrix parse_json(const std::string& content);
    /// Dispatches on leading '{'.
    static DegreeMatrix parse(const std::string& content);

private:
    DegreeMatrix(int rows, int cols, std::vector<long long> entries);

    int rows_, cols_;
    std::vector<long long> entries_;
    std::vector<long long> row_offsets_, col_offsets_;
};

}  // namespace detsum
