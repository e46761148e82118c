#pragma once

#include <cstdint>
#include <vector>

namespace detsum {

/// Deterministic Miller-Rabin primality test, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Arithmetic in Z/p for a word-size prime p, 3 <= p <= 2^61.
/// Residues are kept reduced in [0, p).
class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = 65521;  // largest prime below 2^16
    static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 61;

    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;  // a, b < p <= 2^61: no overflow
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + (p_ - b);
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const;

    /// Multiplicative inverse. Throws std::domain_error("zero division") on 0.
    std::uint64_t inv(std::uint64_t a) const;

    /// Reduces a signed integer into [0, p).
    std::uint64_t reduce(long long v) const;

private:
    std::uint64_t p_;
};

/// Dense row-major grid of residues.
class CoefficientMatrix {
public:
    CoefficientMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint64_t v) { data_[i * cols_ + j] = v; }
    std::vector<std::uint64_t> row(std::size_t i) const {
        return std::vector<std::uint64_t>(data_.begin() + i * cols_,
                                          data_.begin() + (i + 1) * cols_);
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> data_;
};

/// Streaming row-echelon accumulator. Rows are absorbed one at a time and
/// the rank of everything seen so far is maintained, so Macaulay-style row
/// sources never need to be materialized. Single-owner; not thread-safe.
///
/// For small primes the elimination loop accumulates unreduced 64-bit
/// sums and reduces only when the headroom is spent; for primes past
/// ~2^31.5 it falls back to 128-bit immediate reduction.
class RowReducer {
public:
    RowReducer(const PrimeField& field, std::size_t cols);

    /// Returns true iff the row enlarged the span. Throws on length mismatch.
    bool absorb(std::vector<std::uint64_t> row);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return cols_; }

private:
    const PrimeField* field_;  // non-owning; must outlive the reducer
    std::size_t cols_;
    std::uint64_t lazy_steps_;  // eliminations between flushes; 0 = reduce immediately
    std::vector<std::size_t> pivots_;               // ascending
    std::vector<std::vector<std::uint64_t>> rows_;  // rows_[i]: pivot at pivots_[i], leading 1, reduced
};

/// Rank over the prime field. The input is copied, never mutated. If
/// early_exit_at is given, returns as soon as the rank reaches it.
std::size_t rank(const CoefficientMatrix& m, const PrimeField& field,
                 std::size_t early_exit_at = static_cast<std::size_t>(-1));

}  // namespace detsum
