#include "detsum/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace detsum {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic below 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p <= 2) throw std::invalid_argument("prime modulus must exceed 2");
    if (p > kMaxPrime) throw std::invalid_argument("prime modulus too large (limit 2^61)");
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exponent) const {
    return powmod(base, exponent, p_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= p_;
    if (a == 0) throw std::domain_error("zero division");
    return powmod(a, p_ - 2, p_);
}

std::uint64_t PrimeField::reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
}

RowReducer::RowReducer(const PrimeField& field, std::size_t cols)
    : field_(&field), cols_(cols) {
    // Largest t with (p-1) + t*(p-1)^2 <= 2^64 - 1; zero forces the
    // immediate-reduction path.
    const unsigned __int128 top = field.p() - 1;
    const unsigned __int128 headroom = (~std::uint64_t{0}) - (field.p() - 1);
    lazy_steps_ = static_cast<std::uint64_t>(headroom / (top * top));
}

bool RowReducer::absorb(std::vector<std::uint64_t> row) {
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    const std::uint64_t p = field_->p();
    for (auto& v : row) v %= p;

    std::uint64_t since_flush = 0;
    for (std::size_t b = 0; b < pivots_.size(); ++b) {
        const std::size_t c = pivots_[b];
        const std::uint64_t f = row[c] % p;
        if (f == 0) {
            row[c] = 0;
            continue;
        }
        const std::vector<std::uint64_t>& basis = rows_[b];
        const std::uint64_t mult = p - f;
        if (lazy_steps_ == 0) {
            const unsigned __int128 m128 = mult;
            for (std::size_t j = c; j < cols_; ++j)
                row[j] = static_cast<std::uint64_t>((row[j] + m128 * basis[j]) % p);
        } else {
            if (since_flush == lazy_steps_) {
                for (auto& v : row) v %= p;
                since_flush = 0;
            }
            for (std::size_t j = c; j < cols_; ++j) row[j] += mult * basis[j];
            ++since_flush;
        }
        row[c] = 0;  // holds an exact multiple of p after elimination
    }
    for (auto& v : row) v %= p;

    std::size_t piv = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (row[j] != 0) {
            piv = j;
            break;
        }
    }
    if (piv == cols_) return false;

    const std::uint64_t scale = field_->inv(row[piv]);
    for (std::size_t j = piv; j < cols_; ++j) row[j] = field_->mul(row[j], scale);

    const auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    const std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    return true;
}

std::size_t rank(const CoefficientMatrix& m, const PrimeField& field,
                 std::size_t early_exit_at) {
    RowReducer reducer(field, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (reducer.rank() >= early_exit_at) return reducer.rank();
        reducer.absorb(m.row(i));
    }
    return std::min(reducer.rank(), early_exit_at);
}

}  // namespace detsum
