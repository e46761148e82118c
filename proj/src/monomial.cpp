#include "detsum/monomial.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace detsum {

bool MonomialBasis::grevlex_before(Exponents a, Exponents b) {
    // Among monomials of equal degree: a > b iff the last nonzero entry
    // of a - b is negative.
    for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] != b[j]) return a[j] < b[j];
    }
    return false;
}

MonomialBasis::MonomialBasis(int n_vars, int degree) : n_vars_(n_vars), degree_(degree) {
    if (n_vars < 2 || n_vars > 16) throw std::invalid_argument("variable count out of range [2,16]");
    if (degree < 0 || degree > 255) throw std::invalid_argument("degree out of range [0,255]");

    std::vector<std::vector<std::uint8_t>> all;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n_vars), 0);
    const auto emit = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n_vars - 1) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(remaining);
            all.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(e);
            self(self, pos + 1, remaining - e);
        }
    };
    emit(emit, 0, degree);

    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return grevlex_before(Exponents(a), Exponents(b));
    });

    flat_.reserve(all.size() * static_cast<std::size_t>(n_vars));
    for (const auto& e : all) flat_.insert(flat_.end(), e.begin(), e.end());
}

std::size_t MonomialBasis::index_of(Exponents e) const {
    if (e.size() != static_cast<std::size_t>(n_vars_))
        throw std::out_of_range("exponent vector has wrong length");
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (grevlex_before(exponents_of(mid), e))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size()) {
        const Exponents found = exponents_of(lo);
        if (std::equal(found.begin(), found.end(), e.begin())) return lo;
    }
    throw std::out_of_range("no such monomial in this basis");
}

const MonomialBasis& MonomialBasis::get(int n_vars, int degree) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<const MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{n_vars, degree}];
    if (!slot) slot = std::make_unique<const MonomialBasis>(n_vars, degree);
    return *slot;
}

}  // namespace detsum
