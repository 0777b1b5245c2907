#include "touchard/shift_poly.hpp"

#include <string>

#include "touchard/error.hpp"

namespace touchard {

ShiftPolynomial::ShiftPolynomial(std::size_t shift, std::vector<BigInt> coeffs)
    : shift_(shift), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != shift_ + 1) {
        throw UsageError("shift polynomial P_" + std::to_string(shift_) + " needs " +
                         std::to_string(shift_ + 1) + " coefficients, got " +
                         std::to_string(coeffs_.size()));
    }
}

ShiftPolynomial shift_poly_closed(std::size_t j, const BellTable& bell, const BinomialTable& binom) {
    if (bell.max_index() < j || binom.max_row() < j) {
        throw UsageError("shift_poly_closed: P_" + std::to_string(j) +
                         " needs tables of depth " + std::to_string(j) + " (bell " +
                         std::to_string(bell.max_index()) + ", binomial " +
                         std::to_string(binom.max_row()) + ")");
    }
    std::vector<BigInt> coeffs(j + 1);
    for (std::size_t r = 0; r <= j; ++r) {
        coeffs[r] = bell.at(j - r) * binom.at(j, r);
    }
    return ShiftPolynomial{j, std::move(coeffs)};
}

std::vector<BigInt> taylor_shift_by_one(std::vector<BigInt> a) {
    // After pass i, a[i] holds the final coefficient of x^i.
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t k = n - 1; k-- > i;) {
            a[k] += a[k + 1];
        }
    }
    return a;
}

ShiftPolynomial shift_poly_recursive(std::size_t j) {
    std::vector<BigInt> p{BigInt{1}};
    for (std::size_t step = 0; step < j; ++step) {
        std::vector<BigInt> next = taylor_shift_by_one(p);
        next.emplace_back(0);
        for (std::size_t r = 0; r < p.size(); ++r) {
            next[r + 1] += p[r];
        }
        p = std::move(next);
    }
    return ShiftPolynomial{j, std::move(p)};
}

BigInt eval_poly(const ShiftPolynomial& poly, const BigInt& x) {
    const auto& c = poly.coeffs();
    BigInt acc{0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

BigInt bell_shift(std::size_t n, std::size_t j, const StirlingTriangle& tri,
                  const ShiftPolynomial& poly) {
    if (n == 0) {
        throw UsageError("bell_shift: n must be positive");
    }
    if (poly.shift() != j) {
        throw UsageError("bell_shift: polynomial is P_" + std::to_string(poly.shift()) +
                         " but shift " + std::to_string(j) + " was requested");
    }
    if (tri.max_row() < n) {
        throw UsageError("bell_shift: n = " + std::to_string(n) + " exceeds triangle depth " +
                         std::to_string(tri.max_row()));
    }
    BigInt sum{0};
    const auto& row = tri.row(n);
    for (std::size_t k = 1; k <= n; ++k) {
        sum += eval_poly(poly, BigInt{static_cast<unsigned long>(k)}) * row[k];
    }
    return sum;
}

}  // namespace touchard
