#pragma once

#include <cstddef>
#include <vector>

#include "touchard/bigint.hpp"
#include "touchard/exact_core.hpp"

namespace touchard {

/// P_j(x) = sum_{r=0}^{j} B_{j-r} C(j, r) x^r, the polynomial that turns
/// row n of the Stirling triangle into B_{n+j}.
///
/// Coefficients are stored in ascending degree order: coeffs()[r] multiplies x^r.
class ShiftPolynomial {
public:
    ShiftPolynomial(std::size_t shift, std::vector<BigInt> coeffs);

    std::size_t shift() const noexcept { return shift_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const ShiftPolynomial&, const ShiftPolynomial&) = default;

private:
    std::size_t shift_;
    std::vector<BigInt> coeffs_;
};

/// Closed form: coeffs[r] = B_{j-r} C(j, r).
/// Throws UsageError when either table is shallower than j.
ShiftPolynomial shift_poly_closed(std::size_t j, const BellTable& bell, const BinomialTable& binom);

/// Iterates P_{j+1}(x) = P_j(x+1) + x P_j(x) from P_0 = 1 without consulting
/// any Bell or binomial table.
ShiftPolynomial shift_poly_recursive(std::size_t j);

/// Coefficients of q(x) = p(x + 1), computed by repeated synthetic division.
std::vector<BigInt> taylor_shift_by_one(std::vector<BigInt> coeffs);

BigInt eval_poly(const ShiftPolynomial& poly, const BigInt& x);

/// sum_{k=1}^{n} P_j(k) {n brace k}, which equals B_{n+j}.
/// Requires n >= 1, poly.shift() == j and tri.max_row() >= n.
BigInt bell_shift(std::size_t n, std::size_t j, const StirlingTriangle& tri,
                  const ShiftPolynomial& poly);

}  // namespace touchard
