#pragma once

#include <cstddef>
#include <vector>

#include "touchard/bigint.hpp"

namespace touchard {

/// Pascal triangle, rows[n][k] = C(n, k) for 0 <= k <= n <= max_row.
class BinomialTable {
public:
    std::size_t max_row() const noexcept { return rows_.size() - 1; }

    /// C(n, k); zero when k > n. Throws UsageError if n > max_row().
    const BigInt& at(std::size_t n, std::size_t k) const;
    const std::vector<BigInt>& row(std::size_t n) const;

private:
    friend BinomialTable build_binomials(std::size_t);
    explicit BinomialTable(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {}

    std::vector<std::vector<BigInt>> rows_;
};

/// Stirling numbers of the second kind, rows[n][k] = {n brace k}.
///
/// Conventions: {0 brace 0} = 1, {n brace 0} = 0 for n >= 1.
class StirlingTriangle {
public:
    std::size_t max_row() const noexcept { return rows_.size() - 1; }

    /// {n brace k}; zero when k > n. Throws UsageError if n > max_row().
    const BigInt& at(std::size_t n, std::size_t k) const;
    const std::vector<BigInt>& row(std::size_t n) const;

private:
    friend StirlingTriangle build_stirling(std::size_t);
    explicit StirlingTriangle(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {}

    std::vector<std::vector<BigInt>> rows_;
};

/// Exact Bell numbers B_0..B_N.
class BellTable {
public:
    /// Wraps precomputed values B_0..B_N as given; only emptiness is checked.
    explicit BellTable(std::vector<BigInt> values);

    std::size_t max_index() const noexcept { return values_.size() - 1; }

    /// B_n. Throws UsageError if n > max_index().
    const BigInt& at(std::size_t n) const;
    const std::vector<BigInt>& values() const noexcept { return values_; }

private:
    std::vector<BigInt> values_;
};

BinomialTable build_binomials(std::size_t max_row);

/// Builds the triangle row by row from {n+1 brace k} = {n brace k-1} + k {n brace k}.
StirlingTriangle build_stirling(std::size_t max_row);

/// B_n as the row sum of the Stirling triangle. Returns 1 for n = 0.
BigInt bell_from_stirling(const StirlingTriangle& tri, std::size_t n);

/// B_0..B_N from B_{n+1} = sum_d B_d C(n, n-d), starting at B_0 = 1.
///
/// Pascal rows are generated on the fly, so memory stays linear in N apart
/// from the Bell values themselves.
BellTable build_bell_binomial(std::size_t max_index);

}  // namespace touchard
