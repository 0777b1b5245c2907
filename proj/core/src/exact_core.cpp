#include "touchard/exact_core.hpp"

#include <string>

#include "touchard/error.hpp"

namespace touchard {

namespace {

const BigInt& zero() {
    static const BigInt z{0};
    return z;
}

void require_row(std::size_t n, std::size_t max_row, const char* what) {
    if (n > max_row) {
        throw UsageError(std::string(what) + ": row " + std::to_string(n) +
                         " exceeds table depth " + std::to_string(max_row));
    }
}

}  // namespace

const BigInt& BinomialTable::at(std::size_t n, std::size_t k) const {
    require_row(n, max_row(), "binomial table");
    return k > n ? zero() : rows_[n][k];
}

const std::vector<BigInt>& BinomialTable::row(std::size_t n) const {
    require_row(n, max_row(), "binomial table");
    return rows_[n];
}

const BigInt& StirlingTriangle::at(std::size_t n, std::size_t k) const {
    require_row(n, max_row(), "stirling triangle");
    return k > n ? zero() : rows_[n][k];
}

const std::vector<BigInt>& StirlingTriangle::row(std::size_t n) const {
    require_row(n, max_row(), "stirling triangle");
    return rows_[n];
}

BellTable::BellTable(std::vector<BigInt> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw UsageError("bell table needs at least B_0");
    }
}

const BigInt& BellTable::at(std::size_t n) const {
    if (n > max_index()) {
        throw UsageError("bell table: index " + std::to_string(n) + " exceeds table depth " +
                         std::to_string(max_index()));
    }
    return values_[n];
}

BinomialTable build_binomials(std::size_t max_row) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(max_row + 1);
    rows.push_back({BigInt{1}});
    for (std::size_t n = 1; n <= max_row; ++n) {
        const auto& prev = rows.back();
        std::vector<BigInt> cur(n + 1);
        cur[0] = 1;
        cur[n] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            cur[k] = prev[k - 1] + prev[k];
        }
        rows.push_back(std::move(cur));
    }
    return BinomialTable{std::move(rows)};
}

StirlingTriangle build_stirling(std::size_t max_row) {
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(max_row + 1);
    rows.push_back({BigInt{1}});
    for (std::size_t n = 0; n < max_row; ++n) {
        const auto& prev = rows.back();
        std::vector<BigInt> cur(n + 2);
        cur[0] = 0;
        cur[n + 1] = 1;
        for (std::size_t k = 1; k <= n; ++k) {
            cur[k] = prev[k - 1];
            mpz_addmul_ui(cur[k].get_mpz_t(), prev[k].get_mpz_t(), static_cast<unsigned long>(k));
        }
        rows.push_back(std::move(cur));
    }
    return StirlingTriangle{std::move(rows)};
}

BigInt bell_from_stirling(const StirlingTriangle& tri, std::size_t n) {
    if (n > tri.max_row()) {
        throw UsageError("bell_from_stirling: n = " + std::to_string(n) +
                         " exceeds triangle depth " + std::to_string(tri.max_row()));
    }
    if (n == 0) {
        return BigInt{1};
    }
    BigInt sum{0};
    const auto& row = tri.row(n);
    for (std::size_t k = 1; k <= n; ++k) {
        sum += row[k];
    }
    return sum;
}

BellTable build_bell_binomial(std::size_t max_index) {
    std::vector<BigInt> bell;
    bell.reserve(max_index + 1);
    bell.emplace_back(1);

    // pascal holds row n of Pascal's triangle at the top of iteration n
    std::vector<BigInt> pascal{BigInt{1}};
    pascal.reserve(max_index + 1);
    for (std::size_t n = 0; n < max_index; ++n) {
        BigInt next{0};
        for (std::size_t d = 0; d <= n; ++d) {
            // C(n, n-d) = C(n, d)
            mpz_addmul(next.get_mpz_t(), bell[d].get_mpz_t(), pascal[n - d].get_mpz_t());
        }
        bell.push_back(std::move(next));

        pascal.emplace_back(1);
        for (std::size_t k = n; k >= 1; --k) {
            pascal[k] += pascal[k - 1];
        }
    }
    return BellTable{std::move(bell)};
}

}  // namespace touchard
