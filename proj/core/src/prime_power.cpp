#include "touchard/prime_power.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "touchard/error.hpp"

namespace touchard {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PrimePower::PrimePower(std::uint64_t p, std::uint32_t m) : p_(p), m_(m), value_(1) {
    if (!is_prime(p)) {
        throw UsageError(std::to_string(p) + " is not prime");
    }
    if (p > kMaxPrime) {
        throw UsageError("prime " + std::to_string(p) + " exceeds the word-size bound " +
                         std::to_string(kMaxPrime));
    }
    if (m == 0) {
        throw UsageError("prime power exponent must be positive");
    }
    for (std::uint32_t i = 0; i < m; ++i) {
        if (value_ > std::numeric_limits<std::uint64_t>::max() / p) {
            throw UsageError(std::to_string(p) + "^" + std::to_string(m) +
                             " does not fit in 64 bits");
        }
        value_ *= p;
    }
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t limit) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (!is_prime(p)) continue;
        std::uint64_t v = p;
        for (std::uint32_t m = 1;; ++m) {
            out.emplace_back(p, m);
            if (v > limit / p) break;
            v *= p;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.value() < b.value(); });
    return out;
}

}  // namespace touchard
