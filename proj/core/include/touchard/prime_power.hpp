#pragma once

#include <cstdint>
#include <vector>

namespace touchard {

/// Trial division.
bool is_prime(std::uint64_t n) noexcept;

/// Largest prime accepted anywhere a residue modulus is needed; keeps p*p
/// inside a 64-bit word.
inline constexpr std::uint64_t kMaxPrime = 4294967291ULL;

/// p^m with p prime and m >= 1.
class PrimePower {
public:
    /// Throws UsageError for composite p, p > kMaxPrime, m == 0, or when
    /// p^m overflows 64 bits.
    PrimePower(std::uint64_t p, std::uint32_t m);

    std::uint64_t prime() const noexcept { return p_; }
    std::uint32_t exponent() const noexcept { return m_; }
    std::uint64_t value() const noexcept { return value_; }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;

private:
    std::uint64_t p_;
    std::uint32_t m_;
    std::uint64_t value_;
};

/// Every prime power p^m (m >= 1) not exceeding limit, in increasing order of value.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t limit);

}  // namespace touchard
