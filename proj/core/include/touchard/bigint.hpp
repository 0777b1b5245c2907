#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace touchard {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// Nonnegative residue of v modulo p. p must be nonzero.
inline std::uint64_t mod_u64(const BigInt& v, std::uint64_t p) {
    // mpz_fdiv_ui always returns the nonnegative remainder
    return static_cast<std::uint64_t>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
}

}  // namespace touchard
