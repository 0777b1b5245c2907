#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "touchard/exact_core.hpp"
#include "touchard/prime_power.hpp"

namespace touchard {

/// Which argument justifies dropping the interior terms of P_{p^m} mod p.
enum class ReductionCase {
    odd_prime,        ///< p odd: C(p^m, r) = 0 mod p for 0 < r < p^m
    two_linear,       ///< p = 2, m = 1: C(2, 1) = 2
    two_square,       ///< p = 2, m = 2: the k^2 term B_2 C(4, 2) k^2 is even
    two_higher_power, ///< p = 2, m > 2: same vanishing as the odd case
};

ReductionCase reduction_case(const PrimePower& pp) noexcept;
const char* to_string(ReductionCase c) noexcept;

/// P_{p^m}(k) mod p viewed as a function of k, folded with k^p = k.
///
/// folded[d] is the residue multiplying k^d after folding, for d in [0, p).
/// The two-term form holds when folded == {constant, 1, 0, ..., 0}.
struct ReducedShiftPoly {
    PrimePower pp;
    ReductionCase which_case;
    std::uint64_t constant;  ///< B_{p^m} mod p
    std::uint64_t linear;    ///< coefficient of k, expected 1
    std::vector<std::uint64_t> folded;

    bool is_two_term() const noexcept;
};

/// Requires bell.max_index() >= p^m.
ReducedShiftPoly reduce_shift_poly(const PrimePower& pp, const BellTable& bell);

/// True iff C(p^m, r) = 0 mod p for all 0 < r < p^m. Requires binom.max_row() >= p^m.
bool binomial_vanishing_check(const PrimePower& pp, const BinomialTable& binom);

/// (m + 1) mod p, the residue predicted for B_{p^m}.
std::uint64_t lemma_residue(const PrimePower& pp) noexcept;

struct Counterexample {
    std::uint64_t n;
    std::uint64_t lhs;  ///< B_{n+p^m} mod p
    std::uint64_t rhs;  ///< (m B_n + B_{n+1}) mod p

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CongruenceReport {
    PrimePower pp;
    std::uint64_t n_lo;
    std::uint64_t n_hi;
    std::uint64_t checked;
    std::vector<Counterexample> counterexamples;

    bool ok() const noexcept { return counterexamples.empty(); }
};

/// Compares B_{n+p^m} with m B_n + B_{n+1} modulo p for every n in [n_lo, n_hi].
/// Requires 1 <= n_lo <= n_hi and bell.max_index() >= n_hi + p^m.
CongruenceReport touchard_check(const PrimePower& pp, std::uint64_t n_lo, std::uint64_t n_hi,
                                const BellTable& bell);

/// B_0..B_{p-1} reduced mod p, taken from the exact table.
std::vector<std::uint64_t> bell_seeds(std::uint64_t p, const BellTable& bell);

/// Residues B_0..B_N mod p from B_{n+p} = B_n + B_{n+1} (mod p).
///
/// seeds must hold exactly B_0..B_{p-1} mod p and N must be at least p - 1.
std::vector<std::uint64_t> bell_mod_p_stream(std::uint64_t p, std::size_t N,
                                             std::span<const std::uint64_t> seeds);

}  // namespace touchard
