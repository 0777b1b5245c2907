#include "touchard/modular.hpp"

#include <string>

#include "touchard/bigint.hpp"
#include "touchard/error.hpp"

namespace touchard {

namespace {

void require_prime_modulus(std::uint64_t p, const char* what) {
    if (!is_prime(p)) {
        throw UsageError(std::string(what) + ": " + std::to_string(p) + " is not prime");
    }
    if (p > kMaxPrime) {
        throw UsageError(std::string(what) + ": prime " + std::to_string(p) +
                         " exceeds the word-size bound");
    }
}

/// k^r as a function on Z/p collapses to k^(1 + (r-1) mod (p-1)) for r >= 1.
std::size_t folded_degree(std::uint64_t r, std::uint64_t p) {
    if (r == 0) return 0;
    return static_cast<std::size_t>(1 + (r - 1) % (p - 1));
}

}  // namespace

ReductionCase reduction_case(const PrimePower& pp) noexcept {
    if (pp.prime() != 2) return ReductionCase::odd_prime;
    switch (pp.exponent()) {
        case 1: return ReductionCase::two_linear;
        case 2: return ReductionCase::two_square;
        default: return ReductionCase::two_higher_power;
    }
}

const char* to_string(ReductionCase c) noexcept {
    switch (c) {
        case ReductionCase::odd_prime: return "odd_prime";
        case ReductionCase::two_linear: return "two_linear";
        case ReductionCase::two_square: return "two_square";
        case ReductionCase::two_higher_power: return "two_higher_power";
    }
    return "unknown";
}

bool ReducedShiftPoly::is_two_term() const noexcept {
    if (folded.empty() || folded[0] != constant) return false;
    if (folded.size() < 2 || folded[1] != 1 % pp.prime()) return false;
    for (std::size_t d = 2; d < folded.size(); ++d) {
        if (folded[d] != 0) return false;
    }
    return true;
}

ReducedShiftPoly reduce_shift_poly(const PrimePower& pp, const BellTable& bell) {
    const std::uint64_t p = pp.prime();
    const std::uint64_t q = pp.value();
    if (bell.max_index() < q) {
        throw UsageError("reduce_shift_poly: needs B_" + std::to_string(q) +
                         " but the bell table stops at " + std::to_string(bell.max_index()));
    }

    // degrees 0..p-1; for p = 2 that is {1, k}
    std::vector<std::uint64_t> folded(static_cast<std::size_t>(p), 0);
    BigInt binom{1};  // C(q, r)
    for (std::uint64_t r = 0; r <= q; ++r) {
        if (r > 0) {
            binom *= static_cast<unsigned long>(q - r + 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(r));
        }
        const std::uint64_t term = (mod_u64(bell.at(q - r), p) * mod_u64(binom, p)) % p;
        auto& slot = folded[folded_degree(r, p)];
        slot = (slot + term) % p;
    }

    ReducedShiftPoly out{pp, reduction_case(pp), mod_u64(bell.at(q), p), folded[1],
                         std::move(folded)};
    return out;
}

bool binomial_vanishing_check(const PrimePower& pp, const BinomialTable& binom) {
    const std::uint64_t q = pp.value();
    if (binom.max_row() < q) {
        throw UsageError("binomial_vanishing_check: needs Pascal row " + std::to_string(q) +
                         " but the table stops at " + std::to_string(binom.max_row()));
    }
    const auto& row = binom.row(static_cast<std::size_t>(q));
    for (std::uint64_t r = 1; r < q; ++r) {
        if (mod_u64(row[r], pp.prime()) != 0) return false;
    }
    return true;
}

std::uint64_t lemma_residue(const PrimePower& pp) noexcept {
    return (static_cast<std::uint64_t>(pp.exponent()) + 1) % pp.prime();
}

CongruenceReport touchard_check(const PrimePower& pp, std::uint64_t n_lo, std::uint64_t n_hi,
                                const BellTable& bell) {
    if (n_lo == 0 || n_lo > n_hi) {
        throw UsageError("touchard_check: need 1 <= n_lo <= n_hi, got [" + std::to_string(n_lo) +
                         ", " + std::to_string(n_hi) + "]");
    }
    const std::uint64_t p = pp.prime();
    const std::uint64_t q = pp.value();
    if (n_hi > bell.max_index() || bell.max_index() - n_hi < q) {
        throw UsageError("touchard_check: needs B_" + std::to_string(n_hi) + "+" +
                         std::to_string(q) + " but the bell table stops at " +
                         std::to_string(bell.max_index()));
    }
    const std::uint64_t m_mod = pp.exponent() % p;

    CongruenceReport report{pp, n_lo, n_hi, 0, {}};
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const std::uint64_t lhs = mod_u64(bell.at(n + q), p);
        const std::uint64_t rhs = (m_mod * mod_u64(bell.at(n), p) + mod_u64(bell.at(n + 1), p)) % p;
        ++report.checked;
        if (lhs != rhs) {
            report.counterexamples.push_back({n, lhs, rhs});
        }
    }
    return report;
}

std::vector<std::uint64_t> bell_seeds(std::uint64_t p, const BellTable& bell) {
    require_prime_modulus(p, "bell_seeds");
    if (bell.max_index() < p - 1) {
        throw UsageError("bell_seeds: needs B_0..B_" + std::to_string(p - 1) +
                         " but the bell table stops at " + std::to_string(bell.max_index()));
    }
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(p));
    for (std::size_t n = 0; n < seeds.size(); ++n) {
        seeds[n] = mod_u64(bell.at(n), p);
    }
    return seeds;
}

std::vector<std::uint64_t> bell_mod_p_stream(std::uint64_t p, std::size_t N,
                                             std::span<const std::uint64_t> seeds) {
    require_prime_modulus(p, "bell_mod_p_stream");
    if (seeds.size() != p) {
        throw UsageError("bell_mod_p_stream: expected " + std::to_string(p) +
                         " seeds (B_0..B_" + std::to_string(p - 1) + " mod p), got " +
                         std::to_string(seeds.size()));
    }
    if (N + 1 < p) {
        throw UsageError("bell_mod_p_stream: N = " + std::to_string(N) +
                         " is shorter than the seed window " + std::to_string(p - 1));
    }
    std::vector<std::uint64_t> out(N + 1);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (seeds[i] >= p) {
            throw UsageError("bell_mod_p_stream: seed " + std::to_string(i) +
                             " is not a residue mod " + std::to_string(p));
        }
        out[i] = seeds[i];
    }
    const auto window = static_cast<std::size_t>(p);
    for (std::size_t n = window; n <= N; ++n) {
        const std::uint64_t s = out[n - window] + out[n - window + 1];
        out[n] = s >= p ? s - p : s;
    }
    return out;
}

}  // namespace touchard
