#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "touchard/bigint.hpp"
#include "touchard/error.hpp"
#include "touchard/exact_core.hpp"
#include "touchard/modular.hpp"
#include "touchard/partition_oracle.hpp"
#include "touchard/shift_poly.hpp"

namespace touchard::cli {

namespace {

/// Flags shared by every subcommand; unset ones fall back to the environment.
struct CommonFlags {
    std::string format;
    std::optional<std::size_t> depth;
    std::optional<std::size_t> cap;
};

void add_common_flags(CLI::App* sub, CommonFlags& flags) {
    sub->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"tsv", "json-lines"}));
    sub->add_option("--depth", flags.depth, "Largest index exact tables may reach (default 200)");
    sub->add_option("--cap", flags.cap, "Largest ground set partitions are enumerated for (default 12)")
        ->check(CLI::PositiveNumber);
}

std::size_t parse_env_size(const std::string& name, const std::string& text) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size() || text.front() == '-') {
        throw UsageError(name + " must be a nonnegative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

/// flags > environment > defaults
RunConfig resolve_config(const CommonFlags& flags, const EnvLookup& env) {
    RunConfig cfg;
    if (auto v = env(kDepthEnv)) cfg.table_depth = parse_env_size(kDepthEnv, *v);
    if (auto v = env(kCapEnv)) cfg.enumeration_cap = parse_env_size(kCapEnv, *v);
    if (flags.depth) cfg.table_depth = *flags.depth;
    if (flags.cap) cfg.enumeration_cap = *flags.cap;
    if (flags.format == "json-lines") cfg.format = OutputFormat::json_lines;
    if (cfg.enumeration_cap == 0) {
        throw UsageError("enumeration cap must be at least 1");
    }
    return cfg;
}

void require_depth(std::uint64_t index, const RunConfig& cfg, const std::string& why) {
    if (index > cfg.table_depth) {
        throw UsageError(why + " needs exact tables to index " + std::to_string(index) +
                         ", beyond the table depth " + std::to_string(cfg.table_depth) +
                         " (raise --depth or " + kDepthEnv + ")");
    }
}

std::uint32_t to_exponent(std::uint64_t m) {
    if (m == 0 || m > 64) {
        throw UsageError("exponent m must be in [1, 64], got " + std::to_string(m));
    }
    return static_cast<std::uint32_t>(m);
}

PrimePower make_prime_power(std::uint64_t p, std::uint64_t m) {
    if (!is_prime(p)) {
        throw UsageError(std::to_string(p) + " is composite or not a prime (p must be prime)");
    }
    return PrimePower{p, to_exponent(m)};
}

int cmd_bell(std::size_t n, const std::string& method, bool cross_check, const RunConfig& cfg,
             std::ostream& out, std::ostream& err) {
    require_depth(n, cfg, "bell");
    std::vector<BigInt> values;
    std::optional<std::vector<BigInt>> other;

    if (method == "stirling" || cross_check) {
        const auto tri = build_stirling(n);
        std::vector<BigInt> via_stirling;
        via_stirling.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) via_stirling.push_back(bell_from_stirling(tri, i));
        if (method == "stirling") values = std::move(via_stirling);
        else other = std::move(via_stirling);
    }
    if (method == "binomial" || cross_check) {
        auto via_binomial = build_bell_binomial(n).values();
        if (method == "binomial") values = std::move(via_binomial);
        else other = std::move(via_binomial);
    }
    if (cross_check) {
        for (std::size_t i = 0; i <= n; ++i) {
            if (values[i] != (*other)[i]) {
                err << "bell: recurrences disagree at n = " << i << ": " << to_decimal(values[i])
                    << " vs " << to_decimal((*other)[i]) << '\n';
                return kExitCounterexample;
            }
        }
    }

    RecordWriter w(out, cfg.format);
    w.begin("bell", {"n", "value"});
    for (std::size_t i = 0; i <= n; ++i) {
        w.write({std::uint64_t{i}, to_decimal(values[i])});
    }
    return kExitOk;
}

int cmd_stirling(std::size_t n, const RunConfig& cfg, std::ostream& out) {
    require_depth(n, cfg, "stirling");
    const auto tri = build_stirling(n);
    RecordWriter w(out, cfg.format);
    w.begin("stirling", {"n", "k", "value"});
    for (std::size_t row = 0; row <= n; ++row) {
        for (std::size_t k = 0; k <= row; ++k) {
            w.write({std::uint64_t{row}, std::uint64_t{k}, to_decimal(tri.at(row, k))});
        }
    }
    return kExitOk;
}

void write_poly(RecordWriter& w, const char* kind, const ShiftPolynomial& poly) {
    w.begin(kind, {"j", "r", "coefficient"});
    const auto& c = poly.coeffs();
    for (std::size_t r = 0; r < c.size(); ++r) {
        w.write({std::uint64_t{poly.shift()}, std::uint64_t{r}, to_decimal(c[r])});
    }
}

int cmd_shift_poly(std::size_t j, bool cross_check, const RunConfig& cfg, std::ostream& out,
                   std::ostream& err) {
    require_depth(j, cfg, "shift-poly");
    const auto closed = shift_poly_closed(j, build_bell_binomial(j), build_binomials(j));
    RecordWriter w(out, cfg.format);
    write_poly(w, "shift_poly", closed);
    if (!cross_check) return kExitOk;

    const auto recursive = shift_poly_recursive(j);
    write_poly(w, "shift_poly_recursive", recursive);
    const bool agree = closed == recursive;
    w.begin("cross_check", {"j", "agree"});
    w.write({std::uint64_t{j}, agree});
    if (!agree) {
        err << "shift-poly: closed form and recurrence disagree for P_" << j << '\n';
        return kExitCounterexample;
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t p, std::uint64_t m, std::uint64_t n_lo, std::uint64_t n_hi,
               const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto pp = make_prime_power(p, m);
    if (n_lo == 0 || n_lo > n_hi) {
        throw UsageError("verify: need 1 <= n_lo <= n_hi");
    }
    if (n_hi > std::numeric_limits<std::uint64_t>::max() - pp.value()) {
        throw UsageError("verify: n_hi + p^m overflows");
    }
    require_depth(n_hi + pp.value(), cfg, "verify");
    const auto bell = build_bell_binomial(static_cast<std::size_t>(n_hi + pp.value()));

    RecordWriter w(out, cfg.format);

    const std::uint64_t residue = mod_u64(bell.at(pp.value()), p);
    const std::uint64_t predicted = lemma_residue(pp);
    const bool lemma_holds = residue == predicted;
    w.begin("lemma", {"p", "m", "modulus", "bell_residue", "predicted", "holds"});
    w.write({p, m, pp.value(), residue, predicted, lemma_holds});

    const auto reduced = reduce_shift_poly(pp, bell);
    w.begin("reduction", {"p", "m", "case", "constant", "linear", "two_term"});
    w.write({p, m, std::string(to_string(reduced.which_case)), reduced.constant, reduced.linear,
             reduced.is_two_term()});

    const auto report = touchard_check(pp, n_lo, n_hi, bell);
    if (!report.ok()) {
        w.begin("counterexample", {"n", "lhs", "rhs"});
        for (const auto& c : report.counterexamples) w.write({c.n, c.lhs, c.rhs});
    }
    w.begin("summary", {"p", "m", "n_lo", "n_hi", "checked", "counterexamples"});
    w.write({p, m, n_lo, n_hi, report.checked, std::uint64_t{report.counterexamples.size()}});

    if (!lemma_holds || !reduced.is_two_term() || !report.ok()) {
        err << "verify: counterexample found for p = " << p << ", m = " << m << '\n';
        return kExitCounterexample;
    }
    return kExitOk;
}

int cmd_orbits(std::uint64_t p, std::uint64_t m, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
    const auto pp = make_prime_power(p, m);
    if (pp.value() > cfg.enumeration_cap) {
        throw EnumerationCapError(static_cast<std::size_t>(pp.value()), cfg.enumeration_cap);
    }
    const auto modulus = static_cast<std::size_t>(pp.value());
    require_depth(modulus, cfg, "orbits");

    const auto orbits = orbit_decomposition(modulus, cfg.enumeration_cap);
    std::map<std::size_t, std::uint64_t> histogram;
    std::uint64_t total = 0;
    std::vector<SetPartition> fixed;
    for (const auto& o : orbits) {
        ++histogram[o.size];
        total += o.size;
        if (o.is_fixed) fixed.push_back(o.representative);
    }
    const std::uint64_t bell_mod_p = mod_u64(build_bell_binomial(modulus).at(modulus), p);
    const std::uint64_t fixed_count = fixed.size();

    std::set<SetPartition> expected;
    for (std::uint32_t j = 0; j <= pp.exponent(); ++j) {
        expected.insert(congruence_class_partition(pp, j));
    }
    const bool characterized = std::set<SetPartition>(fixed.begin(), fixed.end()) == expected;

    RecordWriter w(out, cfg.format);
    w.begin("orbit_summary", {"p", "m", "modulus", "total", "orbits", "fixed", "expected_fixed",
                              "fixed_mod_p", "bell_mod_p"});
    w.write({p, m, pp.value(), total, std::uint64_t{orbits.size()}, fixed_count,
             std::uint64_t{m + 1}, fixed_count % p, bell_mod_p});
    w.begin("orbit_size", {"size", "count"});
    for (const auto& [size, count] : histogram) w.write({std::uint64_t{size}, count});
    w.begin("fixed", {"partition", "blocks", "block_size"});
    for (const auto& f : fixed) {
        w.write({f.to_string(), std::uint64_t{f.block_count()},
                 std::uint64_t{f.block_sizes().front()}});
    }

    if (fixed_count != m + 1 || fixed_count % p != bell_mod_p || !characterized) {
        err << "orbits: fixed partitions do not match the predicted " << m + 1
            << " congruence-class partitions\n";
        return kExitCounterexample;
    }
    return kExitOk;
}

int cmd_bell_mod(std::uint64_t p, std::size_t n, bool cross_check, const RunConfig& cfg,
                 std::ostream& out, std::ostream& err) {
    if (!is_prime(p) || p > kMaxPrime) {
        throw UsageError("bell-mod: " + std::to_string(p) + " is not an admissible prime");
    }
    require_depth(p - 1, cfg, "bell-mod seeds");
    const auto seed_table = build_bell_binomial(static_cast<std::size_t>(p - 1));
    const auto seeds = bell_seeds(p, seed_table);

    std::vector<std::uint64_t> residues;
    if (n + 1 < p) {
        residues.assign(seeds.begin(), seeds.begin() + static_cast<std::ptrdiff_t>(n + 1));
    } else {
        residues = bell_mod_p_stream(p, n, seeds);
    }

    if (cross_check && n <= cfg.table_depth) {
        const auto exact = build_bell_binomial(n);
        for (std::size_t i = 0; i <= n; ++i) {
            const auto want = mod_u64(exact.at(i), p);
            if (residues[i] != want) {
                err << "bell-mod: stream gives " << residues[i] << " at n = " << i
                    << " but the exact value reduces to " << want << '\n';
                return kExitCounterexample;
            }
        }
    }

    RecordWriter w(out, cfg.format);
    w.begin("bell_mod", {"p", "n", "residue"});
    for (std::size_t i = 0; i <= n; ++i) w.write({p, std::uint64_t{i}, residues[i]});
    return kExitOk;
}

}  // namespace

EnvLookup process_env() {
    return [](const std::string& name) -> std::optional<std::string> {
        if (const char* v = std::getenv(name.c_str())) return std::string(v);
        return std::nullopt;
    };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env) {
    CLI::App app{"Exact and modular Bell, Stirling and shift-polynomial computations"};
    app.name("touchard");
    app.require_subcommand(1, 1);

    CommonFlags flags;

    std::size_t bell_n = 0;
    std::string bell_method = "binomial";
    bool bell_cross = false;
    auto* bell = app.add_subcommand("bell", "Emit B_0..B_N");
    bell->add_option("N", bell_n, "Largest index")->required();
    bell->add_option("--method", bell_method, "Recurrence to use")
        ->check(CLI::IsMember({"binomial", "stirling"}));
    bell->add_flag("--cross-check", bell_cross, "Compute both recurrences and compare");
    add_common_flags(bell, flags);

    std::size_t stirling_n = 0;
    auto* stirling = app.add_subcommand("stirling", "Emit Stirling numbers of the second kind, rows 0..N");
    stirling->add_option("N", stirling_n, "Largest row")->required();
    add_common_flags(stirling, flags);

    std::size_t shift_j = 0;
    bool shift_cross = false;
    auto* shift = app.add_subcommand("shift-poly", "Emit the coefficients of P_j, ascending");
    shift->add_option("j", shift_j, "Shift")->required();
    shift->add_flag("--cross-check", shift_cross, "Also build P_j by the recurrence and compare");
    add_common_flags(shift, flags);

    std::uint64_t verify_p = 0, verify_m = 0, verify_lo = 0, verify_hi = 0;
    auto* verify = app.add_subcommand("verify", "Check B_{n+p^m} = m B_n + B_{n+1} (mod p) and B_{p^m} = m+1 (mod p)");
    verify->add_option("p", verify_p, "Prime")->required();
    verify->add_option("m", verify_m, "Exponent")->required();
    verify->add_option("n_lo", verify_lo, "First n")->required();
    verify->add_option("n_hi", verify_hi, "Last n")->required();
    add_common_flags(verify, flags);

    std::uint64_t orbit_p = 0, orbit_m = 0;
    auto* orbits = app.add_subcommand("orbits", "Orbits of translations on the partitions of Z/p^m");
    orbits->add_option("p", orbit_p, "Prime")->required();
    orbits->add_option("m", orbit_m, "Exponent")->required();
    add_common_flags(orbits, flags);

    std::uint64_t mod_p = 0;
    std::size_t mod_n = 0;
    bool mod_no_cross = false;
    auto* bell_mod = app.add_subcommand("bell-mod", "Emit B_0..B_N mod p from the linear recurrence");
    bell_mod->add_option("p", mod_p, "Prime")->required();
    bell_mod->add_option("N", mod_n, "Largest index")->required();
    bell_mod->add_flag("--no-cross-check", mod_no_cross,
                       "Skip comparison with exact reduction (done by default when N <= depth)");
    add_common_flags(bell_mod, flags);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const RunConfig cfg = resolve_config(flags, env);
        if (*bell) return cmd_bell(bell_n, bell_method, bell_cross, cfg, out, err);
        if (*stirling) return cmd_stirling(stirling_n, cfg, out);
        if (*shift) return cmd_shift_poly(shift_j, shift_cross, cfg, out, err);
        if (*verify) return cmd_verify(verify_p, verify_m, verify_lo, verify_hi, cfg, out, err);
        if (*orbits) return cmd_orbits(orbit_p, orbit_m, cfg, out, err);
        if (*bell_mod) return cmd_bell_mod(mod_p, mod_n, !mod_no_cross, cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace touchard::cli
