#include "gandhi/theta.hpp"

#include <chrono>
#include <stdexcept>

#include "gandhi/errors.hpp"

namespace gandhi {

namespace {

// Primorial value doubles as the bit-size of the common denominator
// 2^P - 1, so the budget check is a check on P itself.
std::uint64_t primorial_within_budget(std::size_t n, const PrimeTable& table,
                                      std::uint64_t bit_budget) {
    if (n == 0) {
        throw std::domain_error("theta: n must be >= 1");
    }
    const Primorial P = primorial(n, table);
    if (!P.value.fits_ulong_p() || P.value.get_ui() > bit_budget) {
        const std::uint64_t required =
            P.value.fits_ulong_p() ? P.value.get_ui() : UINT64_MAX;
        throw resource_error(
            "exact strategy needs a " +
                (P.value.fits_ulong_p() ? std::to_string(required)
                                        : P.value.get_str()) +
                "-bit denominator, over the " + std::to_string(bit_budget) +
                "-bit budget (n=" + std::to_string(n) + ")",
            required);
    }
    return P.value.get_ui();
}

BigInt pow2_int(std::uint64_t e) {
    BigInt r;
    mpz_mul_2exp(r.get_mpz_t(), BigInt(1).get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e));
    return r;
}

void check_theta_range(const BigRational& theta, std::size_t n) {
    if (!(BigRational(0) < theta && theta < BigRational(1))) {
        throw oracle_mismatch("theta(" + std::to_string(n) +
                              ") left (0,1); implementation bug");
    }
}

}  // namespace

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::exact_divisor: return "exact-divisor";
        case Strategy::exact_coprime: return "exact-coprime";
        case Strategy::interval: return "interval";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
    if (name == "exact-divisor") return Strategy::exact_divisor;
    if (name == "exact-coprime") return Strategy::exact_coprime;
    if (name == "interval") return Strategy::interval;
    return std::nullopt;
}

BigRational mersenne_divisor_sum(std::size_t n, const PrimeTable& table,
                                 std::uint64_t bit_budget) {
    const std::uint64_t P = primorial_within_budget(n, table, bit_budget);
    const BigInt D = pow2_int(P) - 1;

    // d | P implies (2^d - 1) | (2^P - 1): one common denominator, one
    // exact cofactor division per divisor.
    BigInt N = 0;
    BigInt cof;
    for (const DivisorTerm& term : squarefree_divisors(n, table)) {
        const BigInt mers = pow2_int(term.d.get_ui()) - 1;
        mpz_divexact(cof.get_mpz_t(), D.get_mpz_t(), mers.get_mpz_t());
        if (term.mu > 0) N += cof; else N -= cof;
    }
    return BigRational(N, D);
}

BigRational coprime_power_sum(std::size_t n, const PrimeTable& table,
                              std::uint64_t bit_budget) {
    const std::uint64_t P = primorial_within_budget(n, table, bit_budget);
    const BigInt D = pow2_int(P) - 1;

    // gcd(r, P) = 1 iff none of p_1..p_n divides r
    std::vector<std::uint64_t> ps;
    for (std::size_t i = 1; i <= n; ++i) ps.push_back(table.prime(i));

    BigInt S = 0;
    for (std::uint64_t r = 1; r <= P; ++r) {
        bool coprime = true;
        for (std::uint64_t p : ps) {
            if (r % p == 0) { coprime = false; break; }
        }
        if (coprime) {
            mpz_setbit(S.get_mpz_t(), static_cast<mp_bitcnt_t>(P - r));
        }
    }
    return BigRational(S, D);
}

ThetaEvaluation theta_exact_divisor(std::size_t n, const PrimeTable& table,
                                    std::uint64_t bit_budget) {
    BigRational theta =
        mersenne_divisor_sum(n, table, bit_budget) - BigRational(1, 2);
    check_theta_range(theta, n);
    return {n, Strategy::exact_divisor, std::move(theta), std::nullopt, 0};
}

ThetaEvaluation theta_exact_coprime(std::size_t n, const PrimeTable& table,
                                    std::uint64_t bit_budget) {
    BigRational theta =
        coprime_power_sum(n, table, bit_budget) - BigRational(1, 2);
    check_theta_range(theta, n);
    return {n, Strategy::exact_coprime, std::move(theta), std::nullopt, 0};
}

ThetaEvaluation theta_interval(std::size_t n, const PrimeTable& table,
                               std::uint32_t B) {
    if (n == 0) {
        throw std::domain_error("theta_interval: n must be >= 1");
    }
    const std::uint64_t pn = table.prime(n);
    if (B < pn) {
        throw precision_error("theta_interval: B=" + std::to_string(B) +
                              " < p_n=" + std::to_string(pn));
    }

    // Per-term enclosure of mu(d)/(2^d - 1): [T, T+1] ulps with T the
    // truncated geometric bit pattern (T = 0 once d > B, where the whole
    // term is below one ulp). Signs split evenly, 2^(n-1) each way, so
    // summing all 2^n terms costs only the divisors d <= B plus two
    // ulp counts.
    BigInt S = 0;
    BigInt tmp;
    std::vector<std::uint64_t> ps;
    for (std::size_t i = 1; i <= n; ++i) ps.push_back(table.prime(i));

    // DFS over subset products that stay <= B; primes ascend, so a
    // too-large product prunes the rest of the level.
    struct Frame { std::size_t next; std::uint64_t prod; int mu; };
    std::vector<Frame> stack{{0, 1, +1}};
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        tmp = 0;
        for (std::uint64_t t = f.prod; t <= B; t += f.prod) {
            mpz_setbit(tmp.get_mpz_t(), static_cast<mp_bitcnt_t>(B - t));
        }
        if (f.mu > 0) S += tmp; else S -= tmp;
        for (std::size_t j = f.next; j < ps.size(); ++j) {
            if (ps[j] > B / f.prod) break;
            stack.push_back({j + 1, f.prod * ps[j], -f.mu});
        }
    }

    const BigInt half_count = pow2_int(n - 1);  // terms of each sign
    const BigInt half = pow2_int(B - 1);        // the exact -1/2 term
    DyadicInterval enclosure(DyadicFixed(S - half_count - half, B),
                             DyadicFixed(S + half_count - half, B));
    return {n, Strategy::interval, std::nullopt, enclosure, B};
}

std::vector<bool> theta_bits(std::size_t n, const PrimeTable& table,
                             std::uint32_t B) {
    if (n == 0) {
        throw std::domain_error("theta_bits: n must be >= 1");
    }
    std::vector<bool> bits(B + 1, false);
    for (std::uint32_t t = 2; t <= B; ++t) {
        bool coprime = true;
        for (std::size_t i = 1; i <= n; ++i) {
            if (t % table.prime(i) == 0) { coprime = false; break; }
        }
        bits[t] = coprime;
    }
    return bits;
}

std::optional<std::size_t> first_one_position(const std::vector<bool>& bits) {
    for (std::size_t t = 0; t < bits.size(); ++t) {
        if (bits[t]) return t;
    }
    return std::nullopt;
}

namespace {

// floor(log2(2/theta)) for exact theta = num/den in (0,1): the unique p
// with den < num*2^p < 2*den, located by bit-length then confirmed by
// strict big-integer comparisons.
std::uint64_t floor_extract_exact(const BigRational& theta) {
    const BigInt num = theta.num();
    const BigInt den = theta.den();
    const auto a = mpz_sizeinbase(den.get_mpz_t(), 2);
    const auto b = mpz_sizeinbase(num.get_mpz_t(), 2);
    const std::int64_t guess = static_cast<std::int64_t>(a) -
                               static_cast<std::int64_t>(b);
    BigInt shifted;
    for (std::int64_t p = guess - 1; p <= guess + 1; ++p) {
        if (p < 1) continue;
        mpz_mul_2exp(shifted.get_mpz_t(), num.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(p));
        if (shifted > den && shifted < 2 * den) {
            return static_cast<std::uint64_t>(p);
        }
    }
    throw oracle_mismatch("floor extraction: no p with strict bracketing "
                          "2^-p < theta < 2^(1-p)");
}

// floor(log2(3/(2 theta))): the p with num*2^(p+1) < 3*den < num*2^(p+2).
std::uint64_t floor_extract_refined_exact(const BigRational& theta) {
    const BigInt num = theta.num();
    const BigInt three_den = 3 * theta.den();
    const auto a = mpz_sizeinbase(three_den.get_mpz_t(), 2);
    const auto b = mpz_sizeinbase(num.get_mpz_t(), 2);
    const std::int64_t guess = static_cast<std::int64_t>(a) -
                               static_cast<std::int64_t>(b) - 1;
    BigInt lo_side, hi_side;
    for (std::int64_t p = guess - 1; p <= guess + 1; ++p) {
        if (p < 1) continue;
        mpz_mul_2exp(lo_side.get_mpz_t(), num.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(p + 1));
        mpz_mul_2exp(hi_side.get_mpz_t(), num.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(p + 2));
        if (lo_side < three_den && three_den < hi_side) {
            return static_cast<std::uint64_t>(p);
        }
    }
    throw oracle_mismatch("refined floor extraction: no p with strict "
                          "bracketing of 3/(2 theta)");
}

// Interval version of the refined floor: p such that
// 3*2^(-p-2) < lo and hi < 3*2^(-p-1), all comparisons dyadic-exact.
std::optional<std::uint64_t> extract_refined_interval(const DyadicInterval& iv) {
    if (iv.lo().sign() <= 0) return std::nullopt;
    const std::uint32_t B = iv.lo().frac_bits();
    const auto k = static_cast<std::uint32_t>(
        mpz_sizeinbase(iv.lo().mantissa().get_mpz_t(), 2) - 1);
    if (k >= B) return std::nullopt;
    const std::uint64_t e = B - k;  // lo in [2^-e, 2^(-e+1))
    for (std::int64_t p = static_cast<std::int64_t>(e) - 1;
         p <= static_cast<std::int64_t>(e) + 1; ++p) {
        if (p < 1 || static_cast<std::uint64_t>(p) + 2 > B) continue;
        BigInt bound_lo = 3 * pow2_int(B - static_cast<std::uint64_t>(p) - 2);
        BigInt bound_hi = 3 * pow2_int(B - static_cast<std::uint64_t>(p) - 1);
        if (iv.lo().mantissa() > bound_lo && iv.hi().mantissa() < bound_hi) {
            return static_cast<std::uint64_t>(p);
        }
    }
    return std::nullopt;
}

NextPrimeResult next_prime_impl(std::size_t n, const PrimeTable& table,
                                Strategy strategy, const EvalConfig& config,
                                bool refined) {
    NextPrimeResult result;
    if (strategy == Strategy::interval) {
        std::uint32_t B = std::max<std::uint32_t>(
            config.initial_precision_bits,
            static_cast<std::uint32_t>(table.prime(n)));
        for (;;) {
            ThetaEvaluation eval = theta_interval(n, table, B);
            const std::optional<std::uint64_t> p =
                refined ? extract_refined_interval(*eval.enclosure)
                        : extract_next_prime(*eval.enclosure);
            if (p) {
                result.p = *p;
                result.eval = std::move(eval);
                result.precision_bits = B;
                break;
            }
            result.escalated = true;
            if (B >= config.max_precision_bits) {
                throw resource_error(
                    "interval strategy inconclusive at max precision " +
                        std::to_string(config.max_precision_bits) + " bits",
                    std::uint64_t{B} * 2);
            }
            B = std::min(B * 2, config.max_precision_bits);
        }
    } else {
        ThetaEvaluation eval =
            strategy == Strategy::exact_divisor
                ? theta_exact_divisor(n, table, config.exact_bit_budget)
                : theta_exact_coprime(n, table, config.exact_bit_budget);
        result.p = refined ? floor_extract_refined_exact(*eval.exact)
                           : floor_extract_exact(*eval.exact);
        result.eval = std::move(eval);
    }
    if (config.cross_check && result.p != table.prime(n + 1)) {
        throw oracle_mismatch(
            "formula produced " + std::to_string(result.p) + " for n=" +
            std::to_string(n) + " but the sieve says p_" +
            std::to_string(n + 1) + " = " + std::to_string(table.prime(n + 1)));
    }
    return result;
}

}  // namespace

NextPrimeResult next_prime_full(std::size_t n, const PrimeTable& table,
                                Strategy strategy, const EvalConfig& config) {
    return next_prime_impl(n, table, strategy, config, /*refined=*/false);
}

std::uint64_t next_prime_gandhi(std::size_t n, const PrimeTable& table,
                                Strategy strategy, const EvalConfig& config) {
    return next_prime_full(n, table, strategy, config).p;
}

std::uint64_t next_prime_refined(std::size_t n, const PrimeTable& table,
                                 Strategy strategy, const EvalConfig& config) {
    return next_prime_impl(n, table, strategy, config, /*refined=*/true).p;
}

BigRational residual(std::size_t n, const PrimeTable& table,
                     std::uint64_t bit_budget) {
    const ThetaEvaluation eval = theta_exact_divisor(n, table, bit_budget);
    const std::uint64_t p = floor_extract_exact(*eval.exact);
    BigRational r = *eval.exact - BigRational::pow2(-static_cast<std::int64_t>(p));
    if (!(r > BigRational(0))) {
        throw oracle_mismatch("residual r_n must be strictly positive");
    }
    return r;
}

bool BoundReport::all_pass() const {
    for (const BoundCheck& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

BoundReport bounds_report(std::size_t n, const PrimeTable& table,
                          std::uint64_t bit_budget) {
    BoundReport report;
    report.n = n;
    const ThetaEvaluation eval = theta_exact_divisor(n, table, bit_budget);
    report.theta = *eval.exact;
    report.p_next = floor_extract_exact(report.theta);
    const auto p = static_cast<std::int64_t>(report.p_next);
    report.r = report.theta - BigRational::pow2(-p);

    auto add_lt = [&report](std::string name, const BigRational& left,
                            const BigRational& right) {
        report.checks.push_back(
            {std::move(name), left, "<", right, left < right});
    };
    add_lt("lower_bracket", BigRational::pow2(-p), report.theta);
    add_lt("upper_bracket", report.theta, BigRational(2) * BigRational::pow2(-p));
    add_lt("residual_bound", report.r, BigRational::pow2(-p));
    add_lt("residual_half_bound", report.r, BigRational::pow2(-p - 1));
    add_lt("refined_upper", report.theta,
           BigRational(3, 2) * BigRational::pow2(-p));
    return report;
}

std::vector<std::uint64_t> gandhi_sequence(
    std::size_t k, Strategy strategy, const EvalConfig& config,
    const std::function<void(const SequenceRow&)>& row_sink) {
    if (k == 0) {
        throw std::domain_error("gandhi_sequence: k must be >= 1");
    }
    using clock = std::chrono::steady_clock;
    PrimeTable table;
    std::vector<std::uint64_t> out{2};
    if (row_sink) row_sink({1, 2, true, 0, 0.0});
    for (std::size_t n = 1; n < k; ++n) {
        const auto t0 = clock::now();
        NextPrimeResult step;
        try {
            step = next_prime_full(n, table, strategy, config);
        } catch (const resource_error& e) {
            throw resource_error("stopped after " + std::to_string(out.size()) +
                                     " of " + std::to_string(k) + " primes: " +
                                     e.what(),
                                 e.required_bits());
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              clock::now() - t0).count();
        out.push_back(step.p);
        if (row_sink) {
            row_sink({n + 1, step.p, false, step.precision_bits, ms});
        }
    }
    return out;
}

}  // namespace gandhi
