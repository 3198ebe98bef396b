#ifndef GANDHI_THETA_HPP
#define GANDHI_THETA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gandhi/dyadic.hpp"
#include "gandhi/numtheory.hpp"
#include "gandhi/rational.hpp"

namespace gandhi {

enum class Strategy {
    exact_divisor,  // common-denominator sum over the 2^n primorial divisors
    exact_coprime,  // closed-form sum over coprime residues mod p_n#
    interval,       // dyadic interval enclosure at a chosen precision
};

std::string strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

struct EvalConfig {
    std::uint32_t initial_precision_bits = 64;
    std::uint32_t max_precision_bits = 65536;
    std::uint64_t exact_bit_budget = std::uint64_t{1} << 24;
    bool cross_check = true;
};

struct ThetaEvaluation {
    std::size_t n = 0;
    Strategy strategy = Strategy::interval;
    std::optional<BigRational> exact;          // exact strategies only
    std::optional<DyadicInterval> enclosure;   // interval strategy only
    std::uint32_t frac_bits_used = 0;          // interval strategy only
};

/// sum over d | p_n# of mu(d)/(2^d - 1), exact, over the single common
/// denominator 2^P - 1 (P = p_n#). theta(n) is this minus 1/2.
BigRational mersenne_divisor_sum(std::size_t n, const PrimeTable& table,
                                 std::uint64_t bit_budget);

/// sum over t >= 1 with gcd(t, p_n#) = 1 of 2^(-t), in closed form over
/// the coprime residues in [1, P]: numerator sum of 2^(P-r), denominator
/// 2^P - 1.
BigRational coprime_power_sum(std::size_t n, const PrimeTable& table,
                              std::uint64_t bit_budget);

ThetaEvaluation theta_exact_divisor(std::size_t n, const PrimeTable& table,
                                    std::uint64_t bit_budget);

ThetaEvaluation theta_exact_coprime(std::size_t n, const PrimeTable& table,
                                    std::uint64_t bit_budget);

/// Interval enclosure of theta(n) at B fractional bits; total width is
/// at most 2^n ulps. Requires B >= p_n.
ThetaEvaluation theta_interval(std::size_t n, const PrimeTable& table,
                               std::uint32_t B);

/// First B fractional bits of theta(n): bit t is set iff 2 <= t <= B and
/// gcd(t, p_n#) = 1. Index 0..1 are always clear. The expansion carries
/// no carries, so this IS the binary expansion, and the first set bit
/// sits at position p_{n+1}.
std::vector<bool> theta_bits(std::size_t n, const PrimeTable& table,
                             std::uint32_t B);

/// Position of the first set bit, or nullopt if none.
std::optional<std::size_t> first_one_position(const std::vector<bool>& bits);

struct NextPrimeResult {
    std::uint64_t p = 0;
    ThetaEvaluation eval;
    std::uint32_t precision_bits = 0;  // conclusive precision (interval only)
    bool escalated = false;            // interval strategy saw INCONCLUSIVE
};

/// p_{n+1} = floor(log2(2/theta(n))), by strict bracketing
/// 2^(-p) < theta < 2^(-p+1); big-integer comparisons only.
NextPrimeResult next_prime_full(std::size_t n, const PrimeTable& table,
                                Strategy strategy, const EvalConfig& config);

std::uint64_t next_prime_gandhi(std::size_t n, const PrimeTable& table,
                                Strategy strategy, const EvalConfig& config);

/// Refined formula p_{n+1} = floor(log2(3/(2 theta(n)))); always agrees
/// with next_prime_gandhi.
std::uint64_t next_prime_refined(std::size_t n, const PrimeTable& table,
                                 Strategy strategy, const EvalConfig& config);

/// r_n = theta(n) - 2^(-p_{n+1}), exact and strictly positive.
BigRational residual(std::size_t n, const PrimeTable& table,
                     std::uint64_t bit_budget);

struct BoundCheck {
    std::string name;
    BigRational left;
    std::string relation;
    BigRational right;
    bool pass = false;
};

struct BoundReport {
    std::size_t n = 0;
    std::uint64_t p_next = 0;
    BigRational theta;
    BigRational r;
    std::vector<BoundCheck> checks;

    bool all_pass() const;
};

/// Exact evaluation of the whole inequality chain:
///   2^(-p) < theta < 2*2^(-p), r < 2^(-p), r < 2^(-p-1), theta < (3/2)*2^(-p)
BoundReport bounds_report(std::size_t n, const PrimeTable& table,
                          std::uint64_t bit_budget);

struct SequenceRow {
    std::size_t index = 0;       // 1-based position in the sequence
    std::uint64_t p = 0;
    bool seed = false;           // p_1 = 2 is seeded, not computed
    std::uint32_t precision_bits = 0;
    double elapsed_ms = 0.0;
};

/// First k primes, bootstrapped from p_1 = 2 by repeated application of
/// the formula; each step cross-asserted against the sieve unless
/// disabled. row_sink (optional) observes each prime as it is produced,
/// so partial progress survives a budget refusal.
std::vector<std::uint64_t> gandhi_sequence(
    std::size_t k, Strategy strategy, const EvalConfig& config,
    const std::function<void(const SequenceRow&)>& row_sink = {});

}  // namespace gandhi

#endif
