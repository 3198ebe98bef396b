#ifndef GANDHI_IDENTITY_HPP
#define GANDHI_IDENTITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gandhi/numtheory.hpp"
#include "gandhi/rational.hpp"

namespace gandhi {

/// One executed identity instance. Truncated series are checked against
/// their closed-form tail, never an epsilon: residual must match the
/// analytically expected value exactly.
struct IdentityCheckResult {
    std::string identity_name;
    std::string instance;
    BigRational lhs;
    BigRational rhs;
    BigRational residual;
    bool pass = false;
};

/// sum_{k=1..K} 2^(-ka) against 1/(2^a - 1); the truncation residual
/// must be exactly 2^(-Ka)/(2^a - 1).
IdentityCheckResult verify_geometric_identity(std::uint32_t a, std::uint32_t K);

/// Divisor-sum form against the closed-form coprime-residue form of the
/// same series; residual must be identically zero.
IdentityCheckResult verify_theorem_53(std::size_t n, const PrimeTable& table,
                                      std::uint64_t bit_budget);

/// sum_{t>n} 2^(-t) = 2^(-n), via the exact partial sum 2 - 2^(-n).
IdentityCheckResult verify_theorem_54(std::uint32_t n);

/// sum_{d|m} mu(d) = (m == 1 ? 1 : 0) for every m in 1..m_max.
std::vector<IdentityCheckResult> verify_mobius_sum(std::uint64_t m_max);

/// Strict bound sum_{t>n, gcd(t, p#)=1} 2^(-t) < 2^(-n), with p# the
/// primorial of prime_index primes; also confirms some t > n is not
/// coprime, which is what makes the inequality strict.
IdentityCheckResult verify_coprime_tail_bound(std::uint32_t n,
                                              std::size_t prime_index,
                                              const PrimeTable& table,
                                              std::uint64_t bit_budget);

}  // namespace gandhi

#endif
