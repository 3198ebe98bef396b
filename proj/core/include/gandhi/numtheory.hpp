#ifndef GANDHI_NUMTHEORY_HPP
#define GANDHI_NUMTHEORY_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gandhi/rational.hpp"

namespace gandhi {

/// Ordered table of verified primes p_1, p_2, ... Extended lazily by
/// segmented sieving; every element is re-checked by trial division
/// before it is admitted.
class PrimeTable {
public:
    PrimeTable();

    /// 1-based access: prime(1) == 2. Extends the table as needed.
    std::uint64_t prime(std::size_t i) const;

    std::size_t size() const { return primes_.size(); }

    /// Grow the table until it holds at least count primes.
    void ensure_count(std::size_t count) const;

    /// Grow the table until every prime <= limit is present.
    void ensure_limit(std::uint64_t limit) const;

    const std::vector<std::uint64_t>& primes() const { return primes_; }

private:
    void sieve_next_segment() const;

    // lazily extended; logically const from the caller's point of view
    mutable std::vector<std::uint64_t> primes_;
    mutable std::uint64_t sieved_to_;
};

struct DivisorTerm {
    BigInt d;  // squarefree divisor of the primorial
    int mu;    // (-1)^(number of prime factors of d); never 0

    bool operator==(const DivisorTerm&) const = default;
};

struct Primorial {
    std::size_t n;  // count of primes multiplied
    BigInt value;   // p_1 * p_2 * ... * p_n
};

/// Deterministic trial-division primality check.
bool is_prime(std::uint64_t m);

/// All primes <= limit, increasing. limit < 2 is a domain error.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Moebius function: mobius(1) = 1, (-1)^r on squarefree m with r prime
/// factors, 0 when a square divides m. m = 0 is a domain error.
int mobius(std::uint64_t m);

/// Sum of mu(d) over all divisors d of m: 1 iff m == 1, else 0.
int mobius_divisor_sum(std::uint64_t m);

Primorial primorial(std::size_t n, const PrimeTable& table);

/// The 2^n squarefree divisors of p_n#, one per subset of {p_1..p_n},
/// with mu as subset parity. Built by subset doubling, never by factoring.
std::vector<DivisorTerm> squarefree_divisors(std::size_t n, const PrimeTable& table);

/// min{ t >= 2 : gcd(t, p_n#) = 1 }. Asserts the result is p_{n+1}.
std::uint64_t least_coprime(std::size_t n, const PrimeTable& table);

/// (p_{n+2} < 2 p_{n+1}, p_{n+2} >= p_{n+1} + 2); both hold for all n >= 1.
std::pair<bool, bool> verify_gap_facts(std::size_t n, const PrimeTable& table);

}  // namespace gandhi

#endif
