#include "gandhi/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gandhi/errors.hpp"

namespace gandhi {

bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    for (std::uint64_t f = 3; f * f <= m; f += 2) {
        if (m % f == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2) {
        throw std::domain_error("sieve_primes: limit must be >= 2");
    }
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) {
            composite[q] = true;
        }
    }
    return primes;
}

PrimeTable::PrimeTable() : sieved_to_(64) {
    primes_ = sieve_primes(sieved_to_);
}

void PrimeTable::sieve_next_segment() const {
    const std::uint64_t lo = sieved_to_ + 1;
    const std::uint64_t hi = sieved_to_ * 2;

    // base primes up to sqrt(hi) are always already in the table
    std::vector<bool> composite(hi - lo + 1, false);
    for (std::uint64_t p : primes_) {
        if (p * p > hi) break;
        std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
        for (std::uint64_t q = start; q <= hi; q += p) {
            composite[q - lo] = true;
        }
    }
    for (std::uint64_t m = lo; m <= hi; ++m) {
        if (!composite[m - lo]) {
            if (!is_prime(m)) {
                throw oracle_mismatch("PrimeTable: sieve admitted composite " +
                                      std::to_string(m));
            }
            primes_.push_back(m);
        }
    }
    sieved_to_ = hi;
}

void PrimeTable::ensure_count(std::size_t count) const {
    while (primes_.size() < count) sieve_next_segment();
}

void PrimeTable::ensure_limit(std::uint64_t limit) const {
    while (sieved_to_ < limit) sieve_next_segment();
}

std::uint64_t PrimeTable::prime(std::size_t i) const {
    if (i == 0) {
        throw std::domain_error("PrimeTable::prime: index is 1-based");
    }
    ensure_count(i);
    return primes_[i - 1];
}

int mobius(std::uint64_t m) {
    if (m == 0) {
        throw std::domain_error("mobius: argument must be >= 1");
    }
    int r = 0;
    for (std::uint64_t f = 2; f * f <= m; ++f) {
        if (m % f != 0) continue;
        m /= f;
        if (m % f == 0) return 0;
        ++r;
    }
    if (m > 1) ++r;
    return (r % 2 == 0) ? 1 : -1;
}

int mobius_divisor_sum(std::uint64_t m) {
    if (m == 0) {
        throw std::domain_error("mobius_divisor_sum: argument must be >= 1");
    }
    int sum = 0;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        sum += mobius(d);
        if (d != m / d) sum += mobius(m / d);
    }
    return sum;
}

Primorial primorial(std::size_t n, const PrimeTable& table) {
    if (n == 0) {
        throw std::domain_error("primorial: n must be >= 1");
    }
    BigInt value = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        value *= table.prime(i);
    }
    return Primorial{n, value};
}

std::vector<DivisorTerm> squarefree_divisors(std::size_t n, const PrimeTable& table) {
    if (n == 0) {
        throw std::domain_error("squarefree_divisors: n must be >= 1");
    }
    std::vector<DivisorTerm> terms;
    terms.reserve(std::size_t{1} << n);
    terms.push_back({BigInt(1), +1});
    for (std::size_t i = 1; i <= n; ++i) {
        const std::uint64_t p = table.prime(i);
        const std::size_t count = terms.size();
        for (std::size_t j = 0; j < count; ++j) {
            terms.push_back({terms[j].d * p, -terms[j].mu});
        }
    }
    return terms;
}

std::uint64_t least_coprime(std::size_t n, const PrimeTable& table) {
    if (n == 0) {
        throw std::domain_error("least_coprime: n must be >= 1");
    }
    // gcd(t, p_n#) = 1 iff no p_i with i <= n divides t
    for (std::uint64_t t = 2;; ++t) {
        bool coprime = true;
        for (std::size_t i = 1; i <= n; ++i) {
            if (t % table.prime(i) == 0) {
                coprime = false;
                break;
            }
        }
        if (coprime) {
            if (t != table.prime(n + 1)) {
                throw oracle_mismatch("least_coprime(" + std::to_string(n) +
                                      ") = " + std::to_string(t) +
                                      " is not the next table prime");
            }
            return t;
        }
    }
}

std::pair<bool, bool> verify_gap_facts(std::size_t n, const PrimeTable& table) {
    if (n == 0) {
        throw std::domain_error("verify_gap_facts: n must be >= 1");
    }
    const std::uint64_t p1 = table.prime(n + 1);
    const std::uint64_t p2 = table.prime(n + 2);
    return {p2 < 2 * p1, p2 >= p1 + 2};
}

}  // namespace gandhi
