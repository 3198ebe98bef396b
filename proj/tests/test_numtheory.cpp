#include <doctest.h>

#include <numeric>
#include <random>

#include "gandhi/numtheory.hpp"

using namespace gandhi;

TEST_CASE("sieve_primes basic outputs") {
    CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});

    const auto p100 = sieve_primes(100);
    CHECK(p100.size() == 25);
    CHECK(p100.back() == 97);
    CHECK_THROWS_AS(sieve_primes(1), std::domain_error);
}

TEST_CASE("sieve agrees with trial division up to 10000") {
    const auto primes = sieve_primes(10000);
    std::size_t idx = 0;
    for (std::uint64_t m = 2; m <= 10000; ++m) {
        const bool in_sieve = idx < primes.size() && primes[idx] == m;
        CHECK(in_sieve == is_prime(m));
        if (in_sieve) ++idx;
    }
    CHECK(idx == primes.size());
}

TEST_CASE("PrimeTable extends lazily and stays consistent") {
    PrimeTable table;
    CHECK(table.prime(1) == 2);
    CHECK(table.prime(25) == 97);
    CHECK(table.prime(1000) == 7919);
    CHECK_THROWS_AS(table.prime(0), std::domain_error);

    const auto oracle = sieve_primes(7919);
    REQUIRE(oracle.size() == 1000);
    for (std::size_t i = 0; i < 1000; ++i) {
        CHECK(table.prime(i + 1) == oracle[i]);
    }
}

TEST_CASE("mobius values and multiplicativity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(7) == -1);
    CHECK(mobius(12) == 0);
    CHECK_THROWS_AS(mobius(0), std::domain_error);

    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1000);
    int sampled = 0;
    while (sampled < 200) {
        const std::uint64_t a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(mobius(a * b) == mobius(a) * mobius(b));
        ++sampled;
    }
}

TEST_CASE("mobius_divisor_sum is the unit indicator") {
    CHECK(mobius_divisor_sum(1) == 1);
    CHECK(mobius_divisor_sum(6) == 0);
    CHECK(mobius_divisor_sum(12) == 0);
    CHECK_THROWS_AS(mobius_divisor_sum(0), std::domain_error);

    for (std::uint64_t m = 1; m <= 10000; ++m) {
        CHECK(mobius_divisor_sum(m) == (m == 1 ? 1 : 0));
    }
}

TEST_CASE("primorial values") {
    PrimeTable table;
    CHECK(primorial(1, table).value == 2);
    CHECK(primorial(3, table).value == 30);
    CHECK(primorial(8, table).value == 9699690);
    CHECK_THROWS_AS(primorial(0, table), std::domain_error);
}

TEST_CASE("squarefree_divisors enumerates all subsets") {
    PrimeTable table;

    const auto d1 = squarefree_divisors(1, table);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == DivisorTerm{BigInt(1), +1});
    CHECK(d1[1] == DivisorTerm{BigInt(2), -1});

    auto d2 = squarefree_divisors(2, table);
    REQUIRE(d2.size() == 4);
    std::sort(d2.begin(), d2.end(),
              [](const auto& a, const auto& b) { return a.d < b.d; });
    CHECK(d2[0] == DivisorTerm{BigInt(1), +1});
    CHECK(d2[1] == DivisorTerm{BigInt(2), -1});
    CHECK(d2[2] == DivisorTerm{BigInt(3), -1});
    CHECK(d2[3] == DivisorTerm{BigInt(6), +1});

    const auto d3 = squarefree_divisors(3, table);
    CHECK(d3.size() == 8);
    int mu_sum = 0;
    for (const auto& t : d3) mu_sum += t.mu;
    CHECK(mu_sum == 0);
}

TEST_CASE("squarefree_divisors: mu sums to zero and d values are distinct, n <= 16") {
    PrimeTable table;
    for (std::size_t n = 1; n <= 16; ++n) {
        auto terms = squarefree_divisors(n, table);
        CHECK(terms.size() == (std::size_t{1} << n));
        int mu_sum = 0;
        BigInt product_check = 1;
        for (const auto& t : terms) {
            CHECK((t.mu == 1 || t.mu == -1));
            mu_sum += t.mu;
        }
        CHECK(mu_sum == 0);
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.d < b.d; });
        CHECK(terms.front().d == 1);
        CHECK(terms.front().mu == 1);
        CHECK(terms.back().d == primorial(n, table).value);
        for (std::size_t i = 1; i < terms.size(); ++i) {
            CHECK(terms[i - 1].d < terms[i].d);
        }
    }
}

TEST_CASE("least_coprime finds the next prime") {
    PrimeTable table;
    CHECK(least_coprime(1, table) == 3);
    CHECK(least_coprime(2, table) == 5);
    CHECK(least_coprime(4, table) == 11);
    for (std::size_t n = 1; n <= 40; ++n) {
        CHECK(least_coprime(n, table) == table.prime(n + 1));
    }
}

TEST_CASE("verify_gap_facts holds for n = 1..1000") {
    PrimeTable table;
    CHECK(verify_gap_facts(1, table) == std::pair{true, true});
    CHECK(verify_gap_facts(3, table) == std::pair{true, true});
    for (std::size_t n = 1; n <= 1000; ++n) {
        const auto [lt, ge] = verify_gap_facts(n, table);
        CHECK(lt);
        CHECK(ge);
    }
}
