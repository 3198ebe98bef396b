#include "gandhi/dyadic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gandhi/errors.hpp"

namespace gandhi {

DyadicFixed DyadicFixed::rescaled(std::uint32_t new_bits) const {
    if (new_bits < frac_bits_) {
        throw std::domain_error("DyadicFixed::rescaled: cannot reduce frac_bits");
    }
    BigInt m;
    mpz_mul_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), new_bits - frac_bits_);
    return {m, new_bits};
}

DyadicFixed DyadicFixed::operator+(const DyadicFixed& o) const {
    const std::uint32_t bits = std::max(frac_bits_, o.frac_bits_);
    return {rescaled(bits).mantissa() + o.rescaled(bits).mantissa(), bits};
}

DyadicFixed DyadicFixed::operator-(const DyadicFixed& o) const {
    return *this + (-o);
}

int DyadicFixed::compare(const DyadicFixed& o) const {
    const std::uint32_t bits = std::max(frac_bits_, o.frac_bits_);
    return cmp(rescaled(bits).mantissa(), o.rescaled(bits).mantissa());
}

BigRational DyadicFixed::to_rational() const {
    BigInt den;
    mpz_mul_2exp(den.get_mpz_t(), BigInt(1).get_mpz_t(), frac_bits_);
    return BigRational(mantissa_, den);
}

std::string DyadicFixed::str() const {
    return mantissa_.get_str() + "*2^-" + std::to_string(frac_bits_);
}

DyadicInterval::DyadicInterval(DyadicFixed lo, DyadicFixed hi) {
    const std::uint32_t bits = std::max(lo.frac_bits(), hi.frac_bits());
    lo_ = lo.rescaled(bits);
    hi_ = hi.rescaled(bits);
    if (lo_ > hi_) {
        throw std::domain_error("DyadicInterval: lo > hi");
    }
}

DyadicInterval DyadicInterval::point(DyadicFixed x) {
    return DyadicInterval(x, x);
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
    return DyadicInterval(lo_ + o.lo_, hi_ + o.hi_);
}

DyadicInterval DyadicInterval::operator-() const {
    return DyadicInterval(-hi_, -lo_);
}

bool DyadicInterval::contains(const BigRational& x) const {
    return lo_.to_rational() <= x && x <= hi_.to_rational();
}

DyadicInterval reciprocal_mersenne(std::uint64_t d, std::uint32_t B) {
    if (d == 0) {
        throw std::domain_error("reciprocal_mersenne: d must be >= 1");
    }
    if (B < d) {
        throw precision_error("reciprocal_mersenne: B=" + std::to_string(B) +
                              " < d=" + std::to_string(d) +
                              ", no representable bit");
    }
    BigInt lo = 0;
    for (std::uint64_t t = d; t <= B; t += d) {
        mpz_setbit(lo.get_mpz_t(), static_cast<mp_bitcnt_t>(B - t));
    }
    return DyadicInterval(DyadicFixed(lo, B), DyadicFixed(lo + 1, B));
}

std::optional<std::uint64_t> extract_next_prime(const DyadicInterval& theta) {
    if (theta.hi().sign() <= 0) {
        throw std::domain_error("extract_next_prime: enclosure is non-positive "
                                "but theta is provably positive");
    }
    if (theta.lo().sign() <= 0) {
        return std::nullopt;  // cannot place the leading bit yet
    }
    const BigInt& m = theta.lo().mantissa();
    const std::uint32_t B = theta.lo().frac_bits();

    // lo in [2^(k-B), 2^(k-B+1)) where k is the index of m's top bit
    const auto k = static_cast<std::uint32_t>(mpz_sizeinbase(m.get_mpz_t(), 2) - 1);
    if (k >= B) {
        return std::nullopt;  // lo >= 1; theta < 1 always, precision is junk
    }
    const std::uint64_t p = B - k;

    // strict 2^(-p) < lo fails when m is exactly a power of two
    if (mpz_popcount(m.get_mpz_t()) == 1) {
        return std::nullopt;
    }
    // strict hi < 2^(-p+1): compare against mantissa 2^(k+1) at scale B
    BigInt upper;
    mpz_setbit(upper.get_mpz_t(), k + 1);
    if (theta.hi().rescaled(B).mantissa() >= upper) {
        return std::nullopt;
    }
    return p;
}

}  // namespace gandhi
