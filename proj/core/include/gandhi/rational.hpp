#ifndef GANDHI_RATIONAL_HPP
#define GANDHI_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gandhi {

using BigInt = mpz_class;

/// Exact arbitrary-precision fraction, always stored reduced with a
/// positive denominator. Equality is structural equality on the reduced
/// form, which GMP's canonical mpq representation guarantees.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long v) : q_(v) {}
    BigRational(const BigInt& num, const BigInt& den);

    const BigInt num() const { return q_.get_num(); }
    const BigInt den() const { return q_.get_den(); }

    /// 2^e for any integer e, including negative exponents.
    static BigRational pow2(std::int64_t e);

    BigRational operator+(const BigRational& o) const { return BigRational(q_ + o.q_); }
    BigRational operator-(const BigRational& o) const { return BigRational(q_ - o.q_); }
    BigRational operator*(const BigRational& o) const { return BigRational(q_ * o.q_); }
    BigRational operator-() const { return BigRational(-q_); }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }

    bool operator==(const BigRational& o) const { return q_ == o.q_; }
    bool operator!=(const BigRational& o) const { return q_ != o.q_; }
    bool operator<(const BigRational& o) const { return q_ < o.q_; }
    bool operator<=(const BigRational& o) const { return q_ <= o.q_; }
    bool operator>(const BigRational& o) const { return q_ > o.q_; }
    bool operator>=(const BigRational& o) const { return q_ >= o.q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    /// "num/den" in decimal, e.g. "5/126". Integers still carry "/1".
    std::string str() const;

private:
    explicit BigRational(const mpq_class& q) : q_(q) { /* mpq ops keep canonical form */ }

    mpq_class q_;
};

}  // namespace gandhi

#endif
