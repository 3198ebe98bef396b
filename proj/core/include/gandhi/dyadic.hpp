#ifndef GANDHI_DYADIC_HPP
#define GANDHI_DYADIC_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gandhi/rational.hpp"

namespace gandhi {

/// Arbitrary-precision binary fixed-point number mantissa * 2^(-frac_bits).
/// Closed under addition and subtraction; no rounding ever happens inside
/// this type, only when a caller truncates an infinite series into one.
class DyadicFixed {
public:
    DyadicFixed() : mantissa_(0), frac_bits_(0) {}
    DyadicFixed(BigInt mantissa, std::uint32_t frac_bits)
        : mantissa_(std::move(mantissa)), frac_bits_(frac_bits) {}

    const BigInt& mantissa() const { return mantissa_; }
    std::uint32_t frac_bits() const { return frac_bits_; }

    /// Exact rescale to new_bits >= frac_bits (mantissa shifted left).
    DyadicFixed rescaled(std::uint32_t new_bits) const;

    DyadicFixed operator+(const DyadicFixed& o) const;
    DyadicFixed operator-(const DyadicFixed& o) const;
    DyadicFixed operator-() const { return {-mantissa_, frac_bits_}; }

    bool operator==(const DyadicFixed& o) const { return compare(o) == 0; }
    bool operator<(const DyadicFixed& o) const { return compare(o) < 0; }
    bool operator<=(const DyadicFixed& o) const { return compare(o) <= 0; }
    bool operator>(const DyadicFixed& o) const { return compare(o) > 0; }
    bool operator>=(const DyadicFixed& o) const { return compare(o) >= 0; }

    int sign() const { return sgn(mantissa_); }

    BigRational to_rational() const;

    /// "mantissa*2^-B" for diagnostics and machine output.
    std::string str() const;

private:
    int compare(const DyadicFixed& o) const;

    BigInt mantissa_;
    std::uint32_t frac_bits_;
};

/// Pair of dyadic bounds lo <= hi enclosing a real value. Both endpoints
/// share frac_bits, so the width is exactly representable.
class DyadicInterval {
public:
    DyadicInterval() = default;
    DyadicInterval(DyadicFixed lo, DyadicFixed hi);

    /// Degenerate interval [x, x].
    static DyadicInterval point(DyadicFixed x);

    const DyadicFixed& lo() const { return lo_; }
    const DyadicFixed& hi() const { return hi_; }

    DyadicInterval operator+(const DyadicInterval& o) const;
    DyadicInterval operator-() const;

    DyadicFixed width() const { return hi_ - lo_; }

    bool contains(const BigRational& x) const;

private:
    DyadicFixed lo_, hi_;
};

/// Enclosure of 1/(2^d - 1) = sum over k >= 1 of 2^(-kd) at B fractional
/// bits: lo keeps the 1-bits at positions d, 2d, ... <= B, hi adds one ulp.
/// The discarded geometric tail is positive and below 2^(-B), so the true
/// value lies in [lo, hi). Requires B >= d.
DyadicInterval reciprocal_mersenne(std::uint64_t d, std::uint32_t B);

/// Recovers the integer p with 2^(-p) < theta.lo and theta.hi < 2^(-p+1),
/// i.e. floor(log2(2/theta)), from bit positions alone. Returns nullopt
/// (INCONCLUSIVE) when the enclosure straddles a power of two; callers
/// then retry at higher precision. theta.hi <= 0 is a domain error.
std::optional<std::uint64_t> extract_next_prime(const DyadicInterval& theta);

}  // namespace gandhi

#endif
