#include "gandhi/rational.hpp"

#include <stdexcept>

namespace gandhi {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (sgn(den) == 0) {
        throw std::domain_error("BigRational: zero denominator");
    }
    q_.canonicalize();
}

BigRational BigRational::pow2(std::int64_t e) {
    BigInt shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), BigInt(1).get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e >= 0 ? e : -e));
    return e >= 0 ? BigRational(shifted, 1) : BigRational(1, shifted);
}

std::string BigRational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace gandhi
