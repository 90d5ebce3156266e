#ifndef PLANCERT_ZETA_HPP
#define PLANCERT_ZETA_HPP

// Certified zeta-family constants via Euler-Maclaurin with explicit remainder
// bounds: zeta(s) at integer s >= 2, zeta'(2), and zeta'(-1) through the
// functional equation. Radii satisfy rad <= 2^(-precision+4).

#include "plancert/ball.hpp"

namespace plancert {

Ball zeta_int(unsigned long s, mpfr_prec_t prec = Ball::kDefaultPrec);
Ball zeta3(mpfr_prec_t prec = Ball::kDefaultPrec);
Ball zeta_prime2(mpfr_prec_t prec = Ball::kDefaultPrec);
// zeta'(-1) = -(log(2 pi) - 1 + gamma - zeta'(2)/zeta(2)) / 12.
Ball zeta_prime_minus_one(mpfr_prec_t prec = Ball::kDefaultPrec);

}  // namespace plancert

#endif
