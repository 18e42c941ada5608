#include "monideal/rational.hpp"

#include "monideal/errors.hpp"

namespace monideal {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("ceil_div needs a positive denominator");
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw OverflowError("integer does not fit in 64 bits");
  return z.get_si();
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace monideal
