#include "borelcover/rational.hpp"

#include "borelcover/errors.hpp"

namespace borelcover {

Integer binomial(long top, long bottom) {
  if (top < 0) throw DomainError("binomial with negative top");
  if (bottom < 0 || bottom > top) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

Integer binomial_signed(const Integer& x, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  for (long i = 0; i < k; ++i) num *= x - i;
  Integer den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  return num / den;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace borelcover
