#include "jmexpand/exact.hpp"

#include "jmexpand/errors.hpp"

namespace jmexpand {

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Int factorial(long n) {
  if (n < 0) throw InvalidInputError("factorial of a negative integer");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Int int_pow(unsigned long base, unsigned long exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

std::string to_decimal(const Rat& v) { return v.get_str(); }

Rat parse_rational(const std::string& text) {
  Rat q;
  if (text.empty() ||
      mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw InvalidInputError("malformed rational: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
    throw InvalidInputError("zero denominator in rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace jmexpand
