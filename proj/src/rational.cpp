#include "rsverify/rational.hpp"

#include <cstdlib>

namespace rsv {

Rat make_rat(long num, long den) {
  if (den == 0) throw MathError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat pow(const Rat& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw MathError("zero raised to a negative power");
    Rat inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rat result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return result;  // already canonical: gcd(n^k, d^k) = 1
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace rsv
