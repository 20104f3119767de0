#include "clm/rat.hpp"

#include <stdexcept>

namespace clm {

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  Int num, den = 1;
  try {
    if (slash == std::string::npos) {
      num = Int(s);
    } else {
      num = Int(s.substr(0, slash));
      den = Int(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int binomial(long n, long r) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  if (r < 0 || r > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

}  // namespace clm
