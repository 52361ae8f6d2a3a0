#include "quivar/rational.hpp"

#include <sstream>

namespace quivar {

Rat ratFromDouble(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  long long mant = static_cast<long long>(std::ldexp(m, 53));  // exact: |m|*2^53 < 2^53
  exp -= 53;
  using Int = boost::multiprecision::cpp_int;
  Int num(mant), den(1);
  if (exp >= 0)
    num <<= exp;
  else
    den <<= -exp;
  return Rat(num, den);
}

double ratToDouble(const Rat& x) { return x.convert_to<double>(); }

std::string ratToString(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace quivar
