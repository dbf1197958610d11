#include "assoc/numbers.hpp"

#include "assoc/error.hpp"

namespace assoc {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& v) {
  Int num = numerator(v), den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(Errc::BadInput, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::BadInput, "cannot parse rational '" + s + "'");
  }
}

std::string decimal_string(const Rational& v, int digits) {
  Int num = numerator(v), den = denominator(v);
  std::string sign = num < 0 ? "-" : "";
  if (num < 0) num = -num;
  Int whole = num / den, rem = num % den;
  std::string out = sign + whole.str();
  if (digits <= 0 || rem == 0) return out;
  out += ".";
  for (int k = 0; k < digits && rem != 0; ++k) {
    rem *= 10;
    out += Int(rem / den).str();
    rem %= den;
  }
  return out;
}

}  // namespace assoc
