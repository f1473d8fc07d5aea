#include "convextest/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace convextest {

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

void rational_to_interval(const Rational& q, double& lo, double& hi) {
  const double mid = q.convert_to<double>();  // mpq_get_d: within 1 ulp
  if (!std::isfinite(mid)) {
    lo = -std::numeric_limits<double>::infinity();
    hi = std::numeric_limits<double>::infinity();
    return;
  }
  const double pad = std::fabs(mid) * 2.220446049250313e-16 + 1e-300;
  lo = mid - pad;
  hi = mid + pad;
}

std::string rational_to_string(const Rational& q) {
  const BigInt num = numerator(q), den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string t = text;
  bool negative = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    negative = (t[0] == '-');
    t = t.substr(1);
  }
  if (t.empty()) throw std::invalid_argument("empty number: '" + text + "'");

  Rational value;
  if (auto slash = t.find('/'); slash != std::string::npos) {
    const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational: '" + text + "'");
    const BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rational(BigInt(num), d);
  } else if (auto dot = t.find('.'); dot != std::string::npos) {
    const std::string whole = t.substr(0, dot), frac = t.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal: '" + text + "'");
    BigInt scaled = whole.empty() ? BigInt(0) : BigInt(whole);
    BigInt scale(1);
    for (char c : frac) {
      scaled = scaled * 10 + (c - '0');
      scale *= 10;
    }
    value = Rational(scaled, scale);
  } else {
    if (!all_digits(t)) throw std::invalid_argument("malformed number: '" + text + "'");
    value = Rational(BigInt(t));
  }
  return negative ? -value : value;
}

}  // namespace convextest
