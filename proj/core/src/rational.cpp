#include "tqft/rational.hpp"

#include <cctype>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Scalar q(Integer(n), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Integer double_factorial(int n) {
  Integer r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

Scalar pow(const Scalar& base, int exponent) {
  Scalar b = base;
  if (exponent < 0) {
    b = 1 / b;
    exponent = -exponent;
  }
  Scalar r = 1;
  while (exponent > 0) {
    if (exponent & 1) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

}  // namespace tqft
