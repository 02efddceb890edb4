#include "strongconv/numeric/rational.hpp"

#include "strongconv/errors.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

namespace strongconv::numeric {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("invalid rational literal \"" + std::string(whole) + "\"");
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("invalid rational literal \"" + std::string(text) + "\"");
    Integer den(std::string{den_text});
    if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
  }
  if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot_pos);
    std::string_view frac_part = text.substr(dot_pos + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw InputError("invalid rational literal \"" + std::string(text) + "\"");
    }
    Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part));
    Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part));
    Integer den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    Rational value = Rational(whole) + Rational(frac, den);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Integer floor_integer(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Integer ceil_integer(const Rational& value) { return -floor_integer(Rational(-value)); }

Rational round_to_denominator(double value, std::int64_t denominator) {
  const auto scaled = static_cast<std::int64_t>(std::llround(value * static_cast<double>(denominator)));
  return Rational(Integer(scaled), Integer(denominator));
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in vector sum");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector subtract(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dimension mismatch in vector difference");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector scale(std::span<const Rational> a, const Rational& factor) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * factor;
  return r;
}

Vector negate(std::span<const Rational> a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector zero_vector(std::size_t dim) { return Vector(dim, Rational(0)); }

bool is_zero(std::span<const Rational> a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

std::strong_ordering compare_lex(std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

Rational primitive_scale_factor(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    if (x == 0) continue;
    lcm_den = boost::multiprecision::lcm(lcm_den, Integer(boost::multiprecision::denominator(x)));
  }
  Integer gcd_num = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    Integer scaled = Integer(boost::multiprecision::numerator(x)) * (lcm_den / boost::multiprecision::denominator(x));
    gcd_num = boost::multiprecision::gcd(gcd_num, Integer(abs(scaled)));
  }
  if (gcd_num == 0) throw InputError("cannot normalize the zero vector");
  return Rational(lcm_den, gcd_num);
}

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace strongconv::numeric
