#include "gcg/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace gcg {

std::int64_t floor(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  // boost keeps the denominator positive, so truncation only errs for negatives.
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) return q - 1;
  return q;
}

std::int64_t ceil(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) return q + 1;
  return q;
}

namespace {

std::int64_t parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    }
    if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
      throw std::invalid_argument("number out of range: '" + std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_integer(body.substr(0, slash), text);
    const std::int64_t den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = body.substr(0, dot);
    const std::string_view frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }
    if (frac_part.size() > 15) {
      throw std::invalid_argument("too many decimal places: '" + std::string(text) + "'");
    }
    const std::int64_t whole = int_part.empty() ? 0 : parse_integer(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t frac = frac_part.empty() ? 0 : parse_integer(frac_part, text);
    value = Rational(whole) + Rational(frac, scale);
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? -value : value;
}

std::string to_string(const Rational& r) {
  std::int64_t den = r.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  }
  if (r.denominator() == 1) return std::to_string(r.numerator());

  const int places = std::max(twos, fives);
  const bool negative = r.numerator() < 0;
  const std::int64_t mag = negative ? -r.numerator() : r.numerator();
  std::int64_t scaled_den = 1;
  for (int i = 0; i < places; ++i) scaled_den *= 10;
  // mag / r.den == mag * (scaled_den / r.den) / scaled_den exactly
  const std::int64_t scaled = mag * (scaled_den / r.denominator());
  std::string frac = std::to_string(scaled % scaled_den);
  frac.insert(frac.begin(), static_cast<std::size_t>(places) - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return (negative ? "-" : "") + std::to_string(scaled / scaled_den) + "." + frac;
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace gcg
