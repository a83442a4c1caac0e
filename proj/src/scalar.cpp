#include "geobip/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "geobip/error.hpp"

namespace geobip {

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("Scalar::ratio: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.sign() == 0) throw std::domain_error("Scalar: division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() -> Scalar { throw ParseError("not an exact number: '" + original + "'"); };

  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) return fail();
    if (negative) n = -n;
    return Scalar(mpq_class(n, d));
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return fail();
  if (!int_part.empty() && !all_digits(int_part)) return fail();
  if (!frac_part.empty() && !all_digits(frac_part)) return fail();

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long scale = static_cast<long>(frac_part.size()) - exponent;
  if (scale >= 0) return Scalar(mpq_class(mantissa, pow10(static_cast<unsigned long>(scale))));
  mantissa *= pow10(static_cast<unsigned long>(-scale));
  return Scalar(mpq_class(mantissa));
}

std::string Scalar::decimal_str() const {
  if (is_integer()) return str();
  mpz_class den = q_.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return str();

  const unsigned long places = std::max(twos, fives);
  mpz_class scaled = q_.get_num() * pow10(places) / q_.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, 1, '.');
  return negative ? "-" + digits : digits;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

}  // namespace geobip
