#include "dillab/rational.hpp"

#include <cctype>
#include <limits>

#include "dillab/error.hpp"

namespace dillab {

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime numerator/denominator stay coprime.
  return out;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent >= 0) return pow(base, static_cast<unsigned long>(exponent));
  if (base == 0) throw Error(Errc::InvalidArgument, "zero raised to a negative power");
  Rational inv = 1 / base;
  return pow(inv, static_cast<unsigned long>(-exponent));
}

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational dyadic(const Integer& numerator, unsigned long bits) {
  Rational out(numerator);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), bits);
  return out;
}

Rational round_dyadic(const Rational& q, unsigned long bits, Rounding dir) {
  Rational scaled = q;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), bits);
  Integer n;
  switch (dir) {
    case Rounding::Down: n = floor(scaled); break;
    case Rounding::Up: n = ceil(scaled); break;
    case Rounding::Nearest: n = floor(scaled + Rational(1, 2)); break;
  }
  return dyadic(n, bits);
}

std::string to_decimal(const Rational& q, unsigned digits, Rounding dir) {
  const Integer scale = pow(Integer(10), digits);
  const Rational scaled = q * scale;
  Integer n;
  switch (dir) {
    case Rounding::Down: n = floor(scaled); break;
    case Rounding::Up: n = ceil(scaled); break;
    case Rounding::Nearest: n = floor(scaled + Rational(1, 2)); break;
  }
  const bool negative = n < 0;
  std::string body = Integer(abs(n)).get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return negative ? "-" + body : body;
}

std::string to_decimal_sig(const Rational& q, unsigned significant, Rounding dir) {
  if (q == 0) return "0";
  if (significant == 0) significant = 1;
  const Rational a = abs(q);
  long exponent = 0;
  if (a >= 1) {
    exponent = static_cast<long>(floor(a).get_str().size()) - 1;
  } else {
    Rational t = a;
    while (t < 1) {
      t *= 10;
      --exponent;
    }
  }
  const long digits = static_cast<long>(significant) - 1 - exponent;
  return to_decimal(q, digits > 0 ? static_cast<unsigned>(digits) : 0u, dir);
}

namespace {

Integer parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(Errc::ParseError, "empty number in '" + std::string(whole) + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::ParseError, "invalid digit in '" + std::string(whole) + "'");
    }
  }
  return Integer(std::string(s), 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer z = parse_digits(s, text);
  return negative ? Integer(-z) : z;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_digits(s.substr(0, slash), text);
    const Integer den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    out = Rational(num, den);
    out.canonicalize();
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      const Integer ez = parse_integer(s.substr(e + 1));
      if (!ez.fits_slong_p() || abs(ez) > 100000) {
        throw Error(Errc::ParseError, "exponent out of range in '" + std::string(text) + "'");
      }
      exponent = ez.get_si();
      s = s.substr(0, e);
    }
    std::string digits;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      const std::string_view frac = s.substr(dot + 1);
      digits = std::string(s.substr(0, dot)) + std::string(frac);
      exponent -= static_cast<long>(frac.size());
    } else {
      digits = std::string(s);
    }
    out = Rational(parse_digits(digits, text));
    if (exponent >= 0) {
      out *= pow(Integer(10), static_cast<unsigned long>(exponent));
    } else {
      out /= pow(Integer(10), static_cast<unsigned long>(-exponent));
    }
  }
  return negative ? Rational(-out) : out;
}

double to_double(const Rational& q) { return q.get_d(); }

bool fits_int64(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw Error(Errc::RangeError, "integer does not fit in 64 bits");
  return std::stoll(z.get_str());
}

}  // namespace dillab
