#include "krasno/rational.hpp"

#include <cmath>
#include <limits>

#include "krasno/error.hpp"

namespace krasno {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotInGallery: return "NotInGallery";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorCode::MixedFamilies: return "MixedFamilies";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::ResamplingExhausted: return "ResamplingExhausted";
    case ErrorCode::NoSpikeCount: return "NoSpikeCount";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw GeometryError(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) bad(text);
    out = Rational(n, d);
    out.canonicalize();
  } else {
    std::string_view mant = s;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mant = s.substr(0, e);
      auto ex = s.substr(e + 1);
      bool eneg = false;
      if (!ex.empty() && (ex.front() == '-' || ex.front() == '+')) {
        eneg = ex.front() == '-';
        ex.remove_prefix(1);
      }
      if (!all_digits(ex) || ex.size() > 6) bad(text);
      exponent = std::stol(std::string(ex));
      if (eneg) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
      auto ip = mant.substr(0, dot);
      auto fp = mant.substr(dot + 1);
      if (ip.empty() && fp.empty()) bad(text);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad(text);
      digits = std::string(ip) + std::string(fp);
      exponent -= static_cast<long>(fp.size());
    } else {
      if (!all_digits(mant)) bad(text);
      digits = std::string(mant);
    }
    mpz_class n(digits, 10);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) {
      out = Rational(n * p);
    } else {
      out = Rational(n, p);
      out.canonicalize();
    }
  }
  if (negative) out = -out;
  return out;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw GeometryError(ErrorCode::InvalidArgument, "rationalize: non-finite value");
  if (max_den < 1) throw GeometryError(ErrorCode::InvalidArgument, "rationalize: max_den < 1");
  Rational exact(x);  // doubles are dyadic rationals
  if (exact.get_den() <= max_den) return exact;

  // Continued fraction convergents of the exact double value.
  const bool neg = x < 0;
  Rational r = neg ? Rational(-exact) : exact;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Rational rem = r;
  const mpz_class cap(static_cast<long>(max_den));
  Rational best;
  for (int iter = 0; iter < 200; ++iter) {
    mpz_class a = rem.get_num() / rem.get_den();
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > cap) {
      // Semiconvergent with the largest admissible multiplier.
      mpz_class t = (cap - k0) / k1;
      Rational semi(t * h1 + h0, t * k1 + k0);
      semi.canonicalize();
      Rational conv(h1, k1);
      conv.canonicalize();
      Rational ds = abs(semi - r), dc = abs(conv - r);
      best = (t > 0 && ds < dc) ? semi : conv;
      break;
    }
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    Rational frac = rem - Rational(a);
    if (frac == 0) {
      best = Rational(h1, k1);
      best.canonicalize();
      break;
    }
    rem = 1 / frac;
    best = Rational(h1, k1);
    best.canonicalize();
  }
  return neg ? Rational(-best) : best;
}

Rational snap_dyadic(double x, int bits) {
  if (!std::isfinite(x)) throw GeometryError(ErrorCode::InvalidArgument, "snap_dyadic: non-finite value");
  const double scaled = std::nearbyint(std::ldexp(x, bits));
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), scaled);
  mpz_class den = 1;
  den <<= bits;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace krasno
