#include "udw/phase.hpp"

#include "udw/error.hpp"

#include <cmath>
#include <numbers>

namespace udw {

namespace {

Phase::Rational reduce_mod_one(Phase::Rational q) {
  std::int64_t num = q.numerator() % q.denominator();
  if (num < 0) num += q.denominator();
  return Phase::Rational(num, q.denominator());
}

}  // namespace

Phase::Phase(Rational q) : q_(reduce_mod_one(q)) {}

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::BadInput, "phase with zero denominator");
  q_ = reduce_mod_one(Rational(num, den));
}

Phase Phase::parse(std::string_view text) {
  auto to_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) throw Error(ErrorKind::BadInput, "malformed phase '" + std::string(text) + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(std::string(s), &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadInput, "malformed phase '" + std::string(text) + "'");
    }
    if (used != s.size()) throw Error(ErrorKind::BadInput, "malformed phase '" + std::string(text) + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Phase(to_int(text), 1);
  return Phase(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

std::complex<double> Phase::to_complex() const {
  const auto n = q_.numerator();
  switch (q_.denominator()) {
    case 1: return {1.0, 0.0};
    case 2: return {-1.0, 0.0};
    case 4: return n == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    default: break;
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(q_.denominator());
  return std::polar(1.0, angle);
}

std::string Phase::str() const {
  if (q_.denominator() == 1) return std::to_string(q_.numerator());
  return std::to_string(q_.numerator()) + "/" + std::to_string(q_.denominator());
}

}  // namespace udw
