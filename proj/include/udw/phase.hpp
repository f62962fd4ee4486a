#pragma once

#include <boost/rational.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace udw {

// The unit complex number exp(2 pi i q), stored as the exact rational q in [0, 1).
class Phase {
public:
  using Rational = boost::rational<std::int64_t>;

  Phase() = default;
  explicit Phase(Rational q);
  Phase(std::int64_t num, std::int64_t den);

  static Phase one() { return Phase(); }
  static Phase minus_one() { return Phase(1, 2); }
  // Accepts "a/b" or "a".
  static Phase parse(std::string_view text);

  const Rational& q() const { return q_; }
  bool is_one() const { return q_.numerator() == 0; }

  Phase operator*(const Phase& o) const { return Phase(q_ + o.q_); }
  Phase operator/(const Phase& o) const { return Phase(q_ - o.q_); }
  Phase& operator*=(const Phase& o) { return *this = *this * o; }
  Phase& operator/=(const Phase& o) { return *this = *this / o; }
  Phase inverse() const { return Phase(-q_); }
  Phase pow(std::int64_t k) const { return Phase(q_ * k); }

  std::complex<double> to_complex() const;
  std::string str() const;

  bool operator==(const Phase& o) const { return q_ == o.q_; }
  bool operator!=(const Phase& o) const { return !(q_ == o.q_); }

private:
  Rational q_{0};
};

}  // namespace udw
