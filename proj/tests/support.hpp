#pragma once

// Shared fixtures and brute-force oracles.  The oracles deliberately avoid the library's
// algebra code: they work from group tables and plain std::complex arithmetic.

#include "udw/cohom.hpp"
#include "udw/data.hpp"
#include "udw/grp.hpp"
#include "udw/reps.hpp"
#include "udw/tft.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace udw::test {

struct PresetCase {
  std::string name;
  PresetParams params;
  std::string label;
};

inline std::vector<PresetCase> all_presets() {
  return {
      {"product_with_C2", {0, "trivial"}, "C1xC2"},
      {"product_with_C2", {2, "cyclic"}, "C2xC2"},
      {"product_with_C2", {3, "cyclic"}, "C3xC2"},
      {"product_with_C2", {4, "cyclic"}, "C4xC2"},
      {"product_with_C2", {6, "cyclic"}, "C6xC2"},
      {"product_with_C2", {0, "S3"}, "S3xC2"},
      {"product_with_C2", {0, "A4"}, "A4xC2"},
      {"product_with_C2", {0, "Q8"}, "Q8xC2"},
      {"product_with_C2", {0, "klein"}, "V4xC2"},
      {"cyclic_double", {2, ""}, "C4/C2"},
      {"cyclic_double", {4, ""}, "C8/C4"},
      {"cyclic_double", {3, ""}, "C6/C3"},
      {"dihedral", {3, ""}, "D6"},
      {"dihedral", {4, ""}, "D8"},
      {"quaternion", {0, ""}, "Q8/C4"},
      {"S4_over_A4", {0, ""}, "S4/A4"},
  };
}

enum class TwistKind { trivial, delta, delta_dmu };

inline std::string to_string(TwistKind t) {
  switch (t) {
    case TwistKind::trivial: return "trivial";
    case TwistKind::delta: return "delta";
    case TwistKind::delta_dmu: return "delta*dmu";
  }
  return "?";
}

inline TwistedCocycle gauge(const TwistedCocycle& theta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto mu = random_one_cochain(theta.cochain().graded(), Domain::hat, true, rng);
  return multiply(theta, coboundary(mu));
}

inline TwistedCocycle make_twist(std::shared_ptr<const GradedGroup> g, TwistKind t, std::uint64_t seed = 1) {
  switch (t) {
    case TwistKind::trivial: return trivial_cocycle(g);
    case TwistKind::delta: return delta_cocycle(g);
    case TwistKind::delta_dmu: return gauge(delta_cocycle(g), seed);
  }
  return trivial_cocycle(g);
}

inline DualityData make_data(const PresetCase& c, TwistKind t, bool lambda_pi, std::uint64_t seed = 1) {
  Preset p = preset(c.name, c.params);
  return DualityData(make_twist(p.group, t, seed), p.characters[lambda_pi ? 1 : 0].lambda);
}

// #{(x_1..x_k, a_1, b_1, ..) : x_1^2 .. x_k^2 [a_1,b_1] .. = e} by an odometer over all tuples.
inline long long count_surface_tuples(const FiniteGroup& g, int k, int genus) {
  const int slots = k + 2 * genus;
  const int n = g.order();
  std::vector<int> t(slots, 0);
  long long count = 0;
  while (true) {
    int w = g.identity();
    for (int i = 0; i < k; ++i) w = g.mul(w, g.mul(t[i], t[i]));
    for (int j = 0; j < genus; ++j) {
      const int a = t[k + 2 * j], b = t[k + 2 * j + 1];
      w = g.mul(w, g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }
    count += w == g.identity();
    int pos = 0;
    while (pos < slots && ++t[pos] == n) t[pos++] = 0;
    if (pos == slots) break;
  }
  return count;
}

// Classical indicator (1/|G|) sum chi(g^2) of an ordinary character.
inline std::complex<double> classical_fs(const FiniteGroup& g, const Vec& chi) {
  std::complex<double> s = 0;
  for (int x = 0; x < g.order(); ++x) s += chi(g.mul(x, x));
  return s / static_cast<double>(g.order());
}

// Exhaustive exact check of d theta = 1 from the definition, independent of `differential`.
inline bool closed_by_definition(const TwistedCocycle& th) {
  const auto& grp = th.group();
  const auto& gg = th.graded();
  const int n = grp.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Phase lhs = th(b, c);
        if (gg.is_odd(a)) lhs = lhs.inverse();
        lhs = lhs * th(a, grp.mul(b, c));
        const Phase rhs = th(grp.mul(a, b), c) * th(a, b);
        if (!(lhs == rhs)) return false;
      }
  return true;
}

inline double cabs(std::complex<double> z) { return std::abs(z); }

}  // namespace udw::test
