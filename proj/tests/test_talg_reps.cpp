#include "support.hpp"

#include "udw/error.hpp"
#include "udw/talg.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace udw;
using namespace udw::test;

namespace {

const PresetCase& find_case(const std::string& label) {
  static const auto cases = all_presets();
  for (const auto& c : cases)
    if (c.label == label) return c;
  throw std::runtime_error("no preset " + label);
}

DualityData data(const std::string& label, TwistKind t = TwistKind::trivial, bool pi = false, std::uint64_t seed = 1) {
  return make_data(find_case(label), t, pi, seed);
}

// Dimension of the center by brute force: null space of all commutators with basis elements,
// built from the cocycle values directly.
int center_dimension(const TwistedCocycle& theta) {
  const auto& g = theta.group();
  const int n = g.order();
  Mat m = Mat::Zero(static_cast<Eigen::Index>(n) * n, n);
  for (int h = 0; h < n; ++h)
    for (int x = 0; x < n; ++x) {
      // l_h l_x - l_x l_h in C^{theta^-1}[G]
      m(static_cast<Eigen::Index>(h) * n + g.mul(h, x), x) += theta(h, x).inverse().to_complex();
      m(static_cast<Eigen::Index>(h) * n + g.mul(x, h), x) -= theta(x, h).inverse().to_complex();
    }
  return static_cast<int>(null_space(m).cols());
}

}  // namespace

TEST_CASE("twisted group algebra basics") {
  const auto d = data("Q8/C4", TwistKind::delta_dmu, false, 4);
  const TwistedAlgebra alg(d.theta, Twist::theta_inverse);
  const int n = alg.dim();
  for (int g = 0; g < n; ++g) {
    CHECK(distance(alg.mul(alg.unit(), alg.basis(g)), alg.basis(g)) < kAlgebraTol);
    CHECK(distance(alg.mul(alg.basis(g), alg.unit()), alg.basis(g)) < kAlgebraTol);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto lhs = alg.mul(alg.mul(alg.basis(a), alg.basis(b)), alg.basis(c));
        const auto rhs = alg.mul(alg.basis(a), alg.mul(alg.basis(b), alg.basis(c)));
        CHECK(distance(lhs, rhs) < kAlgebraTol);
      }

  const auto c4 = preset("product_with_C2", {4, "cyclic"});
  const TwistedAlgebra plain(restrict_to_kernel(trivial_cocycle(c4.group)), Twist::theta_inverse);
  CHECK(distance(plain.mul(plain.basis(1), plain.basis(1)), plain.basis(2)) < kAlgebraTol);

  const TwistedAlgebra other(restrict_to_kernel(trivial_cocycle(c4.group)), Twist::theta);
  CHECK_THROWS_AS(plain.mul(plain.unit(), other.unit()), Error);
}

TEST_CASE("trace and pairing") {
  const auto d = data("S3xC2", TwistKind::delta_dmu, false, 2);
  const TwistedAlgebra alg(d.theta, Twist::theta_inverse);
  const auto& g = alg.group();
  const double n = g.order();
  CHECK(std::abs(alg.trace0(alg.unit()) - 1.0 / n) < 1e-15);
  for (int x = 1; x < g.order(); ++x) CHECK(std::abs(alg.trace0(alg.basis(x))) < 1e-15);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const cplx p = alg.pairing(alg.basis(x), alg.basis(y));
      if (y == g.inv(x)) CHECK(std::abs(p - d.theta(g.inv(x), x).inverse().to_complex() / n) < 1e-15);
      else CHECK(std::abs(p) < 1e-15);
    }
  Rng rng(3);
  Vec a = Vec::Zero(g.order()), b = Vec::Zero(g.order());
  for (int i = 0; i < g.order(); ++i) a(i) = rng.complex(), b(i) = rng.complex();
  const auto ea = alg.element(a), eb = alg.element(b);
  CHECK(std::abs(alg.trace0(alg.add(ea, alg.scale(2.0, eb))) - alg.trace0(ea) - 2.0 * alg.trace0(eb)) < 1e-14);
  CHECK(std::abs(alg.pairing(ea, eb) - alg.trace0(alg.mul(ea, eb))) < 1e-14);
}

TEST_CASE("regular classes span the center") {
  for (const auto& c : all_presets()) {
    for (auto t : {TwistKind::trivial, TwistKind::delta_dmu}) {
      CAPTURE(c.label);
      const auto d = make_data(c, t, false, 6);
      const auto classes = theta_regular_classes(d.theta);
      const auto regular = std::count_if(classes.begin(), classes.end(), [](const ClassInfo& k) { return k.regular; });
      CHECK(regular == center_dimension(d.theta));
      if (t == TwistKind::trivial) CHECK(regular == static_cast<long>(classes.size()));
      const CenterAlgebra z(TwistedAlgebra(d.theta, Twist::theta_inverse));
      for (int i = 0; i < z.dim(); ++i) CHECK(z.algebra().commutator_defect(z.basis(i)) < kAlgebraTol);
      CHECK(z.dim() == static_cast<int>(irreducible_characters(d.theta, kDefaultSeed).characters.size()));
    }
  }
  const auto s3 = data("S3xC2");
  CHECK(theta_regular_classes(s3.theta).size() == 3);
}

TEST_CASE("a cocycle with an irregular class") {
  // The nontrivial class of H^2(C2 x C2, U(1)) makes only the identity class regular.
  const auto p = preset("product_with_C2", {0, "klein"});
  const auto& hat = p.group->hat();
  const auto& k = p.group->kernel();
  // theta([a1 b1 | a2 b2]) = (-1)^{b1 a2}, pulled back along the projection to the kernel.
  auto bits = [&](int kernel_index) { return std::pair{kernel_index & 1, (kernel_index >> 1) & 1}; };
  std::vector<Phase> v(static_cast<std::size_t>(hat.order()) * hat.order());
  for (int x = 0; x < hat.order(); ++x)
    for (int y = 0; y < hat.order(); ++y) {
      const int kx = x % k.order(), ky = y % k.order();
      if (bits(kx).second * bits(ky).first) v[static_cast<std::size_t>(x) * hat.order() + y] = Phase::minus_one();
    }
  // +-1 valued, so the odd action is invisible and the pullback stays closed.
  const TwistedCocycle theta_hat(Cochain(p.group, Domain::hat, true, 2, v));
  const auto theta = restrict_to_kernel(theta_hat);
  const auto classes = theta_regular_classes(theta);
  CHECK(std::count_if(classes.begin(), classes.end(), [](const ClassInfo& x) { return x.regular; }) == 1);
  const auto table = irreducible_characters(theta, kDefaultSeed);
  REQUIRE(table.characters.size() == 1);
  CHECK(table.characters[0].dim == 2);
}

TEST_CASE("orientation-reversing action on the algebra") {
  const auto d = data("Q8/C4", TwistKind::delta);
  const TwistedAlgebra alg(d.theta, Twist::theta_inverse);
  const auto& hat = d.hat();
  for (int g = 0; g < alg.dim(); ++g) CHECK(distance(p_omega(d, hat.identity(), alg.basis(g)), alg.basis(g)) < kAlgebraTol);
  for (int w2 = 0; w2 < hat.order(); ++w2)
    for (int w1 = 0; w1 < hat.order(); ++w1)
      for (int g = 0; g < alg.dim(); ++g) {
        const auto lhs = p_omega(d, w2, p_omega(d, w1, alg.basis(g)));
        const auto rhs = p_omega(d, hat.mul(w2, w1), alg.basis(g));
        CHECK(distance(lhs, rhs) < kAlgebraTol);
      }

  const auto triv = data("S3xC2");
  const TwistedAlgebra talg(triv.theta, Twist::theta_inverse);
  const auto& gg = triv.graded();
  for (int w : gg.odd_elements())
    for (int g = 0; g < talg.dim(); ++g) {
      const int hg = gg.embed(g);
      const int image = gg.to_kernel(triv.hat().conj(w, triv.hat().inv(hg)));
      CHECK(distance(p_omega(triv, w, talg.basis(g)), talg.basis(image)) < kAlgebraTol);
    }
}

TEST_CASE("involution on the center") {
  for (const auto& label : {"Q8/C4", "S3xC2", "D8", "C8/C4", "S4/A4"}) {
    for (auto t : {TwistKind::trivial, TwistKind::delta, TwistKind::delta_dmu}) {
      CAPTURE(label);
      const auto d = data(label, t, true, 8);
      const CenterAlgebra z(TwistedAlgebra(d.theta, Twist::theta_inverse));
      CHECK(distance(p_center(d, z.algebra().unit()), z.algebra().unit()) < kAlgebraTol);
      for (int s : d.graded().odd_elements()) {
        const auto other = d.with_odd(s);
        for (int i = 0; i < z.dim(); ++i) CHECK(distance(p_center(d, z.basis(i)), p_center(other, z.basis(i))) < kAlgebraTol);
      }
      for (int i = 0; i < z.dim(); ++i) {
        const auto pi = p_center(d, z.basis(i));
        CHECK(distance(p_center(d, pi), z.basis(i)) < kAlgebraTol);
        for (int j = 0; j < z.dim(); ++j) {
          const auto pj = p_center(d, z.basis(j));
          CHECK(std::abs(z.algebra().pairing(pi, pj) - z.algebra().pairing(z.basis(i), z.basis(j))) < kAlgebraTol);
          CHECK(distance(p_center(d, z.algebra().mul(z.basis(i), z.basis(j))), z.algebra().mul(pi, pj)) < kAlgebraTol);
        }
      }
    }
  }
}

TEST_CASE("handle and Klein elements") {
  const auto triv = data("C1xC2");
  const CenterAlgebra z1(TwistedAlgebra(triv.theta, Twist::theta_inverse));
  CHECK(distance(z1.handle_element(), z1.algebra().unit()) < kAlgebraTol);
  CHECK(distance(klein_element(triv, z1), z1.algebra().unit()) < kAlgebraTol);

  const auto s3 = data("S3xC2");
  const CenterAlgebra z(TwistedAlgebra(s3.theta, Twist::theta_inverse));
  AlgElem power = z.algebra().unit();
  for (int genus = 0; genus <= 3; ++genus) {
    // Dimensions 1, 1, 2.
    const double expected = 2 * std::pow(1.0 / 6, 2 - 2 * genus) + std::pow(2.0 / 6, 2 - 2 * genus);
    CHECK(std::abs(z.algebra().trace0(power) - expected) < 1e-9 * std::max(1.0, expected));
    power = z.algebra().mul(power, z.handle_element());
  }

  for (const auto& c : all_presets())
    for (bool pi : {false, true}) {
      CAPTURE(c.label);
      const auto d = make_data(c, TwistKind::delta_dmu, pi, 12);
      const CenterAlgebra zc(TwistedAlgebra(d.theta, Twist::theta_inverse));
      const auto nu = fs_element(d);
      CHECK(distance(klein_element(d, zc), zc.algebra().mul(nu, nu)) < kAxiomTol);
    }
}

TEST_CASE("center coordinates reject non-central elements") {
  const auto d = data("S3xC2");
  const CenterAlgebra z(TwistedAlgebra(d.theta, Twist::theta_inverse));
  CHECK_THROWS_AS(z.coords(z.algebra().basis(1)), Error);
  CHECK_THROWS_AS(p_center(d, z.algebra().basis(1)), Error);
  const Vec c = z.coords(z.handle_element());
  CHECK(distance(z.element(c), z.handle_element()) < kAlgebraTol);
}

TEST_CASE("ordinary characters of small groups") {
  for (int n : {2, 3, 4, 6}) {
    const auto p = preset("product_with_C2", {n, "cyclic"});
    const auto theta = restrict_to_kernel(trivial_cocycle(p.group));
    const auto table = irreducible_characters(theta, kDefaultSeed);
    REQUIRE(table.characters.size() == static_cast<std::size_t>(n));
    // The values at the generator are exactly the n-th roots of unity.
    std::vector<int> hits(n, 0);
    for (const auto& chi : table.characters) {
      CHECK(chi.dim == 1);
      for (int k = 0; k < n; ++k)
        if (std::abs(chi.values(1) - std::polar(1.0, 2 * M_PI * k / n)) < 1e-9) ++hits[k];
    }
    for (int k = 0; k < n; ++k) CHECK(hits[k] == 1);
  }
  const auto a4 = preset("product_with_C2", {0, "A4"});
  const auto table = irreducible_characters(restrict_to_kernel(trivial_cocycle(a4.group)), kDefaultSeed);
  std::vector<int> dims;
  for (const auto& chi : table.characters) dims.push_back(chi.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 1, 3});
}

TEST_CASE("semisimplicity and matrix realizations") {
  for (const auto& c : all_presets())
    for (auto t : {TwistKind::trivial, TwistKind::delta, TwistKind::delta_dmu}) {
      CAPTURE(c.label);
      CAPTURE(to_string(t));
      const auto d = make_data(c, t, false, 21);
      const auto irreps = all_irreps(d.theta, kDefaultSeed);
      int sum = 0;
      for (const auto& v : irreps) {
        sum += v.character.dim * v.character.dim;
        CHECK(twisted_law_defect(d.theta, v.rep) < kAlgebraTol);
        CHECK(max_norm(Vec(character_of(v.rep) - v.character.values)) < kAlgebraTol);
        CHECK(equivariant_homs(v.rep, v.rep).size() == 1);
      }
      CHECK(sum == d.kernel().order());
    }
}

TEST_CASE("C4 rotation acts by i") {
  const auto p = preset("product_with_C2", {4, "cyclic"});
  const auto theta = restrict_to_kernel(trivial_cocycle(p.group));
  bool found = false;
  for (const auto& v : all_irreps(theta, kDefaultSeed)) {
    if (std::abs(v.character.values(1) - cplx(0, 1)) < 1e-9) {
      found = true;
      CHECK(std::abs(v.rep.rho[1](0, 0) - cplx(0, 1)) < 1e-9);
    }
  }
  CHECK(found);
  const auto irreps = all_irreps(theta, kDefaultSeed);
  CHECK(equivariant_homs(irreps[0].rep, irreps[1].rep).empty());
}

TEST_CASE("duality functor") {
  for (const auto& c : all_presets())
    for (auto t : {TwistKind::trivial, TwistKind::delta, TwistKind::delta_dmu})
      for (bool pi : {false, true}) {
        CAPTURE(c.label);
        const auto d = make_data(c, t, pi, 31);
        const auto& hat = d.hat();
        const auto& gg = d.graded();
        const int s = d.varsigma;
        for (const auto& v : all_irreps(d.theta, kDefaultSeed)) {
          const auto pv = dual_rep(d, v.rep);
          CHECK(twisted_law_defect(d.theta, pv) < kAlgebraTol);
          const Vec chi = character_of(pv);
          for (int g = 0; g < d.kernel().order(); ++g) {
            const int hg = gg.embed(g);
            const int moved = gg.to_kernel(hat.conj(s, hat.inv(hg)));
            const cplx expected = (d.lambda(hg) / refl_transgression(d.theta_hat, s, hg)).to_complex() * v.character.values(moved);
            CHECK(std::abs(chi(g) - expected) < 1e-9);
          }
          CHECK(duality_coherence_defect(d, v.rep) < kAxiomTol);
          const auto homs = equivariant_homs(v.rep, pv);
          CHECK(homs.size() <= 1);
          // Theta_V = (lambda(s) / theta^(s, s)) rho(s^2)^-1
          const Mat expected = (d.lambda(s) / d.theta_hat(s, s)).to_complex() * v.rep.rho[gg.to_kernel(hat.mul(s, s))].inverse();
          CHECK(max_norm(Mat(theta_component(d, v.rep) - expected)) < 1e-9);
        }
      }

  // Trivial data on an odd involution: Theta is the identity.
  const auto d = data("S3xC2");
  for (const auto& v : all_irreps(d.theta, kDefaultSeed))
    CHECK(max_norm(Mat(theta_component(d, v.rep) - Mat::Identity(v.rep.dim(), v.rep.dim()))) < 1e-12);
}

TEST_CASE("Frobenius-Schur element of the examples") {
  for (int n : {3, 4}) {
    const auto d = data(n == 3 ? "D6" : "D8");
    const auto nu = fs_element(d);
    for (int g = 0; g < d.kernel().order(); ++g) CHECK(std::abs(nu.coeffs(g) - (g == d.kernel().identity() ? double(n) : 0.0)) < 1e-12);
  }
  {
    const auto d = data("Q8/C4");
    const auto nu = fs_element(d);
    for (int g = 0; g < 4; ++g) CHECK(std::abs(nu.coeffs(g) - (d.graded().embed(g) == 2 ? 4.0 : 0.0)) < 1e-12);
  }
  for (const auto& label : {"C4/C2", "C8/C4"}) {
    // With r = s^2 the odd elements square onto the odd powers of r, each hit twice.
    const auto d = data(label);
    const auto nu = fs_element(d);
    for (int g = 0; g < d.kernel().order(); ++g) {
      const int power_of_r = d.graded().embed(g) / 2;
      CHECK(std::abs(nu.coeffs(g) - (power_of_r % 2 == 1 ? 2.0 : 0.0)) < 1e-12);
    }
  }
  // lambda = pi negates nu on the product presets.
  const auto plus = fs_element(data("S4/A4"));
  const auto minus = fs_element(data("S4/A4", TwistKind::trivial, true));
  CHECK(max_norm(Vec(plus.coeffs + minus.coeffs)) < 1e-12);
}

TEST_CASE("indicators agree with the classical formula on untwisted products") {
  for (const auto& label : {"C1xC2", "C2xC2", "C3xC2", "C4xC2", "C6xC2", "S3xC2", "A4xC2", "Q8xC2", "V4xC2"}) {
    CAPTURE(label);
    const auto d = data(label);
    const auto table = irreducible_characters(d.theta, kDefaultSeed);
    for (const auto& chi : table.characters) {
      const cplx classical = classical_fs(d.kernel(), chi.values);
      CHECK(std::abs(fs_indicator(d, chi) - classical) < 1e-9);
    }
  }
  // Q8 as a plain group has one quaternionic irrep.
  const auto q8 = data("Q8xC2");
  int quaternionic = 0;
  for (const auto& chi : irreducible_characters(q8.theta, kDefaultSeed).characters)
    quaternionic += rounded_indicator(fs_indicator(q8, chi)) == -1;
  CHECK(quaternionic == 1);
}

TEST_CASE("indicator decomposition of nu") {
  for (const auto& c : all_presets())
    for (auto t : {TwistKind::trivial, TwistKind::delta, TwistKind::delta_dmu})
      for (bool pi : {false, true}) {
        CAPTURE(c.label);
        const auto d = make_data(c, t, pi, 41);
        const auto table = irreducible_characters(d.theta, kDefaultSeed);
        const auto report = fs_decomposition_check(d, table.characters);
        CHECK(report.residual < 1e-9);
        // The coefficient of l_e is sum of indicator * dim.
        int weighted = 0;
        for (std::size_t i = 0; i < table.characters.size(); ++i) weighted += report.indicators[i] * table.characters[i].dim;
        CHECK(std::abs(fs_element(d).coeffs(d.kernel().identity()) - double(weighted)) < 1e-9);
      }
  CHECK_THROWS_AS(rounded_indicator(cplx(0.5, 0)), Error);
  CHECK(rounded_indicator(cplx(-1 + 1e-12, 0)) == -1);
}

TEST_CASE("real structures") {
  {
    const auto d = data("C8/C4");
    for (const auto& v : all_irreps(d.theta, kDefaultSeed)) {
      const cplx at_r = v.character.values(1);
      const auto r = real_structure(d, v);
      if (std::abs(at_r - 1.0) < 1e-9) {
        REQUIRE(std::holds_alternative<RealStructure>(r));
        CHECK(std::get<RealStructure>(r).sign == 1);
      } else if (std::abs(at_r + 1.0) < 1e-9) {
        REQUIRE(std::holds_alternative<RealStructure>(r));
        CHECK(std::get<RealStructure>(r).sign == -1);
      } else {
        CHECK(std::holds_alternative<Hyperbolic>(r));
      }
    }
  }
  {
    const auto d = data("A4xC2");
    int hyperbolic_count = 0;
    for (const auto& v : all_irreps(d.theta, kDefaultSeed)) {
      const auto r = real_structure(d, v);
      if (std::holds_alternative<Hyperbolic>(r)) {
        ++hyperbolic_count;
        const auto& h = std::get<Hyperbolic>(r);
        CHECK(v.character.dim == 1);
        const auto fp = hyperbolic_as_fixed_point(h);
        CHECK(fixed_point_defect(d, fp.base.rep, fp.psi, fp.sign) < kAxiomTol);
      }
    }
    CHECK(hyperbolic_count == 2);
  }
  for (const auto& c : all_presets())
    for (auto t : {TwistKind::trivial, TwistKind::delta_dmu})
      for (bool pi : {false, true}) {
        CAPTURE(c.label);
        const auto d = make_data(c, t, pi, 51);
        for (const auto& v : all_irreps(d.theta, kDefaultSeed)) {
          const auto r = real_structure(d, v);
          if (auto* rs = std::get_if<RealStructure>(&r)) {
            CHECK(fixed_point_defect(d, v.rep, rs->psi, rs->sign) < kAxiomTol);
            const auto form = bilinear_form_check(d, *rs);
            CHECK(form.invariance_residual < 1e-9);
            CHECK(form.symmetry_residual < 1e-9);
          }
        }
      }
}

TEST_CASE("bilinear forms in the classical case") {
  const auto plain = data("S3xC2");
  for (const auto& v : all_irreps(plain.theta, kDefaultSeed)) {
    const auto r = std::get<RealStructure>(real_structure(plain, v));
    const auto form = bilinear_form_check(plain, r);
    CHECK(form.symmetry == 1);
    CHECK(max_norm(Mat(form.form - form.form.transpose())) < 1e-9);
  }
  // With delta the form picks up a sign: real irreps of S3 (indicator -1) stay symmetric, the quaternionic irrep
  // of Q8 (indicator +1) carries a skew form.
  const auto twisted = data("S3xC2", TwistKind::delta);
  for (const auto& v : all_irreps(twisted.theta, kDefaultSeed)) {
    const auto r = std::get<RealStructure>(real_structure(twisted, v));
    CHECK(r.sign == -1);
    const auto form = bilinear_form_check(twisted, r);
    CHECK(form.symmetry == 1);
    CHECK(form.invariance_residual < 1e-9);
    CHECK(form.symmetry_residual < 1e-9);
  }
  const auto q8 = data("Q8xC2", TwistKind::delta);
  int skew = 0;
  for (const auto& v : all_irreps(q8.theta, kDefaultSeed)) {
    const auto r = std::get<RealStructure>(real_structure(q8, v));
    const auto form = bilinear_form_check(q8, r);
    CHECK(form.invariance_residual < 1e-9);
    CHECK(form.symmetry_residual < 1e-9);
    if (v.rep.dim() == 2) {
      CHECK(r.sign == 1);
      CHECK(form.symmetry == -1);
      CHECK(max_norm(Mat(form.form + form.form.transpose())) < 1e-9);
      ++skew;
    }
  }
  CHECK(skew == 1);
}

TEST_CASE("twist mismatch") {
  const auto a = data("Q8/C4");
  const auto b = data("D8");
  const auto irreps = all_irreps(b.theta, kDefaultSeed);
  TwistedRep wrong = irreps.back().rep;
  wrong.rho.pop_back();
  CHECK_THROWS_AS(dual_rep(a, wrong), Error);

  const auto gauged = data("Q8/C4", TwistKind::delta_dmu, false, 77);
  bool nontrivial = false;
  for (Phase v : gauged.theta.cochain().values()) nontrivial |= !v.is_one();
  REQUIRE(nontrivial);
  for (const auto& v : all_irreps(a.theta, kDefaultSeed)) {
    if (twisted_law_defect(gauged.theta, v.rep) < kAxiomTol) continue;
    try {
      dual_rep(gauged, v.rep);
      FAIL("expected TwistMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::TwistMismatch);
    }
  }
}
