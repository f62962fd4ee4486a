#include "udw/reps.hpp"

#include "udw/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace udw {

namespace {

std::uint64_t attempt_seed(std::uint64_t seed, int attempt) {
  return seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt);
}

// Quantized (|chi(g)|, arg chi(g)) pairs used to order characters reproducibly.
std::vector<long long> sort_key(const TwistedCharacter& c) {
  std::vector<long long> key{c.dim};
  for (Eigen::Index g = 0; g < c.values.size(); ++g) {
    const cplx z = c.values(g);
    double t = 0.0;
    if (std::abs(z) > 1e-9) {
      t = std::arg(z) / (2.0 * std::numbers::pi);
      if (t < 0) t += 1.0;
      if (t > 1.0 - 1e-9) t = 0.0;
    }
    key.push_back(std::llround(t * 1e6));
    key.push_back(std::llround(std::abs(z) * 1e6));
  }
  return key;
}

Mat left_regular(const TwistedCocycle& theta, int g) {
  const auto& grp = theta.group();
  const int n = grp.order();
  Mat m = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) m(grp.mul(g, x), x) = theta(g, x).to_complex();
  return m;
}

Mat right_regular(const TwistedCocycle& theta, int h) {
  const auto& grp = theta.group();
  const int n = grp.order();
  Mat m = Mat::Zero(n, n);
  for (int x = 0; x < n; ++x) m(grp.mul(x, h), x) = theta(x, h).to_complex();
  return m;
}

void require_twist(const DualityData& d, const TwistedRep& v) {
  if (static_cast<int>(v.rho.size()) != d.kernel().order())
    throw Error(ErrorKind::TwistMismatch, "representation is indexed by a different group");
  if (twisted_law_defect(d.theta, v) > kAxiomTol)
    throw Error(ErrorKind::TwistMismatch, "representation is not twisted by the restriction of the cocycle");
}

cplx frobenius(const Mat& a, const Mat& b) { return (a.adjoint() * b).trace(); }

}  // namespace

cplx class_pairing(const TwistedCocycle& theta, const Vec& a, const Vec& b) {
  const auto& g = theta.group();
  cplx s = 0.0;
  for (int x = 0; x < g.order(); ++x) s += theta(g.inv(x), x).inverse().to_complex() * a(g.inv(x)) * b(x);
  return s / static_cast<double>(g.order());
}

CharacterTable irreducible_characters(const TwistedCocycle& theta, std::uint64_t seed) {
  CenterAlgebra z(TwistedAlgebra(theta, Twist::theta_inverse));
  const auto& alg = z.algebra();
  const int r = z.dim();
  const int n = alg.dim();
  std::vector<Mat> mult;
  for (int i = 0; i < r; ++i) mult.push_back(z.left_multiplication(z.basis(i)));

  for (int attempt = 0; attempt < 8; ++attempt) {
    const auto s = attempt_seed(seed, attempt);
    Rng rng(s);
    Mat m = Mat::Zero(r, r);
    for (int i = 0; i < r; ++i) m += rng.symmetric() * mult[i];
    Eigen::ComplexEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success) continue;
    const Vec& ev = es.eigenvalues();
    const double scale = std::max(1.0, max_norm(ev));
    bool separated = true;
    for (int i = 0; i < r && separated; ++i)
      for (int j = i + 1; j < r && separated; ++j) separated = std::abs(ev(i) - ev(j)) > kClusterTol * scale;
    if (!separated) continue;

    CharacterTable table;
    table.seed = s;
    table.attempts = attempt + 1;
    bool ok = true;
    int total = 0;
    for (int i = 0; i < r && ok; ++i) {
      const Vec v = es.eigenvectors().col(i);
      const AlgElem zi = z.element(v);
      const Vec sq = z.coords(alg.mul(zi, zi));
      const cplx beta = v.dot(sq) / v.squaredNorm();
      const AlgElem e = alg.scale(1.0 / beta, zi);
      const cplx d2 = static_cast<double>(n) * e.coeffs(alg.group().identity());
      const double droot = std::sqrt(std::abs(d2));
      const int d = static_cast<int>(std::lround(droot));
      if (d < 1 || std::abs(d2.imag()) > 1e-6 || std::abs(droot - d) > 1e-6) {
        ok = false;
        break;
      }
      TwistedCharacter c{e.coeffs * (static_cast<double>(n) / d), d};
      if (std::abs(class_pairing(theta, c.values, c.values) - 1.0) > kAxiomTol) ok = false;
      total += d * d;
      table.characters.push_back(std::move(c));
    }
    if (!ok || total != n) continue;
    std::sort(table.characters.begin(), table.characters.end(),
              [](const TwistedCharacter& a, const TwistedCharacter& b) { return sort_key(a) < sort_key(b); });
    return table;
  }
  throw Error(ErrorKind::EigensplitFailed, "no separating combination after 8 attempts");
}

TwistedIrrep irrep_matrices(const TwistedCocycle& theta, const TwistedCharacter& chi, std::uint64_t seed) {
  const auto& grp = theta.group();
  const int n = grp.order();
  const int d = chi.dim;
  TwistedIrrep out{chi, {}};

  auto accept = [&](TwistedRep rep) {
    if (twisted_law_defect(theta, rep) > kAxiomTol) return false;
    if (max_norm(Vec(character_of(rep) - chi.values)) > kAlgebraTol) return false;
    out.rep = std::move(rep);
    return true;
  };

  if (d == 1) {
    TwistedRep rep;
    for (int g = 0; g < n; ++g) rep.rho.push_back(Mat::Constant(1, 1, chi.values(g)));
    if (accept(std::move(rep))) return out;
    throw Error(ErrorKind::SplitFailed, "one-dimensional character is not a twisted homomorphism");
  }

  std::vector<Mat> left(n), right(n);
  for (int g = 0; g < n; ++g) {
    left[g] = left_regular(theta, g);
    right[g] = right_regular(theta, g);
  }
  Mat proj = Mat::Zero(n, n);
  for (int g = 0; g < n; ++g)
    proj += theta(g, grp.inv(g)).inverse().to_complex() * chi.values(grp.inv(g)) * left[g];
  proj *= static_cast<double>(d) / n;

  Eigen::JacobiSVD<Mat> svd(proj, Eigen::ComputeThinU);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) rank += svd.singularValues()(i) > 0.5;
  if (rank != d * d) throw Error(ErrorKind::SplitFailed, "isotypic block has rank " + std::to_string(rank));
  const Mat block = svd.matrixU().leftCols(rank);

  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng rng(attempt_seed(seed, attempt));
    Mat c = Mat::Zero(n, n);
    for (int h = 0; h < n; ++h) c += rng.complex() * right[h];
    const Mat cb = block.adjoint() * c * block;
    Eigen::ComplexEigenSolver<Mat> es(cb, false);
    if (es.info() != Eigen::Success) continue;
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + rank);
    const double scale = std::max(1.0, max_norm(es.eigenvalues()));
    // One cluster of d equal eigenvalues carves out a copy of V.
    std::vector<cplx> cluster;
    for (const auto& x : ev)
      if (std::abs(x - ev.front()) < 1e-6 * scale) cluster.push_back(x);
    if (static_cast<int>(cluster.size()) != d) continue;
    bool gap = true;
    for (const auto& x : ev)
      if (std::abs(x - ev.front()) >= 1e-6 * scale && std::abs(x - ev.front()) < 1e-4 * scale) gap = false;
    if (!gap) continue;
    cplx mean = 0.0;
    for (const auto& x : cluster) mean += x;
    mean /= static_cast<double>(d);

    Eigen::JacobiSVD<Mat> ns(cb - mean * Mat::Identity(rank, rank), Eigen::ComputeFullV);
    const Mat basis = block * ns.matrixV().rightCols(d);
    TwistedRep rep;
    double leak = 0.0;
    for (int g = 0; g < n; ++g) {
      const Mat image = left[g] * basis;
      rep.rho.push_back(basis.adjoint() * image);
      leak = std::max(leak, max_norm(Mat(image - basis * rep.rho.back())));
    }
    if (leak > kAxiomTol) continue;
    if (accept(std::move(rep))) return out;
  }
  throw Error(ErrorKind::SplitFailed, "could not split an irreducible summand of dimension " + std::to_string(d));
}

std::vector<TwistedIrrep> all_irreps(const TwistedCocycle& theta, std::uint64_t seed) {
  auto table = irreducible_characters(theta, seed);
  std::vector<TwistedIrrep> out;
  for (const auto& c : table.characters) out.push_back(irrep_matrices(theta, c, seed));
  return out;
}

double twisted_law_defect(const TwistedCocycle& theta, const TwistedRep& v) {
  const auto& g = theta.group();
  double worst = max_norm(Mat(v.rho[g.identity()] - Mat::Identity(v.dim(), v.dim())));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      worst = std::max(worst, max_norm(Mat(v.rho[a] * v.rho[b] - theta(a, b).to_complex() * v.rho[g.mul(a, b)])));
  return worst;
}

Vec character_of(const TwistedRep& v) {
  Vec c(static_cast<Eigen::Index>(v.rho.size()));
  for (std::size_t g = 0; g < v.rho.size(); ++g) c(static_cast<Eigen::Index>(g)) = v.rho[g].trace();
  return c;
}

TwistedRep direct_sum(const TwistedRep& a, const TwistedRep& b) {
  TwistedRep out;
  const int da = a.dim(), db = b.dim();
  for (std::size_t g = 0; g < a.rho.size(); ++g) {
    Mat m = Mat::Zero(da + db, da + db);
    m.topLeftCorner(da, da) = a.rho[g];
    m.bottomRightCorner(db, db) = b.rho[g];
    out.rho.push_back(std::move(m));
  }
  return out;
}

TwistedRep dual_rep(const DualityData& d, const TwistedRep& v) {
  require_twist(d, v);
  const auto& gg = d.graded();
  const auto& hat = gg.hat();
  const int s = d.varsigma;
  TwistedRep out;
  for (int g = 0; g < gg.kernel().order(); ++g) {
    const int gh = gg.embed(g);
    const int x = gg.to_kernel(hat.conj(s, hat.inv(gh)));
    const Phase c = d.lambda(gh) / refl_transgression(d.theta_hat, s, gh);
    out.rho.push_back(c.to_complex() * v.rho[x].transpose());
  }
  return out;
}

Mat theta_component(const DualityData& d, const TwistedRep& v) {
  require_twist(d, v);
  const int s = d.varsigma;
  const int s2 = d.graded().to_kernel(d.hat().mul(s, s));
  const Phase c = d.lambda(s) / d.theta_hat(s, s);
  return c.to_complex() * v.rho[s2].inverse();
}

double duality_coherence_defect(const DualityData& d, const TwistedRep& v) {
  const Mat theta_v = theta_component(d, v);
  const Mat theta_pv = theta_component(d, dual_rep(d, v));
  return max_norm(Mat(theta_v.transpose() * theta_pv - Mat::Identity(v.dim(), v.dim())));
}

AlgElem fs_element(const DualityData& d) {
  const auto& gg = d.graded();
  AlgElem nu{Twist::theta_inverse, Vec::Zero(gg.kernel().order())};
  for (int s : gg.odd_elements())
    nu.coeffs(gg.to_kernel(d.hat().mul(s, s))) += (d.lambda(s) / d.theta_hat(s, s)).to_complex();
  return nu;
}

cplx fs_indicator(const DualityData& d, const TwistedCharacter& chi) {
  const cplx value = class_pairing(d.theta, chi.values, fs_element(d).coeffs);
  rounded_indicator(value);
  return value;
}

int rounded_indicator(cplx value) {
  const int r = static_cast<int>(std::lround(value.real()));
  if (r < -1 || r > 1 || std::abs(value - cplx(r, 0.0)) > kAlgebraTol)
    throw Error(ErrorKind::IndicatorOutOfRange,
                "pairing " + std::to_string(value.real()) + " + " + std::to_string(value.imag()) + "i");
  return r;
}

FsDecompositionReport fs_decomposition_check(const DualityData& d, const std::vector<TwistedCharacter>& chars) {
  FsDecompositionReport report;
  const Vec nu = fs_element(d).coeffs;
  Vec rebuilt = Vec::Zero(nu.size());
  for (const auto& c : chars) {
    const int ind = rounded_indicator(fs_indicator(d, c));
    report.indicators.push_back(ind);
    rebuilt += static_cast<double>(ind) * c.values;
  }
  report.residual = max_norm(Vec(rebuilt - nu));
  return report;
}

std::vector<Mat> equivariant_homs(const TwistedRep& v, const TwistedRep& w) {
  const int dv = v.dim(), dw = w.dim();
  const auto n = static_cast<Eigen::Index>(v.rho.size());
  const Eigen::Index k = static_cast<Eigen::Index>(dv) * dw;
  Mat constraints(n * k, k);
  const Mat iv = Mat::Identity(dv, dv), iw = Mat::Identity(dw, dw);
  for (Eigen::Index g = 0; g < n; ++g)
    constraints.middleRows(g * k, k) = kron(v.rho[g].transpose(), iw) - kron(iv, w.rho[g]);
  const Mat ns = null_space(constraints, 1e-9);
  std::vector<Mat> out;
  for (Eigen::Index c = 0; c < ns.cols(); ++c) {
    const Vec col = ns.col(c);
    out.push_back(Eigen::Map<const Mat>(col.data(), dw, dv));
  }
  return out;
}

cplx iota_trace(const DualityData& d, const TwistedRep& v, const Mat& phi) {
  const TwistedRep pv = dual_rep(d, v);
  const Mat theta_v = theta_component(d, v);
  const auto basis = equivariant_homs(v, pv);
  cplx tr = 0.0;
  for (const auto& f : basis) tr += frobenius(f, f.transpose() * theta_v * phi);
  return tr;
}

double fixed_point_defect(const DualityData& d, const TwistedRep& v, const Mat& psi, int sign) {
  return max_norm(Mat(psi.transpose() * theta_component(d, v) - static_cast<double>(sign) * psi));
}

Hyperbolic hyperbolic(const DualityData& d, const TwistedIrrep& u, int indicator) {
  Hyperbolic h{u, dual_rep(d, u.rep), {}, {}, indicator};
  h.rep = direct_sum(u.rep, h.dual);
  const int k = u.rep.dim();
  h.psi = Mat::Zero(2 * k, 2 * k);
  h.psi.topRightCorner(k, k) = Mat::Identity(k, k);
  h.psi.bottomLeftCorner(k, k) = theta_component(d, u.rep);
  return h;
}

RealStructure hyperbolic_as_fixed_point(const Hyperbolic& h) {
  TwistedCharacter chi{character_of(h.rep), h.rep.dim()};
  return {{chi, h.rep}, h.psi, 1};
}

std::variant<RealStructure, Hyperbolic> real_structure(const DualityData& d, const TwistedIrrep& v) {
  const int ind = rounded_indicator(fs_indicator(d, v.character));
  const TwistedRep pv = dual_rep(d, v.rep);
  const auto homs = equivariant_homs(v.rep, pv);
  if (homs.empty()) {
    if (ind != 0) throw Error(ErrorKind::IndicatorMismatch, "indicator " + std::to_string(ind) + " but V is not self-dual");
    return hyperbolic(d, v, 0);
  }
  Mat psi = homs.front();
  // Deterministic phase: the first entry of maximal modulus becomes 1.
  const double top = psi.cwiseAbs().maxCoeff();
  cplx pivot = 0.0;
  for (Eigen::Index j = 0; j < psi.cols() && pivot == 0.0; ++j)
    for (Eigen::Index i = 0; i < psi.rows() && pivot == 0.0; ++i)
      if (std::abs(psi(i, j)) >= top * (1.0 - 1e-9)) pivot = psi(i, j);
  psi /= pivot;
  const Mat image = psi.transpose() * theta_component(d, v.rep);
  const cplx measured = frobenius(psi, image) / frobenius(psi, psi);
  if (std::abs(measured - cplx(ind, 0.0)) > kAxiomTol || max_norm(Mat(image - measured * psi)) > kAxiomTol)
    throw Error(ErrorKind::IndicatorMismatch, "fixed point sign " + std::to_string(measured.real()) + " vs indicator " +
                                                  std::to_string(ind));
  return RealStructure{v, psi, ind};
}

BilinearFormReport bilinear_form_check(const DualityData& d, const RealStructure& r) {
  const auto& gg = d.graded();
  const auto& hat = gg.hat();
  const auto& rho = r.base.rep.rho;
  const int s = d.varsigma;
  const int s_inv = hat.inv(s);
  const int s_m2 = hat.mul(s_inv, s_inv);
  const int k_m2 = gg.to_kernel(s_m2);
  // <v1, v2> = rho(s^-1)^-1(v1)(v2), and rho(s^-1)^-1 is psi up to a scalar. The conditions are homogeneous in the
  // form, so psi^T is used directly.
  BilinearFormReport report;
  report.form = r.psi.transpose();
  const Mat& b = report.form;
  for (int g = 0; g < gg.kernel().order(); ++g) {
    const int gh = gg.embed(g);
    const int conj = hat.conj(s, gh);
    const Phase c = d.lambda(gh) * d.theta_hat(conj, s) / d.theta_hat(s, gh);
    const Mat lhs = rho[g].transpose() * b * rho[gg.to_kernel(conj)];
    report.invariance_residual = std::max(report.invariance_residual, max_norm(Mat(lhs - c.to_complex() * b)));
  }
  Phase c = d.lambda(s) * d.theta_hat(s_inv, s_inv);
  const double sign = static_cast<double>(r.sign);
  report.symmetry_residual = max_norm(Mat(b - sign * c.to_complex() * b.transpose() * rho[k_m2]));
  const double scale = std::max(1.0, max_norm(b));
  if (max_norm(Mat(b - b.transpose())) < kAxiomTol * scale) report.symmetry = 1;
  else if (max_norm(Mat(b + b.transpose())) < kAxiomTol * scale) report.symmetry = -1;
  return report;
}

}  // namespace udw
