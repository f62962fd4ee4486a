#include "udw/talg.hpp"

#include "udw/error.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace udw {

TwistedAlgebra::TwistedAlgebra(TwistedCocycle theta, Twist twist) : theta_(std::move(theta)), twist_(twist) {
  const int n = dim();
  table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table_[static_cast<std::size_t>(a) * n + b] = structure(a, b).to_complex();
}

Phase TwistedAlgebra::structure(int a, int b) const {
  return twist_ == Twist::theta ? theta_(a, b) : theta_(a, b).inverse();
}

AlgElem TwistedAlgebra::zero() const { return {twist_, Vec::Zero(dim())}; }

AlgElem TwistedAlgebra::unit() const { return basis(group().identity()); }

AlgElem TwistedAlgebra::basis(int g) const {
  AlgElem a = zero();
  a.coeffs(g) = 1.0;
  return a;
}

AlgElem TwistedAlgebra::element(Vec coeffs) const {
  AlgElem a{twist_, std::move(coeffs)};
  require(a);
  return a;
}

void TwistedAlgebra::require(const AlgElem& a) const {
  if (a.twist != twist_ || a.coeffs.size() != dim())
    throw Error(ErrorKind::MixedAlgebras, "element does not belong to this twisted group algebra");
}

AlgElem TwistedAlgebra::mul(const AlgElem& a, const AlgElem& b) const {
  require(a);
  require(b);
  const int n = dim();
  const auto& g = group();
  AlgElem out = zero();
  for (int x = 0; x < n; ++x) {
    if (a.coeffs(x) == 0.0) continue;
    for (int y = 0; y < n; ++y) {
      if (b.coeffs(y) == 0.0) continue;
      out.coeffs(g.mul(x, y)) += a.coeffs(x) * b.coeffs(y) * structure_c(x, y);
    }
  }
  return out;
}

AlgElem TwistedAlgebra::add(const AlgElem& a, const AlgElem& b) const {
  require(a);
  require(b);
  return {twist_, a.coeffs + b.coeffs};
}

AlgElem TwistedAlgebra::scale(cplx s, const AlgElem& a) const {
  require(a);
  return {twist_, s * a.coeffs};
}

cplx TwistedAlgebra::trace0(const AlgElem& a) const {
  require(a);
  return a.coeffs(group().identity()) / static_cast<double>(dim());
}

cplx TwistedAlgebra::pairing(const AlgElem& a, const AlgElem& b) const {
  require(a);
  require(b);
  const auto& g = group();
  cplx s = 0.0;
  for (int x = 0; x < dim(); ++x) s += structure_c(g.inv(x), x) * a.coeffs(g.inv(x)) * b.coeffs(x);
  return s / static_cast<double>(dim());
}

double TwistedAlgebra::commutator_defect(const AlgElem& a, int* witness) const {
  double worst = 0.0;
  for (int h = 0; h < dim(); ++h) {
    const auto lh = basis(h);
    const double d = max_norm(Vec(mul(a, lh).coeffs - mul(lh, a).coeffs));
    if (d > worst) {
      worst = d;
      if (witness) *witness = h;
    }
  }
  return worst;
}

double distance(const AlgElem& a, const AlgElem& b) {
  if (a.twist != b.twist || a.coeffs.size() != b.coeffs.size())
    throw Error(ErrorKind::MixedAlgebras, "comparing elements of different algebras");
  return max_norm(Vec(a.coeffs - b.coeffs));
}

std::vector<ClassInfo> theta_regular_classes(const TwistedCocycle& theta) {
  const auto& g = theta.group();
  std::vector<ClassInfo> out;
  for (auto& members : g.conjugacy_classes()) {
    ClassInfo info;
    info.representative = members.front();
    for (int x : members) {
      for (int h : g.centralizer(x)) {
        if (theta(x, h) != theta(h, x)) {
          info.regular = false;
          break;
        }
      }
      if (!info.regular) break;
    }
    info.members = std::move(members);
    out.push_back(std::move(info));
  }
  return out;
}

RegularClassBasis center_basis(const TwistedAlgebra& alg) {
  const auto& g = alg.group();
  const auto& theta = alg.theta();
  const int sigma = alg.twist() == Twist::theta ? 1 : -1;
  RegularClassBasis out;
  out.classes = theta_regular_classes(theta);
  for (int c = 0; c < static_cast<int>(out.classes.size()); ++c) {
    const auto& info = out.classes[c];
    if (!info.regular) continue;
    // a_{h x h^-1} = tau(c)([h]x)^-1 a_x with c = theta^sigma.
    std::vector<std::optional<Phase>> coeff(g.order());
    coeff[info.representative] = Phase::one();
    std::deque<int> queue{info.representative};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int h = 0; h < g.order(); ++h) {
        const int y = g.conj(h, x);
        const Phase value = *coeff[x] * loop_transgression(theta, h, x).pow(-sigma);
        if (!coeff[y]) {
          coeff[y] = value;
          queue.push_back(y);
        } else if (*coeff[y] != value) {
          throw Error(ErrorKind::InconsistentPropagation, "class of element " + std::to_string(info.representative));
        }
      }
    }
    AlgElem a = alg.zero();
    std::vector<Phase> phases;
    for (int x : info.members) {
      a.coeffs(x) = coeff[x]->to_complex();
      phases.push_back(*coeff[x]);
    }
    int witness = -1;
    if (alg.commutator_defect(a, &witness) > kAlgebraTol)
      throw Error(ErrorKind::NotCentral, "class sum of element " + std::to_string(info.representative) +
                                             " fails to commute with l_" + std::to_string(witness));
    out.regular.push_back(c);
    out.basis.push_back(std::move(a));
    out.phases.push_back(std::move(phases));
  }
  return out;
}

CenterAlgebra::CenterAlgebra(TwistedAlgebra alg) : alg_(std::move(alg)), basis_(center_basis(alg_)) {
  const int r = dim();
  gram_.resize(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram_(i, j) = alg_.trace0(alg_.mul(basis(i), basis(j)));
  Eigen::FullPivLU<Mat> lu(gram_);
  if (lu.rank() < r || lu.rcond() < 1e-12) throw Error(ErrorKind::SingularGram, "pairing on the center is degenerate");
  gram_inv_ = lu.inverse();
  for (int i = 0; i < r; ++i) dual_.push_back(element(gram_inv_.row(i).transpose()));
  product_.resize(r, static_cast<Eigen::Index>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) product_.col(static_cast<Eigen::Index>(i) * r + j) = coords(alg_.mul(basis(i), basis(j)));
}

Vec CenterAlgebra::coords(const AlgElem& a) const {
  alg_.require(a);
  Vec c(dim());
  for (int i = 0; i < dim(); ++i) c(i) = a.coeffs(basis_.classes[basis_.regular[i]].representative);
  const double residual = distance(element(c), a);
  if (residual > kAlgebraTol * std::max(1.0, max_norm(a.coeffs)))
    throw Error(ErrorKind::NotCentral, "element is not in the center (residual " + std::to_string(residual) + ")");
  return c;
}

AlgElem CenterAlgebra::element(const Vec& c) const {
  AlgElem a = alg_.zero();
  for (int i = 0; i < dim(); ++i) a.coeffs += c(i) * basis(i).coeffs;
  return a;
}

Mat CenterAlgebra::left_multiplication(const AlgElem& a) const {
  Mat m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m.col(j) = coords(alg_.mul(a, basis(j)));
  return m;
}

AlgElem CenterAlgebra::handle_element() const {
  AlgElem h = alg_.zero();
  for (int i = 0; i < dim(); ++i) h = alg_.add(h, alg_.mul(dual_[i], basis(i)));
  return h;
}

AlgElem p_omega(const DualityData& d, int omega, const AlgElem& a) {
  const auto& gg = d.graded();
  const auto& hat = gg.hat();
  const int n = gg.kernel().order();
  if (a.twist != Twist::theta_inverse || a.coeffs.size() != n)
    throw Error(ErrorKind::MixedAlgebras, "p acts on C^{theta^-1}[G]");
  const int s = gg.sign(omega);
  AlgElem out{Twist::theta_inverse, Vec::Zero(n)};
  for (int g = 0; g < n; ++g) {
    if (a.coeffs(g) == 0.0) continue;
    const int gh = gg.embed(g);
    const int target = gg.to_kernel(hat.conj(omega, s > 0 ? gh : hat.inv(gh)));
    Phase factor = refl_transgression(d.theta_hat, omega, gh);
    if (s < 0) factor /= d.lambda(gh);
    out.coeffs(target) += factor.to_complex() * a.coeffs(g);
  }
  return out;
}

AlgElem p_center(const DualityData& d, const AlgElem& a) {
  TwistedAlgebra alg(d.theta, Twist::theta_inverse);
  int witness = -1;
  if (alg.commutator_defect(a, &witness) > kAlgebraTol * std::max(1.0, max_norm(a.coeffs)))
    throw Error(ErrorKind::NotCentral, "argument fails to commute with l_" + std::to_string(witness));
  return p_omega(d, d.varsigma, a);
}

Mat p_matrix(const DualityData& d, const CenterAlgebra& z) {
  Mat m(z.dim(), z.dim());
  for (int j = 0; j < z.dim(); ++j) m.col(j) = z.coords(p_omega(d, d.varsigma, z.basis(j)));
  return m;
}

AlgElem klein_element(const DualityData& d, const CenterAlgebra& z) {
  const auto& alg = z.algebra();
  AlgElem k = alg.zero();
  for (int i = 0; i < z.dim(); ++i) k = alg.add(k, alg.mul(p_omega(d, d.varsigma, z.dual_basis()[i]), z.basis(i)));
  return k;
}

}  // namespace udw
