#include "udw/tft.hpp"

#include "udw/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace udw {

namespace {

cplx frobenius(const Mat& a, const Mat& b) { return (a.adjoint() * b).trace(); }

std::string obj_pair(const StructureAlgebra& s, int a, int b) {
  return s.objects()[a].label + "," + s.objects()[b].label;
}

void note(AxiomReport& report, const std::string& name, double residual, const std::string& witness) {
  for (auto& r : report.results) {
    if (r.name == name) {
      if (residual > r.residual) {
        r.residual = residual;
        r.witness = witness;
      }
      return;
    }
  }
  report.results.push_back({name, residual, witness});
}

cplx ipow(cplx x, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

StructureAlgebra::StructureAlgebra(DualityData data, std::uint64_t seed)
    : data_(std::move(data)), seed_(seed), center_(TwistedAlgebra(data_.theta, Twist::theta_inverse)) {
  q_ = fs_element(data_);
  center_.coords(q_);
  p_ = p_matrix(data_, center_);
  irreps_ = all_irreps(data_.theta, seed_);
  for (const auto& v : irreps_) indicators_.push_back(rounded_indicator(fs_indicator(data_, v.character)));

  std::vector<bool> used(irreps_.size(), false);
  for (std::size_t i = 0; i < irreps_.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    BoundaryObject obj;
    obj.label = "V" + std::to_string(objects_.size());
    obj.irrep = static_cast<int>(i);
    obj.indicator = indicators_[i];
    if (obj.indicator == 1) {
      auto rs = std::get<RealStructure>(real_structure(data_, irreps_[i]));
      obj.kind = ObjectKind::real;
      obj.partner = static_cast<int>(i);
      obj.rep = rs.base.rep;
      obj.psi = rs.psi;
    } else {
      auto h = hyperbolic(data_, irreps_[i], obj.indicator);
      const Vec dual_chi = character_of(h.dual);
      for (std::size_t j = 0; j < irreps_.size(); ++j)
        if (max_norm(Vec(irreps_[j].character.values - dual_chi)) < kAxiomTol) obj.partner = static_cast<int>(j);
      if (obj.partner < 0) throw Error(ErrorKind::IndicatorMismatch, "dual of irreducible " + std::to_string(i) + " not found");
      if (obj.indicator == 0) used[obj.partner] = true;
      obj.kind = ObjectKind::hyperbolic;
      obj.rep = h.rep;
      obj.psi = h.psi;
    }
    obj.psi_inv = obj.psi.inverse();
    objects_.push_back(std::move(obj));
  }

  for (const auto& a : objects_)
    for (const auto& b : objects_) homs_.push_back(equivariant_homs(a.rep, b.rep));
}

AlgElem StructureAlgebra::reflect(const AlgElem& a) const { return p_omega(data_, data_.varsigma, a); }

int StructureAlgebra::find_object(std::string_view label) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i].label == label) return static_cast<int>(i);
  return -1;
}

int StructureAlgebra::object_index(std::string_view label) const {
  const int i = find_object(label);
  if (i < 0) throw Error(ErrorKind::LabelMismatch, "'" + std::string(label) + "' is not a boundary object");
  return i;
}

Vec StructureAlgebra::hom_coords(int a, int b, const Mat& f) const {
  const auto& basis = hom_basis(a, b);
  Vec c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) c(static_cast<Eigen::Index>(i)) = frobenius(basis[i], f);
  return c;
}

Mat StructureAlgebra::hom_element(int a, int b, const Vec& coords) const {
  Mat f = Mat::Zero(objects_[b].rep.dim(), objects_[a].rep.dim());
  const auto& basis = hom_basis(a, b);
  for (std::size_t i = 0; i < basis.size(); ++i) f += coords(static_cast<Eigen::Index>(i)) * basis[i];
  return f;
}

std::vector<Mat> StructureAlgebra::dual_hom_basis(int a, int b) const {
  const auto& fwd = hom_basis(a, b);
  const auto& back = hom_basis(b, a);
  const auto k = static_cast<Eigen::Index>(fwd.size());
  Mat m(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c) m(r, c) = cy_trace(back[r] * fwd[c]);
  const Mat x = m.inverse();
  std::vector<Mat> out;
  for (Eigen::Index j = 0; j < k; ++j) {
    Mat d = Mat::Zero(back.empty() ? 0 : back[0].rows(), back.empty() ? 0 : back[0].cols());
    for (Eigen::Index r = 0; r < k; ++r) d += x(j, r) * back[r];
    out.push_back(std::move(d));
  }
  return out;
}

Mat StructureAlgebra::bulk_boundary(const TwistedRep& v, const AlgElem& a) const {
  algebra().require(a);
  const auto& g = data_.kernel();
  Mat out = Mat::Zero(v.dim(), v.dim());
  for (int x = 0; x < g.order(); ++x) {
    if (a.coeffs(x) == 0.0) continue;
    out += a.coeffs(x) * data_.theta(x, g.inv(x)).inverse().to_complex() * v.rho[g.inv(x)];
  }
  return out;
}

AlgElem StructureAlgebra::boundary_bulk(const TwistedRep& v, const Mat& phi) const {
  AlgElem out = algebra().zero();
  for (int x = 0; x < group_order(); ++x) out.coeffs(x) = (phi * v.rho[x]).trace();
  return out;
}

Mat StructureAlgebra::halftwist(int a, int b, const Mat& phi) const {
  return objects_[a].psi_inv * phi.transpose() * objects_[b].psi;
}

bool AxiomReport::passed(double tol) const {
  return std::all_of(results.begin(), results.end(), [&](const AxiomResult& r) { return r.residual < tol; });
}

double AxiomReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : results) m = std::max(m, r.residual);
  return m;
}

const AxiomResult* AxiomReport::find(std::string_view name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

Mat random_hom(const StructureAlgebra& s, int a, int b, Rng& rng) {
  const auto& basis = s.hom_basis(a, b);
  Vec c(static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = rng.complex();
  return s.hom_element(a, b, c);
}

AxiomReport check_oriented_axioms(const StructureAlgebra& s, std::uint64_t seed, int samples) {
  AxiomReport report;
  Rng rng(seed);
  const auto& z = s.closed();
  const auto& alg = s.algebra();
  const int r = z.dim();
  const int nobj = static_cast<int>(s.objects().size());

  // Commutative Frobenius algebra with unit.
  for (int i = 0; i < r; ++i) {
    note(report, "closed_unit", distance(alg.mul(alg.unit(), z.basis(i)), z.basis(i)), "a" + std::to_string(i));
    for (int j = 0; j < r; ++j) {
      note(report, "closed_commutative", distance(alg.mul(z.basis(i), z.basis(j)), alg.mul(z.basis(j), z.basis(i))),
           "a" + std::to_string(i) + ",a" + std::to_string(j));
    }
  }
  note(report, "closed_pairing_nondegenerate", z.gram().fullPivLu().rank() == r ? 0.0 : 1.0, "");

  for (int v = 0; v < nobj; ++v) {
    const auto& label = s.objects()[v].label;
    const int dv = s.objects()[v].rep.dim();
    // (i) tau_V is a unital algebra map.
    note(report, "tau_unital", max_norm(Mat(s.bulk_boundary(v, alg.unit()) - Mat::Identity(dv, dv))), label);
    for (int i = 0; i < r; ++i) {
      const Mat ti = s.bulk_boundary(v, z.basis(i));
      for (int j = 0; j < r; ++j) {
        const Mat lhs = s.bulk_boundary(v, alg.mul(z.basis(i), z.basis(j)));
        note(report, "tau_multiplicative", max_norm(Mat(lhs - ti * s.bulk_boundary(v, z.basis(j)))), label);
      }
    }
    for (int t = 0; t < samples; ++t) {
      const Mat phi = random_hom(s, v, v, rng);
      const AlgElem up = s.boundary_bulk(v, phi);
      int witness = -1;
      note(report, "tau_upper_central", alg.commutator_defect(up, &witness), label);
      // (iii) adjointness.
      for (int i = 0; i < r; ++i) {
        const cplx lhs = s.cy_trace(phi * s.bulk_boundary(v, z.basis(i)));
        const cplx rhs = alg.trace0(alg.mul(up, z.basis(i)));
        note(report, "adjointness", std::abs(lhs - rhs), label);
      }
    }
    for (int w = 0; w < nobj; ++w) {
      const auto pair = obj_pair(s, v, w);
      const auto& homs = s.hom_basis(v, w);
      // (ii) centrality: tau_W(a) f = f tau_V(a).
      for (const auto& f : homs)
        for (int i = 0; i < r; ++i)
          note(report, "tau_central", max_norm(Mat(s.bulk_boundary(w, z.basis(i)) * f - f * s.bulk_boundary(v, z.basis(i)))),
               pair);
      // Calabi-Yau symmetry of the boundary traces.
      for (int t = 0; t < samples; ++t) {
        const Mat f = random_hom(s, v, w, rng);
        const Mat g = random_hom(s, w, v, rng);
        note(report, "cy_symmetric", std::abs(s.cy_trace(g * f) - s.cy_trace(f * g)), pair);
      }
      // Baggy oriented Cardy: tr(f -> psi f phi) on Hom(V, W).
      for (int t = 0; t < samples; ++t) {
        const Mat phi = random_hom(s, v, v, rng);
        const Mat psi = random_hom(s, w, w, rng);
        cplx tr = 0.0;
        for (const auto& f : homs) tr += frobenius(f, psi * f * phi);
        const cplx rhs = alg.trace0(alg.mul(s.boundary_bulk(w, psi), s.boundary_bulk(v, phi)));
        note(report, "baggy_cardy", std::abs(tr - rhs), pair);
      }
    }
  }
  return report;
}

AxiomReport check_unoriented_axioms(const StructureAlgebra& s, std::uint64_t seed, int samples) {
  AxiomReport report;
  Rng rng(seed ^ 0x5bd1e995ULL);
  const auto& d = s.data();
  const auto& z = s.closed();
  const auto& alg = s.algebra();
  const int r = z.dim();
  const Mat& p = s.involution();
  const AlgElem& q = s.crosscap();
  const int nobj = static_cast<int>(s.objects().size());

  // p: isometric involutive algebra map of A.
  note(report, "p_involution", max_norm(Mat(p * p - Mat::Identity(r, r))), "");
  note(report, "p_unit", distance(s.reflect(alg.unit()), alg.unit()), "");
  for (int i = 0; i < r; ++i) {
    const auto a = "a" + std::to_string(i);
    note(report, "p_isometry", std::abs(alg.trace0(s.reflect(z.basis(i))) - alg.trace0(z.basis(i))), a);
    for (int j = 0; j < r; ++j) {
      const AlgElem lhs = s.reflect(alg.mul(z.basis(i), z.basis(j)));
      note(report, "p_algebra_map", distance(lhs, alg.mul(s.reflect(z.basis(i)), s.reflect(z.basis(j)))), a);
    }
    const AlgElem qa = alg.mul(q, z.basis(i));
    note(report, "p_fixes_Qa", distance(s.reflect(qa), qa), a);
  }
  // Klein condition and its trace.
  const AlgElem q2 = alg.mul(q, q);
  note(report, "klein", distance(q2, klein_element(d, z)), "");
  note(report, "witten_trace", std::abs(alg.trace0(q2) - p.trace()), "");

  for (int v = 0; v < nobj; ++v) {
    const auto& label = s.objects()[v].label;
    const int dv = s.objects()[v].rep.dim();
    const auto& basis = s.hom_basis(v, v);
    const auto dual = s.dual_hom_basis(v, v);
    // Unoriented Cardy: tau_V(Q) = sum_i psi^i P(psi_i).
    Mat rhs = Mat::Zero(dv, dv);
    for (std::size_t i = 0; i < basis.size(); ++i) rhs += dual[i] * s.halftwist(v, v, basis[i]);
    note(report, "unoriented_cardy", max_norm(Mat(s.bulk_boundary(v, q) - rhs)), label);
    for (int t = 0; t < samples; ++t) {
      const Mat phi = random_hom(s, v, v, rng);
      // Baggy unoriented Cardy: <tau^V(phi), Q>_0 = tr(f -> P(f) phi).
      cplx tr = 0.0;
      for (const auto& f : basis) tr += frobenius(f, s.halftwist(v, v, f) * phi);
      note(report, "baggy_unoriented_cardy", std::abs(alg.trace0(alg.mul(s.boundary_bulk(v, phi), q)) - tr), label);
      note(report, "halftwist_trace", std::abs(s.cy_trace(s.halftwist(v, v, phi)) - s.cy_trace(phi)), label);
      note(report, "coherence_tau_upper",
           distance(s.reflect(s.boundary_bulk(v, phi)), s.boundary_bulk(v, s.halftwist(v, v, phi))), label);
    }
    for (int i = 0; i < r; ++i)
      note(report, "coherence_tau_lower",
           max_norm(Mat(s.halftwist(v, v, s.bulk_boundary(v, z.basis(i))) - s.bulk_boundary(v, s.reflect(z.basis(i))))),
           label);
    for (int w = 0; w < nobj; ++w) {
      const auto pair = obj_pair(s, v, w);
      for (int t = 0; t < samples; ++t) {
        const Mat f = random_hom(s, v, w, rng);
        note(report, "halftwist_involution", max_norm(Mat(s.halftwist(w, v, s.halftwist(v, w, f)) - f)), pair);
        for (int u = 0; u < nobj; ++u) {
          const Mat g = random_hom(s, w, u, rng);
          const Mat lhs = s.halftwist(v, u, g * f);
          note(report, "halftwist_contravariant", max_norm(Mat(lhs - s.halftwist(v, w, f) * s.halftwist(w, u, g))), pair);
        }
      }
    }
  }

  // Rep-level statements for every irreducible.
  for (std::size_t i = 0; i < s.irreps().size(); ++i) {
    const auto label = "irrep" + std::to_string(i);
    const auto& v = s.irreps()[i].rep;
    const TwistedRep pv = dual_rep(d, v);
    note(report, "duality_coherence", duality_coherence_defect(d, v), label);
    for (int j = 0; j < r; ++j) {
      const Mat lhs = s.bulk_boundary(v, z.basis(j)).transpose();
      note(report, "coherence_rep_lower", max_norm(Mat(lhs - s.bulk_boundary(pv, s.reflect(z.basis(j))))), label);
    }
    for (int t = 0; t < samples; ++t) {
      const Mat phi = rng.complex() * Mat::Identity(v.dim(), v.dim());
      note(report, "coherence_rep_upper", distance(s.reflect(s.boundary_bulk(v, phi)), s.boundary_bulk(pv, phi.transpose())),
           label);
      const cplx rhs = class_pairing(d.theta, s.boundary_bulk(v, phi).coeffs, q.coeffs);
      note(report, "lefschetz", std::abs(iota_trace(d, v, phi) - rhs), label);
    }
  }
  return report;
}

namespace {

void require_surface(const Surface& surface) {
  if (surface.genus < 0 || surface.crosscaps < 0)
    throw Error(ErrorKind::InvalidSurface, "genus and crosscap counts must be non-negative");
}

Mat label_morphism(const StructureAlgebra& s, const BoundaryLabel& b, int& object) {
  object = s.object_index(b.label);
  const int dv = s.objects()[object].rep.dim();
  if (!b.morphism) return Mat::Identity(dv, dv);
  const Mat& m = *b.morphism;
  if (m.rows() != dv || m.cols() != dv) throw Error(ErrorKind::LabelMismatch, "morphism on " + b.label + " has wrong size");
  return m;
}

PartitionResult evaluate_routes(const StructureAlgebra& s, const Surface& surface) {
  require_surface(surface);
  const auto& alg = s.algebra();
  const int n = s.group_order();
  const int k = surface.crosscaps, g = surface.genus;

  std::vector<AlgElem> boundary;
  for (const auto& b : surface.boundary) {
    int object = -1;
    const Mat phi = label_morphism(s, b, object);
    boundary.push_back(s.boundary_bulk(object, phi));
  }

  // State sum: <Q^k H^g prod tau^V(phi)>_0.
  const AlgElem h = s.closed().handle_element();
  AlgElem x = alg.unit();
  for (int i = 0; i < k; ++i) x = alg.mul(x, s.crosscap());
  for (int i = 0; i < g; ++i) x = alg.mul(x, h);
  for (const auto& b : boundary) x = alg.mul(x, b);
  PartitionResult result;
  result.state_sum = alg.trace0(x);

  // Idempotents e_U = (dim U / |G|) chi_U: Q = sum ind_U (|G|/d) e_U, H = sum (|G|/d)^2 e_U.
  cplx total = 0.0;
  for (std::size_t u = 0; u < s.irreps().size(); ++u) {
    const auto& chi = s.irreps()[u].character;
    const double w = static_cast<double>(chi.dim) / n;
    const Vec e = w * chi.values;
    cplx term = ipow(static_cast<double>(s.indicators()[u]), k) * std::pow(1.0 / w, k + 2 * g) * w * w;
    for (const auto& b : boundary) term *= class_pairing(s.data().theta, b.coeffs, e) / (w * w);
    total += term;
  }
  result.characters = total;
  result.value = total;
  const double scale = std::max(1.0, std::abs(total));
  if (std::abs(result.state_sum - result.characters) > kAxiomTol * scale)
    throw Error(ErrorKind::RouteMismatch, "state sum and character formula disagree");
  return result;
}

}  // namespace

PartitionResult partition_closed(const StructureAlgebra& s, const Surface& surface) {
  if (!surface.boundary.empty()) throw Error(ErrorKind::InvalidSurface, "closed surface expected");
  PartitionResult result = evaluate_routes(s, surface);
  const auto& d = s.data();
  bool eligible = surface.crosscaps > 0 ? is_untwisted_product(d) : true;
  if (surface.crosscaps == 0)
    for (const auto& v : d.theta.cochain().values()) eligible = eligible && v.is_one();
  if (eligible) {
    try {
      result.oracle = mednykh_oracle(d.kernel(), surface.crosscaps, surface.genus);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
    }
  }
  if (result.oracle) {
    const double o = static_cast<double>(result.oracle->numerator()) / static_cast<double>(result.oracle->denominator());
    if (std::abs(o - result.value) > kAxiomTol * std::max(1.0, std::abs(o)))
      throw Error(ErrorKind::RouteMismatch, "character formula disagrees with the homomorphism count");
  }
  return result;
}

PartitionResult partition_with_boundary(const StructureAlgebra& s, const Surface& surface) {
  if (surface.boundary.empty()) throw Error(ErrorKind::InvalidSurface, "surface has no boundary");
  return evaluate_routes(s, surface);
}

PartitionResult partition(const StructureAlgebra& s, const Surface& surface) {
  return surface.boundary.empty() ? partition_closed(s, surface) : partition_with_boundary(s, surface);
}

bool is_untwisted_product(const DualityData& d) {
  for (const auto& v : d.theta_hat.cochain().values())
    if (!v.is_one()) return false;
  for (const auto& v : d.lambda.values())
    if (!v.is_one()) return false;
  const auto& hat = d.hat();
  for (int z : d.graded().odd_elements()) {
    if (hat.mul(z, z) != hat.identity()) continue;
    bool central = true;
    for (int w = 0; w < hat.order() && central; ++w) central = hat.mul(z, w) == hat.mul(w, z);
    if (central) return true;
  }
  return false;
}

Rational mednykh_oracle(const FiniteGroup& g, int crosscaps, int genus, std::uint64_t budget) {
  if (crosscaps < 0 || genus < 0) throw Error(ErrorKind::InvalidSurface, "negative counts");
  const int n = g.order();
  const int slots = crosscaps + 2 * genus;
  std::uint64_t tuples = 1;
  for (int i = 0; i < slots; ++i) {
    tuples *= static_cast<std::uint64_t>(n);
    if (tuples > budget) throw Error(ErrorKind::BudgetExceeded, std::to_string(n) + "^" + std::to_string(slots) + " tuples");
  }
  std::int64_t count = 0;
  // Depth-first over crosscap squares, then commutator pairs.
  std::function<void(int, int)> walk = [&](int depth, int prod) {
    if (depth == crosscaps + genus) {
      count += prod == g.identity();
      return;
    }
    if (depth < crosscaps) {
      for (int x = 0; x < n; ++x) walk(depth + 1, g.mul(prod, g.mul(x, x)));
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) walk(depth + 1, g.mul(prod, g.commutator(a, b)));
    }
  };
  walk(0, g.identity());
  return Rational(count, n);
}

}  // namespace udw
