#pragma once

#include "udw/data.hpp"
#include "udw/linalg.hpp"
#include "udw/reps.hpp"
#include "udw/talg.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace udw {

inline constexpr std::uint64_t kDefaultSeed = 0xD02D;

enum class ObjectKind { real, hyperbolic };

// A homotopy fixed point used as a boundary label.
struct BoundaryObject {
  std::string label;  // "V0", "V1", ... in list order
  ObjectKind kind = ObjectKind::real;
  int irrep = 0;     // base irreducible
  int partner = -1;  // irreducible isomorphic to P(base)
  int indicator = 0;
  TwistedRep rep;
  Mat psi;
  Mat psi_inv;
};

class StructureAlgebra {
public:
  StructureAlgebra(DualityData data, std::uint64_t seed = kDefaultSeed);

  const DualityData& data() const { return data_; }
  const CenterAlgebra& closed() const { return center_; }
  const TwistedAlgebra& algebra() const { return center_.algebra(); }
  std::uint64_t seed() const { return seed_; }
  int group_order() const { return algebra().dim(); }

  const AlgElem& crosscap() const { return q_; }
  // For tests that perturb the crosscap state.
  void set_crosscap(AlgElem q) { q_ = std::move(q); }
  const Mat& involution() const { return p_; }
  AlgElem reflect(const AlgElem& a) const;

  const std::vector<TwistedIrrep>& irreps() const { return irreps_; }
  const std::vector<int>& indicators() const { return indicators_; }
  const std::vector<BoundaryObject>& objects() const { return objects_; }
  // -1 if absent.
  int find_object(std::string_view label) const;
  // LabelMismatch if absent.
  int object_index(std::string_view label) const;

  // Basis of Hom_G(V_a, V_b), orthonormal for the Frobenius inner product.
  const std::vector<Mat>& hom_basis(int a, int b) const { return homs_[static_cast<std::size_t>(a) * objects_.size() + b]; }
  Vec hom_coords(int a, int b, const Mat& f) const;
  Mat hom_element(int a, int b, const Vec& coords) const;
  // psi^j in Hom(W, V) with <psi^j psi_i>_V = delta, psi_i the basis of Hom(V, W).
  std::vector<Mat> dual_hom_basis(int a, int b) const;

  // Bulk-boundary and boundary-bulk maps; the rep-level versions take any twisted rep.
  Mat bulk_boundary(const TwistedRep& v, const AlgElem& a) const;
  AlgElem boundary_bulk(const TwistedRep& v, const Mat& phi) const;
  Mat bulk_boundary(int object, const AlgElem& a) const { return bulk_boundary(objects_[object].rep, a); }
  AlgElem boundary_bulk(int object, const Mat& phi) const { return boundary_bulk(objects_[object].rep, phi); }
  cplx cy_trace(const Mat& phi) const { return phi.trace() / static_cast<double>(group_order()); }
  // psi_V^-1 phi^T psi_W : W -> V for phi : V -> W.
  Mat halftwist(int a, int b, const Mat& phi) const;

private:
  DualityData data_;
  std::uint64_t seed_;
  CenterAlgebra center_;
  AlgElem q_;
  Mat p_;
  std::vector<TwistedIrrep> irreps_;
  std::vector<int> indicators_;
  std::vector<BoundaryObject> objects_;
  std::vector<std::vector<Mat>> homs_;
};

inline StructureAlgebra build_structure_algebra(DualityData data, std::uint64_t seed = kDefaultSeed) {
  return StructureAlgebra(std::move(data), seed);
}

struct AxiomResult {
  std::string name;
  double residual = 0.0;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool passed(double tol = kAxiomTol) const;
  double max_residual() const;
  const AxiomResult* find(std::string_view name) const;
};

AxiomReport check_oriented_axioms(const StructureAlgebra& s, std::uint64_t seed = kDefaultSeed, int samples = 3);
AxiomReport check_unoriented_axioms(const StructureAlgebra& s, std::uint64_t seed = kDefaultSeed, int samples = 3);

// Random element of Hom_G(V_a, V_b).
Mat random_hom(const StructureAlgebra& s, int a, int b, Rng& rng);

struct BoundaryLabel {
  std::string label;
  std::optional<Mat> morphism;  // identity when absent
};

struct Surface {
  int genus = 0;
  int crosscaps = 0;
  std::vector<BoundaryLabel> boundary;

  bool orientable() const { return crosscaps == 0; }
  int euler() const { return 2 - 2 * genus - crosscaps - static_cast<int>(boundary.size()); }
};

using Rational = boost::rational<std::int64_t>;

struct PartitionResult {
  cplx value;
  cplx state_sum;
  cplx characters;
  std::optional<Rational> oracle;
};

// Both routes; RouteMismatch if they disagree beyond kAxiomTol * max(1, |value|).
PartitionResult partition_closed(const StructureAlgebra& s, const Surface& surface);
PartitionResult partition_with_boundary(const StructureAlgebra& s, const Surface& surface);
PartitionResult partition(const StructureAlgebra& s, const Surface& surface);

// Trivial theta^ and lambda with a central odd involution, so G^ = G x C2.
bool is_untwisted_product(const DualityData& d);

// (1/|G|) #{x_1^2 ... x_k^2 [a_1,b_1] ... [a_g,b_g] = e}, by enumeration.
Rational mednykh_oracle(const FiniteGroup& g, int crosscaps, int genus, std::uint64_t budget = 100000000ULL);

}  // namespace udw
