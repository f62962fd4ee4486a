#pragma once

#include "udw/cohom.hpp"
#include "udw/data.hpp"
#include "udw/linalg.hpp"

#include <vector>

namespace udw {

// Which cocycle twists the product: l_a l_b = theta^{+-1}([a|b]) l_{ab}.
enum class Twist { theta, theta_inverse };

struct AlgElem {
  Twist twist = Twist::theta_inverse;
  Vec coeffs;  // coefficient of l_g, kernel index order
};

class TwistedAlgebra {
public:
  TwistedAlgebra(TwistedCocycle theta, Twist twist);

  const FiniteGroup& group() const { return theta_.group(); }
  const TwistedCocycle& theta() const { return theta_; }
  Twist twist() const { return twist_; }
  int dim() const { return group().order(); }

  Phase structure(int a, int b) const;
  cplx structure_c(int a, int b) const { return table_[static_cast<std::size_t>(a) * dim() + b]; }

  AlgElem zero() const;
  AlgElem unit() const;
  AlgElem basis(int g) const;
  AlgElem element(Vec coeffs) const;

  // Raises MixedAlgebras on tag or size mismatch.
  void require(const AlgElem& a) const;
  AlgElem mul(const AlgElem& a, const AlgElem& b) const;
  AlgElem add(const AlgElem& a, const AlgElem& b) const;
  AlgElem scale(cplx s, const AlgElem& a) const;
  cplx trace0(const AlgElem& a) const;
  // (1/|G|) sum_g c([g^-1|g]) a_{g^-1} b_g.
  cplx pairing(const AlgElem& a, const AlgElem& b) const;
  // Largest commutator coefficient against all basis elements; witness receives the worst l_h.
  double commutator_defect(const AlgElem& a, int* witness = nullptr) const;

private:
  TwistedCocycle theta_;
  Twist twist_;
  std::vector<cplx> table_;
};

inline AlgElem alg_mul(const TwistedAlgebra& alg, const AlgElem& a, const AlgElem& b) { return alg.mul(a, b); }
double distance(const AlgElem& a, const AlgElem& b);

struct ClassInfo {
  std::vector<int> members;
  int representative = 0;  // minimal index
  bool regular = true;
};

// Exact test theta([g|h]) = theta([h|g]) for g in the class and h in its centralizer.
std::vector<ClassInfo> theta_regular_classes(const TwistedCocycle& theta);

struct RegularClassBasis {
  std::vector<ClassInfo> classes;  // all classes
  std::vector<int> regular;        // indices into classes
  std::vector<AlgElem> basis;      // one l_O per regular class
  std::vector<std::vector<Phase>> phases;  // exact coefficients of l_O on members
};

RegularClassBasis center_basis(const TwistedAlgebra& alg);

// The commutative Frobenius algebra Z(C^{theta^-1}[G]) in the regular-class basis.
class CenterAlgebra {
public:
  explicit CenterAlgebra(TwistedAlgebra alg);

  const TwistedAlgebra& algebra() const { return alg_; }
  const RegularClassBasis& classes() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.basis.size()); }
  const AlgElem& basis(int i) const { return basis_.basis[i]; }

  // Coordinates of a central element; NotCentral if a is not in the span.
  Vec coords(const AlgElem& a) const;
  AlgElem element(const Vec& coords) const;

  const Mat& gram() const { return gram_; }
  const Mat& gram_inverse() const { return gram_inv_; }
  const std::vector<AlgElem>& dual_basis() const { return dual_; }
  // dim x dim^2 matrix of the product, column i * dim + j holds basis(i) basis(j).
  const Mat& product_matrix() const { return product_; }
  Mat left_multiplication(const AlgElem& a) const;

  // sum_i a^i a_i
  AlgElem handle_element() const;

private:
  TwistedAlgebra alg_;
  RegularClassBasis basis_;
  Mat gram_;
  Mat gram_inv_;
  std::vector<AlgElem> dual_;
  Mat product_;
};

// p^omega on C^{theta^-1}[G].
AlgElem p_omega(const DualityData& d, int omega, const AlgElem& a);
// p^varsigma on a central element; NotCentral otherwise.
AlgElem p_center(const DualityData& d, const AlgElem& a);
// Matrix of p on the center in the regular-class basis.
Mat p_matrix(const DualityData& d, const CenterAlgebra& z);

inline AlgElem handle_element(const CenterAlgebra& z) { return z.handle_element(); }
// sum_i p(a^i) a_i
AlgElem klein_element(const DualityData& d, const CenterAlgebra& z);

}  // namespace udw
