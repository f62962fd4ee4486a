#pragma once

#include "udw/cohom.hpp"
#include "udw/data.hpp"
#include "udw/linalg.hpp"
#include "udw/talg.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace udw {

struct TwistedCharacter {
  Vec values;  // chi(g), kernel index order
  int dim = 0;
};

// Matrices only; rho[g] for every kernel element g.
struct TwistedRep {
  std::vector<Mat> rho;
  int dim() const { return rho.empty() ? 0 : static_cast<int>(rho.front().rows()); }
};

struct TwistedIrrep {
  TwistedCharacter character;
  TwistedRep rep;
};

struct CharacterTable {
  std::vector<TwistedCharacter> characters;
  std::uint64_t seed = 0;  // seed of the successful attempt
  int attempts = 0;
};

// <a, b>_G, the pairing of C^{theta^-1}[G] on coefficient vectors.
cplx class_pairing(const TwistedCocycle& theta, const Vec& a, const Vec& b);

// Sorted by dimension, then by the arguments of chi(g) in kernel order.
CharacterTable irreducible_characters(const TwistedCocycle& theta, std::uint64_t seed);
TwistedIrrep irrep_matrices(const TwistedCocycle& theta, const TwistedCharacter& chi, std::uint64_t seed);
std::vector<TwistedIrrep> all_irreps(const TwistedCocycle& theta, std::uint64_t seed);

// max over pairs of |rho(a) rho(b) - theta([a|b]) rho(ab)|
double twisted_law_defect(const TwistedCocycle& theta, const TwistedRep& v);
Vec character_of(const TwistedRep& v);
TwistedRep direct_sum(const TwistedRep& a, const TwistedRep& b);

// Dual vectors are rows and the dual of a map is its transpose, so ev is the identity matrix.
TwistedRep dual_rep(const DualityData& d, const TwistedRep& v);
Mat theta_component(const DualityData& d, const TwistedRep& v);
// Residual of P(Theta_V) Theta_{P(V)} = id.
double duality_coherence_defect(const DualityData& d, const TwistedRep& v);

AlgElem fs_element(const DualityData& d);
cplx fs_indicator(const DualityData& d, const TwistedCharacter& chi);
// Nearest of -1, 0, 1; IndicatorOutOfRange beyond kAlgebraTol.
int rounded_indicator(cplx value);

struct FsDecompositionReport {
  std::vector<int> indicators;
  double residual = 0.0;
};
FsDecompositionReport fs_decomposition_check(const DualityData& d, const std::vector<TwistedCharacter>& chars);

// Basis of Hom_G(V, W) as W.dim x V.dim matrices.
std::vector<Mat> equivariant_homs(const TwistedRep& v, const TwistedRep& w);
// Trace of f -> P(f) Theta_V phi on Hom_G(V, P(V)).
cplx iota_trace(const DualityData& d, const TwistedRep& v, const Mat& phi);

struct RealStructure {
  TwistedIrrep base;
  Mat psi;   // V -> P(V)
  int sign;  // +1 for theta^, -1 for delta theta^
};

// The hyperbolic fixed point on U + P(U).
struct Hyperbolic {
  TwistedIrrep base;
  TwistedRep dual;  // P(U)
  TwistedRep rep;   // U + P(U)
  Mat psi;          // [[0, I], [Theta_U, 0]]
  int indicator;    // 0 or -1
};

RealStructure hyperbolic_as_fixed_point(const Hyperbolic& h);
Hyperbolic hyperbolic(const DualityData& d, const TwistedIrrep& u, int indicator);
std::variant<RealStructure, Hyperbolic> real_structure(const DualityData& d, const TwistedIrrep& v);
// Residual of P(psi) Theta = sign psi.
double fixed_point_defect(const DualityData& d, const TwistedRep& v, const Mat& psi, int sign);

struct BilinearFormReport {
  Mat form;
  double invariance_residual = 0.0;
  double symmetry_residual = 0.0;
  // classical reading: +1 symmetric, -1 skew, 0 neither
  int symmetry = 0;
};
BilinearFormReport bilinear_form_check(const DualityData& d, const RealStructure& r);

}  // namespace udw
