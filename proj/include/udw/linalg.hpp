#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace udw {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Equality of algebra elements, axiom residuals, eigenvalue clustering.
inline constexpr double kAlgebraTol = 1e-9;
inline constexpr double kAxiomTol = 1e-8;
inline constexpr double kClusterTol = 1e-7;

double max_norm(const Mat& m);
double max_norm(const Vec& v);

// Orthonormal basis (columns) of the null space, singular values below tol * max(1, sigma_max).
Mat null_space(const Mat& m, double tol = 1e-9);

Mat kron(const Mat& a, const Mat& b);

// Seeded source of reproducible doubles independent of the standard distributions.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double symmetric() { return 2.0 * uniform() - 1.0; }
  cplx complex() { return {symmetric(), symmetric()}; }
  std::uint64_t next() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

}  // namespace udw
