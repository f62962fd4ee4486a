#pragma once

#include "udw/grp.hpp"
#include "udw/phase.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace udw {

// Cochains live either on the hat group or on its kernel.
enum class Domain { hat, kernel };

// Normalized cochain [k_n | ... | k_1] -> Phase.  On the hat group with twisted = true the
// coefficients are U(1)_pi: an odd element acts by inversion.  Degrees 0..2 are stored
// densely, degree 3 only as a closure.
class Cochain {
public:
  using Lazy3 = std::function<Phase(int, int, int)>;

  Cochain(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, int degree, std::vector<Phase> values);
  static Cochain trivial(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, int degree);
  static Cochain lazy3(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, Lazy3 eval);

  const std::shared_ptr<const GradedGroup>& graded() const { return group_; }
  const FiniteGroup& group() const;
  Domain domain() const { return domain_; }
  bool twisted() const { return twisted_; }
  int degree() const { return degree_; }
  // +1 or -1: the exponent by which k acts on coefficients.
  int action(int k) const;

  Phase operator()() const;
  Phase operator()(int k1) const;
  Phase operator()(int k2, int k1) const;
  Phase operator()(int k3, int k2, int k1) const;

  const std::vector<Phase>& values() const { return values_; }
  // Copy with one stored value replaced; normalization is not rechecked.
  Cochain with_value(std::vector<int> args, Phase value) const;

  bool same_space(const Cochain& o) const;

private:
  Cochain() = default;
  std::size_t flat(std::initializer_list<int> args) const;

  std::shared_ptr<const GradedGroup> group_;
  Domain domain_ = Domain::hat;
  bool twisted_ = false;
  int degree_ = 0;
  std::vector<Phase> values_;
  Lazy3 lazy_;
};

// A closed degree-2 cochain, checked exactly on construction.
class TwistedCocycle {
public:
  explicit TwistedCocycle(Cochain c);

  const Cochain& cochain() const { return c_; }
  const FiniteGroup& group() const { return c_.group(); }
  const GradedGroup& graded() const { return *c_.graded(); }
  Phase operator()(int k2, int k1) const { return c_(k2, k1); }

private:
  Cochain c_;
};

Cochain differential(const Cochain& c);

struct CocycleCheck {
  bool closed = true;
  std::array<int, 3> witness{-1, -1, -1};
};
CocycleCheck is_cocycle(const Cochain& c);

TwistedCocycle trivial_cocycle(std::shared_ptr<const GradedGroup> group);
TwistedCocycle delta_cocycle(std::shared_ptr<const GradedGroup> group);
TwistedCocycle restrict_to_kernel(const TwistedCocycle& theta_hat);

// tau(theta)([h]g) = theta([hgh^-1|h]) / theta([h|g]), arguments in the cocycle's own group.
Phase loop_transgression(const TwistedCocycle& theta, int h, int g);
// Orientation-twisted transgression; omega and g are hat indices, g even.
Phase refl_transgression(const TwistedCocycle& theta_hat, int omega, int g);

struct IdentityReport {
  bool ok = true;
  std::string failed;           // name of the first failing identity
  std::vector<int> witness;     // hat indices
};
// Exhaustive checks of the two conjugation identities satisfied by any twisted 2-cocycle,
// and closedness of the orientation-twisted transgression.
IdentityReport check_cocycle_identities(const TwistedCocycle& theta_hat);

TwistedCocycle multiply(const TwistedCocycle& a, const TwistedCocycle& b);
TwistedCocycle invert(const TwistedCocycle& a);
// d mu for a degree-1 cochain, as a cocycle.
TwistedCocycle coboundary(const Cochain& mu);

// Normalized 1-cochain with values k / den, k uniform.
Cochain random_one_cochain(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, std::mt19937_64& rng,
                           int den = 12);

}  // namespace udw
