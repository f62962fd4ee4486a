#pragma once

#include "udw/cohom.hpp"
#include "udw/grp.hpp"

#include <memory>

namespace udw {

// (G^, theta^, lambda) with a chosen odd element and the restricted cocycle theta on G.
struct DualityData {
  DualityData(TwistedCocycle theta_hat, UCharacter lambda, int varsigma = -1);

  std::shared_ptr<const GradedGroup> group;
  TwistedCocycle theta_hat;
  UCharacter lambda;
  int varsigma;  // hat index, odd
  TwistedCocycle theta;

  const GradedGroup& graded() const { return *group; }
  const FiniteGroup& hat() const { return group->hat(); }
  const FiniteGroup& kernel() const { return group->kernel(); }

  DualityData with_odd(int s) const;
};

}  // namespace udw
