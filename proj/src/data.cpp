#include "udw/data.hpp"

#include "udw/error.hpp"

namespace udw {

DualityData::DualityData(TwistedCocycle theta_hat_in, UCharacter lambda_in, int varsigma_in)
    : group(theta_hat_in.cochain().graded()),
      theta_hat(std::move(theta_hat_in)),
      lambda(std::move(lambda_in)),
      varsigma(varsigma_in < 0 ? group->canonical_odd() : varsigma_in),
      theta(restrict_to_kernel(theta_hat)) {
  const auto& c = theta_hat.cochain();
  if (c.domain() != Domain::hat || !c.twisted())
    throw Error(ErrorKind::BadInput, "duality data needs a twisted cocycle on the hat group");
  if (static_cast<int>(lambda.size()) != group->hat().order())
    throw Error(ErrorKind::MixedGroups, "character and cocycle live on different groups");
  if (varsigma < 0 || varsigma >= group->hat().order() || !group->is_odd(varsigma))
    throw Error(ErrorKind::BadParameter, "chosen element " + std::to_string(varsigma) + " is not odd");
}

DualityData DualityData::with_odd(int s) const { return DualityData(theta_hat, lambda, s); }

}  // namespace udw
