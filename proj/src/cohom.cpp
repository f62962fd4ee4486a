#include "udw/cohom.hpp"

#include "udw/error.hpp"

namespace udw {

namespace {

std::size_t dense_size(int n, int degree) {
  std::size_t s = 1;
  for (int i = 0; i < degree; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

}  // namespace

Cochain::Cochain(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, int degree,
                 std::vector<Phase> values)
    : group_(std::move(group)), domain_(domain), twisted_(twisted), degree_(degree), values_(std::move(values)) {
  if (degree_ < 0 || degree_ > 2) throw Error(ErrorKind::DegreeUnsupported, "dense cochains have degree 0..2");
  if (domain_ == Domain::kernel) twisted_ = false;
  const int n = this->group().order();
  if (values_.size() != dense_size(n, degree_))
    throw Error(ErrorKind::BadInput, "cochain table has " + std::to_string(values_.size()) + " entries");
  const int e = this->group().identity();
  if (degree_ == 1 && !values_[e].is_one()) throw Error(ErrorKind::NotNormalized, "value at the identity");
  if (degree_ == 2) {
    for (int a = 0; a < n; ++a) {
      if (!(*this)(e, a).is_one() || !(*this)(a, e).is_one())
        throw Error(ErrorKind::NotNormalized, "value at a pair involving the identity and " + std::to_string(a));
    }
  }
}

Cochain Cochain::trivial(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, int degree) {
  const int n = domain == Domain::hat ? group->hat().order() : group->kernel().order();
  if (degree == 3) return lazy3(std::move(group), domain, twisted, [](int, int, int) { return Phase::one(); });
  return Cochain(std::move(group), domain, twisted, degree, std::vector<Phase>(dense_size(n, degree)));
}

Cochain Cochain::lazy3(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, Lazy3 eval) {
  Cochain c;
  c.group_ = std::move(group);
  c.domain_ = domain;
  c.twisted_ = domain == Domain::hat && twisted;
  c.degree_ = 3;
  c.lazy_ = std::move(eval);
  return c;
}

const FiniteGroup& Cochain::group() const { return domain_ == Domain::hat ? group_->hat() : group_->kernel(); }

int Cochain::action(int k) const { return twisted_ ? group_->sign(k) : 1; }

std::size_t Cochain::flat(std::initializer_list<int> args) const {
  std::size_t idx = 0;
  const auto n = static_cast<std::size_t>(group().order());
  for (int a : args) idx = idx * n + static_cast<std::size_t>(a);
  return idx;
}

Phase Cochain::operator()() const { return values_.at(0); }
Phase Cochain::operator()(int k1) const { return values_[flat({k1})]; }
Phase Cochain::operator()(int k2, int k1) const { return values_[flat({k2, k1})]; }
Phase Cochain::operator()(int k3, int k2, int k1) const { return lazy_(k3, k2, k1); }

Cochain Cochain::with_value(std::vector<int> args, Phase value) const {
  if (static_cast<int>(args.size()) != degree_ || degree_ > 2) throw Error(ErrorKind::BadInput, "argument count");
  Cochain c = *this;
  std::size_t idx = 0;
  for (int a : args) idx = idx * group().order() + a;
  c.values_[idx] = value;
  return c;
}

bool Cochain::same_space(const Cochain& o) const {
  return degree_ == o.degree_ && domain_ == o.domain_ && twisted_ == o.twisted_ &&
         (group_ == o.group_ || *group_ == *o.group_);
}

TwistedCocycle::TwistedCocycle(Cochain c) : c_(std::move(c)) {
  if (c_.degree() != 2) throw Error(ErrorKind::DegreeUnsupported, "a 2-cocycle must have degree 2");
  auto check = is_cocycle(c_);
  if (!check.closed) {
    const auto& w = check.witness;
    throw Error(ErrorKind::NotCocycle, "cocycle condition fails at [" + std::to_string(w[0]) + "|" + std::to_string(w[1]) +
                                           "|" + std::to_string(w[2]) + "]");
  }
}

Cochain differential(const Cochain& c) {
  const auto& g = c.group();
  const int n = g.order();
  switch (c.degree()) {
    case 0: {
      std::vector<Phase> v(n);
      for (int k = 0; k < n; ++k) v[k] = c().pow(c.action(k)) / c();
      return Cochain(c.graded(), c.domain(), c.twisted(), 1, std::move(v));
    }
    case 1: {
      std::vector<Phase> v(static_cast<std::size_t>(n) * n);
      for (int k2 = 0; k2 < n; ++k2)
        for (int k1 = 0; k1 < n; ++k1)
          v[static_cast<std::size_t>(k2) * n + k1] = c(k1).pow(c.action(k2)) / c(g.mul(k2, k1)) * c(k2);
      return Cochain(c.graded(), c.domain(), c.twisted(), 2, std::move(v));
    }
    case 2: {
      Cochain copy = c;
      return Cochain::lazy3(c.graded(), c.domain(), c.twisted(), [copy](int k3, int k2, int k1) {
        const auto& g = copy.group();
        return copy(k2, k1).pow(copy.action(k3)) * copy(k3, g.mul(k2, k1)) / copy(g.mul(k3, k2), k1) / copy(k3, k2);
      });
    }
    default:
      throw Error(ErrorKind::DegreeUnsupported, "differential of a degree " + std::to_string(c.degree()) + " cochain");
  }
}

CocycleCheck is_cocycle(const Cochain& c) {
  if (c.degree() != 2) throw Error(ErrorKind::DegreeUnsupported, "is_cocycle expects degree 2");
  const auto d = differential(c);
  const int n = c.group().order();
  for (int k3 = 0; k3 < n; ++k3)
    for (int k2 = 0; k2 < n; ++k2)
      for (int k1 = 0; k1 < n; ++k1)
        if (!d(k3, k2, k1).is_one()) return {false, {k3, k2, k1}};
  return {};
}

TwistedCocycle trivial_cocycle(std::shared_ptr<const GradedGroup> group) {
  return TwistedCocycle(Cochain::trivial(std::move(group), Domain::hat, true, 2));
}

TwistedCocycle delta_cocycle(std::shared_ptr<const GradedGroup> group) {
  const int n = group->hat().order();
  std::vector<Phase> v(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (group->is_odd(a) && group->is_odd(b)) v[static_cast<std::size_t>(a) * n + b] = Phase::minus_one();
  return TwistedCocycle(Cochain(std::move(group), Domain::hat, true, 2, std::move(v)));
}

TwistedCocycle restrict_to_kernel(const TwistedCocycle& theta_hat) {
  const auto& c = theta_hat.cochain();
  if (c.domain() == Domain::kernel) return theta_hat;
  const auto& gg = *c.graded();
  const int m = gg.kernel().order();
  std::vector<Phase> v(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) v[static_cast<std::size_t>(a) * m + b] = c(gg.embed(a), gg.embed(b));
  return TwistedCocycle(Cochain(c.graded(), Domain::kernel, false, 2, std::move(v)));
}

Phase loop_transgression(const TwistedCocycle& theta, int h, int g) {
  const auto& grp = theta.group();
  return theta(grp.conj(h, g), h) / theta(h, g);
}

Phase refl_transgression(const TwistedCocycle& theta_hat, int omega, int g) {
  const auto& gg = theta_hat.graded();
  const auto& hat = gg.hat();
  if (theta_hat.cochain().domain() != Domain::hat) throw Error(ErrorKind::BadInput, "refl_transgression needs a hat cocycle");
  if (gg.is_odd(g)) throw Error(ErrorKind::BadInput, "refl_transgression needs an even element");
  const int s = gg.sign(omega);
  const int gs = s > 0 ? g : hat.inv(g);
  Phase out = theta_hat(hat.conj(omega, gs), omega) / theta_hat(omega, gs);
  if (s < 0) out /= theta_hat(hat.inv(g), g);
  return out;
}

IdentityReport check_cocycle_identities(const TwistedCocycle& theta_hat) {
  const auto& gg = theta_hat.graded();
  const auto& hat = gg.hat();
  const int n = hat.order();
  const auto& t = theta_hat;
  auto tr = [&](int w, int g) { return t(hat.conj(w, g), w) / t(w, g); };

  for (int w = 0; w < n; ++w) {
    for (int g2 = 0; g2 < n; ++g2) {
      if (gg.is_odd(g2)) continue;
      for (int g1 = 0; g1 < n; ++g1) {
        if (gg.is_odd(g1)) continue;
        const Phase lhs = t(hat.conj(w, g2), hat.conj(w, g1)) / t(g2, g1).pow(gg.sign(w));
        const Phase rhs = tr(w, g2) * tr(w, g1) / tr(w, hat.mul(g2, g1));
        if (lhs != rhs) return {false, "2cocycleKey", {g1, g2, w}};
      }
    }
  }
  for (int w = 0; w < n; ++w) {
    for (int s = 0; s < n; ++s) {
      if (!gg.is_odd(s)) continue;
      const int c = hat.conj(w, s);
      const int s2 = hat.mul(s, s);
      const Phase lhs = t(c, c) / t(s, s).pow(gg.sign(w));
      const Phase rhs = t(w, s2) / t(hat.conj(w, s2), w);
      if (lhs != rhs) return {false, "oddConj", {w, s}};
    }
  }
  // Closedness of the orientation-twisted transgression on the Real conjugation action.
  auto act = [&](int w, int g) { return hat.conj(w, gg.sign(w) > 0 ? g : hat.inv(g)); };
  for (int w2 = 0; w2 < n; ++w2) {
    for (int w1 = 0; w1 < n; ++w1) {
      for (int g = 0; g < n; ++g) {
        if (gg.is_odd(g)) continue;
        const Phase lhs = refl_transgression(t, w2, act(w1, g)) * refl_transgression(t, w1, g);
        const Phase rhs = refl_transgression(t, hat.mul(w2, w1), g);
        if (lhs != rhs) return {false, "reflClosed", {w2, w1, g}};
      }
    }
  }
  return {};
}

namespace {

void require_same(const Cochain& a, const Cochain& b) {
  if (!a.same_space(b)) throw Error(ErrorKind::MixedGroups, "operands live on different groups or coefficient systems");
}

}  // namespace

TwistedCocycle multiply(const TwistedCocycle& a, const TwistedCocycle& b) {
  require_same(a.cochain(), b.cochain());
  auto v = a.cochain().values();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.cochain().values()[i];
  const auto& c = a.cochain();
  return TwistedCocycle(Cochain(c.graded(), c.domain(), c.twisted(), 2, std::move(v)));
}

TwistedCocycle invert(const TwistedCocycle& a) {
  auto v = a.cochain().values();
  for (auto& p : v) p = p.inverse();
  const auto& c = a.cochain();
  return TwistedCocycle(Cochain(c.graded(), c.domain(), c.twisted(), 2, std::move(v)));
}

TwistedCocycle coboundary(const Cochain& mu) {
  if (mu.degree() != 1) throw Error(ErrorKind::DegreeUnsupported, "coboundary expects a 1-cochain");
  return TwistedCocycle(differential(mu));
}

Cochain random_one_cochain(std::shared_ptr<const GradedGroup> group, Domain domain, bool twisted, std::mt19937_64& rng,
                           int den) {
  const int n = domain == Domain::hat ? group->hat().order() : group->kernel().order();
  const int e = domain == Domain::hat ? group->hat().identity() : group->kernel().identity();
  std::vector<Phase> v(n);
  for (int k = 0; k < n; ++k)
    if (k != e) v[k] = Phase(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den)), den);
  return Cochain(std::move(group), domain, twisted, 1, std::move(v));
}

}  // namespace udw
