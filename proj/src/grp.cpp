#include "udw/grp.hpp"

#include "udw/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace udw {

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

void check_permutation(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v])
      throw Error(ErrorKind::BadInput, "generator is not a bijection");
    seen[v] = 1;
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley(const Table& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::BadTable, "empty table");
  FiniteGroup g;
  g.n_ = n;
  g.cayley_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorKind::BadTable, "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::BadTable, "entry out of range at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      g.cayley_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }

  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(c, a) == a && g.mul(a, c) == a;
    if (ok) e = c;
  }
  if (e < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity");
  g.identity_ = e;

  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == e && g.mul(b, a) == e) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::NotAssociative, "triple " + triple_str(a, b, c));

  // With associativity, identity and inverses, rows and columns are permutations.
  return g;
}

int FiniteGroup::pow(int a, int k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = identity_;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Table FiniteGroup::cayley() const {
  Table t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<int> cls(n_, -1);
  std::vector<std::vector<int>> out;
  for (int g = 0; g < n_; ++g) {
    if (cls[g] >= 0) continue;
    std::vector<int> members;
    for (int h = 0; h < n_; ++h) {
      const int c = conj(h, g);
      if (cls[c] < 0) {
        cls[c] = static_cast<int>(out.size());
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<int> FiniteGroup::centralizer(int g) const {
  std::vector<int> out;
  for (int h = 0; h < n_; ++h)
    if (mul(h, g) == mul(g, h)) out.push_back(h);
  return out;
}

PermutationClosure close_permutations(const std::vector<Permutation>& generators, int cap) {
  if (generators.empty()) throw Error(ErrorKind::BadInput, "no generators");
  const std::size_t m = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != m) throw Error(ErrorKind::BadInput, "generators act on different point sets");
    check_permutation(p);
  }
  Permutation id(m);
  std::iota(id.begin(), id.end(), 0);

  std::vector<Permutation> elems{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& s : generators) {
      Permutation x = compose(elems[head], s);
      if (index.count(x)) continue;
      if (static_cast<int>(elems.size()) >= cap)
        throw Error(ErrorKind::ClosureTooLarge, "closure exceeds " + std::to_string(cap) + " elements");
      index.emplace(x, static_cast<int>(elems.size()));
      elems.push_back(std::move(x));
    }
  }

  const int n = static_cast<int>(elems.size());
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return {FiniteGroup::from_cayley(t), std::move(elems)};
}

FiniteGroup group_from_permutations(const std::vector<Permutation>& generators, int cap) {
  return close_permutations(generators, cap).group;
}

GradedGroup::GradedGroup(FiniteGroup hat, std::vector<int> signs) : hat_(std::move(hat)), signs_(std::move(signs)) {
  const int n = hat_.order();
  if (static_cast<int>(signs_.size()) != n)
    throw Error(ErrorKind::BadInput, "grading has " + std::to_string(signs_.size()) + " entries, group has " + std::to_string(n));
  for (int s : signs_)
    if (s != 1 && s != -1) throw Error(ErrorKind::BadInput, "grading entries must be +1 or -1");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (signs_[hat_.mul(a, b)] != signs_[a] * signs_[b])
        throw Error(ErrorKind::NotHomomorphism, "pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  if (std::none_of(signs_.begin(), signs_.end(), [](int s) { return s < 0; }))
    throw Error(ErrorKind::NotSurjective, "no odd element");

  to_kernel_.assign(n, -1);
  for (int w = 0; w < n; ++w) {
    if (signs_[w] > 0) {
      to_kernel_[w] = static_cast<int>(embed_.size());
      embed_.push_back(w);
    }
  }
  const int m = static_cast<int>(embed_.size());
  Table t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = to_kernel_[hat_.mul(embed_[a], embed_[b])];
  kernel_ = FiniteGroup::from_cayley(t);
}

std::vector<int> GradedGroup::odd_elements() const {
  std::vector<int> out;
  for (int w = 0; w < hat_.order(); ++w)
    if (is_odd(w)) out.push_back(w);
  return out;
}

int GradedGroup::canonical_odd() const {
  for (int w = 0; w < hat_.order(); ++w)
    if (is_odd(w)) return w;
  return -1;
}

std::string GradedGroup::name(int w) const {
  if (static_cast<std::size_t>(w) < names_.size()) return names_[w];
  return std::to_string(w);
}

void GradedGroup::set_names(std::vector<std::string> names) {
  if (!names.empty() && static_cast<int>(names.size()) != hat_.order())
    throw Error(ErrorKind::BadInput, "name table has wrong length");
  names_ = std::move(names);
}

UCharacter::UCharacter(const FiniteGroup& group, std::vector<Phase> values) : values_(std::move(values)) {
  const int n = group.order();
  if (static_cast<int>(values_.size()) != n) throw Error(ErrorKind::BadInput, "character has wrong length");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (values_[group.mul(a, b)] != values_[a] * values_[b])
        throw Error(ErrorKind::NotHomomorphism,
                    "character not multiplicative at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

UCharacter UCharacter::trivial(const FiniteGroup& group) {
  UCharacter c;
  c.values_.assign(group.order(), Phase::one());
  return c;
}

UCharacter UCharacter::grading(const GradedGroup& group) {
  std::vector<Phase> v(group.hat().order());
  for (int w = 0; w < group.hat().order(); ++w) v[w] = group.is_odd(w) ? Phase::minus_one() : Phase::one();
  return UCharacter(group.hat(), std::move(v));
}

UCharacter UCharacter::operator*(const UCharacter& o) const {
  UCharacter c;
  c.values_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) c.values_[i] = values_[i] * o.values_[i];
  return c;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "cyclic order must be positive");
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_cayley(t);
}

// r^k s^e at index k + n e.
FiniteGroup dihedral_group(int n) {
  if (n < 1) throw Error(ErrorKind::BadParameter, "dihedral parameter must be positive");
  Table t(2 * n, std::vector<int>(2 * n));
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) {
      const int a = x % n, e = x / n, b = y % n, f = y / n;
      const int k = ((a + (e ? -b : b)) % n + n) % n;
      t[x][y] = k + n * ((e + f) % 2);
    }
  }
  return FiniteGroup::from_cayley(t);
}

// i^a j^e at index a + 4 e.
FiniteGroup quaternion_group() {
  Table t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int a = x % 4, e = x / 4, b = y % 4, f = y / 4;
      const int k = ((a + (e ? -b : b) + (e && f ? 2 : 0)) % 4 + 4) % 4;
      t[x][y] = k + 4 * ((e + f) % 2);
    }
  }
  return FiniteGroup::from_cayley(t);
}

FiniteGroup symmetric_group_s3() { return group_from_permutations({{1, 2, 0}, {1, 0, 2}}); }

FiniteGroup alternating_group_a4() { return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}); }

FiniteGroup klein_four_group() { return direct_product(cyclic_group(2), cyclic_group(2)); }

// (a, b) at index a + |A| b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  Table t(na * nb, std::vector<int>(na * nb));
  for (int x = 0; x < na * nb; ++x)
    for (int y = 0; y < na * nb; ++y) t[x][y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  return FiniteGroup::from_cayley(t);
}

namespace {

int require_n(const PresetParams& p, int min, const std::string& what) {
  if (p.n < min) throw Error(ErrorKind::BadParameter, what + " needs n >= " + std::to_string(min));
  return p.n;
}

std::vector<std::string> power_names(const std::string& base, int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back(k == 0 ? "e" : (k == 1 ? base : base + "^" + std::to_string(k)));
  return out;
}

Preset finish(GradedGroup g, std::string description, std::vector<std::string> names = {}) {
  g.set_names(std::move(names));
  Preset p;
  auto ptr = std::make_shared<const GradedGroup>(std::move(g));
  p.characters.push_back({"trivial", UCharacter::trivial(ptr->hat())});
  p.characters.push_back({"pi", UCharacter::grading(*ptr)});
  p.group = std::move(ptr);
  p.description = std::move(description);
  return p;
}

}  // namespace

Preset preset(std::string_view name, const PresetParams& params) {
  if (name == "product_with_C2") {
    FiniteGroup base;
    std::string label = params.base.empty() ? "trivial" : params.base;
    if (label == "trivial") base = cyclic_group(1);
    else if (label == "cyclic") base = cyclic_group(require_n(params, 1, "cyclic base"));
    else if (label == "dihedral") base = dihedral_group(require_n(params, 1, "dihedral base"));
    else if (label == "S3") base = symmetric_group_s3();
    else if (label == "A4") base = alternating_group_a4();
    else if (label == "Q8") base = quaternion_group();
    else if (label == "klein") base = klein_four_group();
    else throw Error(ErrorKind::BadParameter, "unknown base '" + label + "'");
    if (label == "cyclic" || label == "dihedral") label += ":" + std::to_string(params.n);
    const int m = base.order();
    std::vector<int> signs(2 * m);
    for (int w = 0; w < 2 * m; ++w) signs[w] = w < m ? 1 : -1;
    std::vector<std::string> names;
    if (label.rfind("cyclic", 0) == 0) {
      auto r = power_names("r", m);
      for (int s = 0; s < 2; ++s)
        for (int k = 0; k < m; ++k) names.push_back(s == 0 ? r[k] : (k == 0 ? "s" : r[k] + "s"));
    }
    return finish(GradedGroup(direct_product(base, cyclic_group(2)), std::move(signs)), label + " x C2", std::move(names));
  }
  if (name == "cyclic_double") {
    const int n = require_n(params, 1, "cyclic_double");
    std::vector<int> signs(2 * n);
    for (int w = 0; w < 2 * n; ++w) signs[w] = w % 2 == 0 ? 1 : -1;
    Preset p = finish(GradedGroup(cyclic_group(2 * n), std::move(signs)),
                      "C" + std::to_string(2 * n) + " over C" + std::to_string(n), power_names("t", 2 * n));
    if (n % 2 == 1) p.note = "n is odd, so this graded group is isomorphic to the product C" + std::to_string(n) + " x C2";
    return p;
  }
  if (name == "dihedral") {
    const int n = require_n(params, 1, "dihedral");
    std::vector<int> signs(2 * n);
    for (int w = 0; w < 2 * n; ++w) signs[w] = w < n ? 1 : -1;
    auto r = power_names("r", n);
    std::vector<std::string> names = r;
    for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "s" : r[k] + "s");
    return finish(GradedGroup(dihedral_group(n), std::move(signs)), "D" + std::to_string(2 * n) + " over C" + std::to_string(n),
                  std::move(names));
  }
  if (name == "quaternion") {
    std::vector<int> signs{1, 1, 1, 1, -1, -1, -1, -1};
    return finish(GradedGroup(quaternion_group(), std::move(signs)), "Q8 over C4",
                  {"1", "i", "-1", "-i", "j", "ij", "-j", "-ij"});
  }
  if (name == "S4_over_A4") {
    auto closure = close_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}});
    std::vector<int> signs;
    std::vector<std::string> names;
    for (const auto& p : closure.elements) {
      int inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
      signs.push_back(inversions % 2 ? -1 : 1);
      std::string s = "[";
      for (int v : p) s += std::to_string(v);
      names.push_back(s + "]");
    }
    return finish(GradedGroup(closure.group, std::move(signs)), "S4 over A4", std::move(names));
  }
  throw Error(ErrorKind::UnknownPreset, "'" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"product_with_C2", "cyclic_double", "dihedral", "quaternion", "S4_over_A4"};
}

}  // namespace udw
