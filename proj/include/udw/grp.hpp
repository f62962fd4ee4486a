#pragma once

#include "udw/phase.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace udw {

// Elements are dense indices 0..n-1.
using Table = std::vector<std::vector<int>>;
using Permutation = std::vector<int>;

class FiniteGroup {
public:
  FiniteGroup() = default;

  // Validates the table exhaustively.
  static FiniteGroup from_cayley(const Table& table);

  int order() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return cayley_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  // h g h^-1
  int conj(int h, int g) const { return mul(mul(h, g), inv(h)); }
  int pow(int a, int k) const;
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  Table cayley() const;
  // Classes sorted by smallest member, members ascending.
  std::vector<std::vector<int>> conjugacy_classes() const;
  std::vector<int> centralizer(int g) const;

  bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && cayley_ == o.cayley_; }

private:
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> cayley_;
  std::vector<int> inverse_;
};

inline FiniteGroup group_from_cayley(const Table& table) { return FiniteGroup::from_cayley(table); }

struct PermutationClosure {
  FiniteGroup group;
  std::vector<Permutation> elements;
};

// Breadth-first closure under right multiplication by the generators, in generator order.
// Composition is (p q)(x) = p(q(x)); element 0 is the identity.
PermutationClosure close_permutations(const std::vector<Permutation>& generators, int cap = 10000);
FiniteGroup group_from_permutations(const std::vector<Permutation>& generators, int cap = 10000);

class GradedGroup {
public:
  // Throws NotHomomorphism / NotSurjective.
  GradedGroup(FiniteGroup hat, std::vector<int> signs);

  const FiniteGroup& hat() const { return hat_; }
  const FiniteGroup& kernel() const { return kernel_; }
  int sign(int w) const { return signs_[w]; }
  bool is_odd(int w) const { return signs_[w] < 0; }
  const std::vector<int>& signs() const { return signs_; }

  // Kernel index -> hat index.
  int embed(int g) const { return embed_[g]; }
  // Hat index -> kernel index, or -1 for odd elements.
  int to_kernel(int w) const { return to_kernel_[w]; }

  std::vector<int> odd_elements() const;
  // Minimal-index odd element.
  int canonical_odd() const;

  const std::vector<std::string>& names() const { return names_; }
  std::string name(int w) const;
  void set_names(std::vector<std::string> names);

  bool operator==(const GradedGroup& o) const { return hat_ == o.hat_ && signs_ == o.signs_; }

private:
  FiniteGroup hat_;
  std::vector<int> signs_;
  FiniteGroup kernel_;
  std::vector<int> embed_;
  std::vector<int> to_kernel_;
  std::vector<std::string> names_;
};

inline GradedGroup make_graded(FiniteGroup hat, std::vector<int> signs) {
  return GradedGroup(std::move(hat), std::move(signs));
}

class UCharacter {
public:
  UCharacter() = default;
  // Validates multiplicativity.
  UCharacter(const FiniteGroup& group, std::vector<Phase> values);

  static UCharacter trivial(const FiniteGroup& group);
  // lambda = pi, i.e. -1 on odd elements.
  static UCharacter grading(const GradedGroup& group);

  const Phase& operator()(int w) const { return values_[w]; }
  const std::vector<Phase>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  UCharacter operator*(const UCharacter& o) const;

private:
  std::vector<Phase> values_;
};

struct PresetParams {
  int n = 0;
  std::string base;
};

struct NamedCharacter {
  std::string name;
  UCharacter lambda;
};

struct Preset {
  std::shared_ptr<const GradedGroup> group;
  std::vector<NamedCharacter> characters;  // "trivial" and "pi"
  std::string description;
  std::string note;  // e.g. cyclic_double with odd n
};

// Names: product_with_C2 (base: trivial, cyclic, dihedral, S3, A4, Q8, klein), cyclic_double,
// dihedral, quaternion, S4_over_A4.
Preset preset(std::string_view name, const PresetParams& params = {});
std::vector<std::string> preset_names();

// Ungraded building blocks.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group_s3();
FiniteGroup alternating_group_a4();
FiniteGroup klein_four_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace udw
