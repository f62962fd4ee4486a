#pragma once

#include "udw/linalg.hpp"
#include "udw/tft.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace udw {

struct Factor {
  enum class Kind { circle, interval };
  Kind kind = Kind::circle;
  std::string from;  // interval endpoints
  std::string to;

  static Factor circle() { return {}; }
  static Factor interval(std::string v, std::string w) { return {Kind::interval, std::move(v), std::move(w)}; }
  bool operator==(const Factor& o) const = default;
};

using ObjectWord = std::vector<Factor>;
std::string to_string(const ObjectWord& word);

struct Span {
  int line = 1;
  int column = 1;
};

struct BordismTerm {
  enum class Kind { generator, compose, tensor };
  Kind kind = Kind::generator;
  std::string name;                 // generator name
  std::vector<std::string> labels;  // bracketed labels
  std::shared_ptr<const BordismTerm> lhs;
  std::shared_ptr<const BordismTerm> rhs;
  Span span;
};

using TermPtr = std::shared_ptr<const BordismTerm>;

// term := term ";" term | term "*" term | "(" term ")" | atom, with ";" looser than "*",
// both left-associative.  Raises SyntaxError or UnknownGenerator.
TermPtr parse(std::string_view text);
std::string print(const BordismTerm& t);
// Structural equality ignoring spans.
bool same_term(const BordismTerm& a, const BordismTerm& b);
const std::vector<std::string>& generator_names();

struct TermType {
  ObjectWord domain;
  ObjectWord codomain;
};

// Raises UnknownLabel or TypeMismatch.
TermType typecheck(const BordismTerm& t, const StructureAlgebra& s);
// Circle -> A in the regular-class basis, Interval(V, W) -> Hom_G(V, W) in its null-space basis,
// tensor factors ordered first-most-significant.
Mat evaluate(const BordismTerm& t, const StructureAlgebra& s);
// Max-norm distance of the two evaluations; TypeMismatch when the types differ.
double check_relation(const BordismTerm& lhs, const BordismTerm& rhs, const StructureAlgebra& s);

// The two figure relations.
inline constexpr std::string_view kKleinLhs = "(crosscap * crosscap) ; mul";
inline constexpr std::string_view kKleinRhs = "unit ; comul ; (reflect * id) ; mul";
std::string cardy_lhs(const std::string& v);
std::string cardy_rhs(const std::string& v);

}  // namespace udw
