#include "udw/bordism.hpp"

#include "udw/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace udw {

namespace {

struct GeneratorInfo {
  std::vector<int> arities;  // allowed label counts
};

const std::map<std::string, GeneratorInfo, std::less<>>& generators() {
  static const std::map<std::string, GeneratorInfo, std::less<>> table{
      {"unit", {{0}}},      {"counit", {{0}}},     {"mul", {{0}}},      {"comul", {{0}}},
      {"crosscap", {{0}}},  {"reflect", {{0}}},    {"id", {{0, 1, 2}}}, {"oid", {{1}}},
      {"omul", {{3}}},      {"otrace", {{1}}},     {"ocopair", {{2}}},  {"zip", {{1}}},
      {"cozip", {{1}}},     {"halftwist", {{2}}},
  };
  return table;
}

std::string where(const Span& s) { return "line " + std::to_string(s.line) + ", column " + std::to_string(s.column); }

struct Token {
  enum class Kind { ident, lbracket, rbracket, comma, semicolon, star, lparen, rparen, end };
  Kind kind;
  std::string text;
  Span span;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  Span pos;
  std::size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    const Span start = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ident += text[i];
        advance(text[i]);
        ++i;
      }
      out.push_back({Token::Kind::ident, std::move(ident), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '[': kind = Token::Kind::lbracket; break;
      case ']': kind = Token::Kind::rbracket; break;
      case ',': kind = Token::Kind::comma; break;
      case ';': kind = Token::Kind::semicolon; break;
      case '*': kind = Token::Kind::star; break;
      case '(': kind = Token::Kind::lparen; break;
      case ')': kind = Token::Kind::rparen; break;
      default:
        throw Error(ErrorKind::SyntaxError, where(start) + ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), start});
    advance(c);
    ++i;
  }
  out.push_back({Token::Kind::end, "", pos});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  TermPtr run() {
    auto t = sequence();
    if (peek().kind != Token::Kind::end) fail("expected ';', '*' or end of input");
    return t;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw Error(ErrorKind::SyntaxError,
                where(t.span) + ": " + msg + (t.kind == Token::Kind::end ? " (found end of input)" : " (found '" + t.text + "')"));
  }

  static TermPtr binary(BordismTerm::Kind kind, TermPtr lhs, TermPtr rhs, Span span) {
    auto t = std::make_shared<BordismTerm>();
    t->kind = kind;
    t->lhs = std::move(lhs);
    t->rhs = std::move(rhs);
    t->span = span;
    return t;
  }

  TermPtr sequence() {
    auto t = tensor();
    while (peek().kind == Token::Kind::semicolon) {
      const Span s = take().span;
      t = binary(BordismTerm::Kind::compose, t, tensor(), s);
    }
    return t;
  }

  TermPtr tensor() {
    auto t = primary();
    while (peek().kind == Token::Kind::star) {
      const Span s = take().span;
      t = binary(BordismTerm::Kind::tensor, t, primary(), s);
    }
    return t;
  }

  TermPtr primary() {
    if (peek().kind == Token::Kind::lparen) {
      take();
      auto t = sequence();
      if (peek().kind != Token::Kind::rparen) fail("expected ')'");
      take();
      return t;
    }
    if (peek().kind != Token::Kind::ident) fail("expected a generator or '('");
    const Token& name = take();
    auto t = std::make_shared<BordismTerm>();
    t->name = name.text;
    t->span = name.span;
    const auto it = generators().find(name.text);
    if (it == generators().end())
      throw Error(ErrorKind::UnknownGenerator, where(name.span) + ": '" + name.text + "'");
    if (peek().kind == Token::Kind::lbracket) {
      take();
      while (true) {
        if (peek().kind != Token::Kind::ident) fail("expected a label");
        t->labels.push_back(take().text);
        if (peek().kind == Token::Kind::comma) {
          take();
          continue;
        }
        if (peek().kind != Token::Kind::rbracket) fail("expected ',' or ']'");
        take();
        break;
      }
    }
    const auto& arities = it->second.arities;
    if (std::find(arities.begin(), arities.end(), static_cast<int>(t->labels.size())) == arities.end())
      throw Error(ErrorKind::SyntaxError,
                  where(name.span) + ": '" + name.text + "' does not take " + std::to_string(t->labels.size()) + " labels");
    if (name.text == "id" && t->labels.size() == 1 && t->labels[0] != "C")
      throw Error(ErrorKind::SyntaxError, where(name.span) + ": single-label identity must be id[C]");
    return t;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string print_prec(const BordismTerm& t, int context) {
  // context: 0 top or right of nothing, 1 operand of '*', 2 right operand of ';'/'*' of same kind
  switch (t.kind) {
    case BordismTerm::Kind::generator: {
      std::string s = t.name;
      if (!t.labels.empty()) {
        s += "[";
        for (std::size_t i = 0; i < t.labels.size(); ++i) s += (i ? "," : "") + t.labels[i];
        s += "]";
      }
      return s;
    }
    case BordismTerm::Kind::compose: {
      std::string s = print_prec(*t.lhs, 0) + " ; " + print_prec(*t.rhs, 2);
      return context == 0 ? s : "(" + s + ")";
    }
    case BordismTerm::Kind::tensor: {
      std::string s = print_prec(*t.lhs, 1) + " * " + print_prec(*t.rhs, 3);
      return context == 3 ? "(" + s + ")" : s;
    }
  }
  return {};
}

// Resolved object indices for the labels of a generator.
std::vector<int> resolve(const BordismTerm& t, const StructureAlgebra& s) {
  std::vector<int> out;
  if (t.name == "id") return out;
  for (const auto& l : t.labels) {
    const int i = s.find_object(l);
    if (i < 0) throw Error(ErrorKind::UnknownLabel, where(t.span) + ": '" + l + "' is not a boundary object");
    out.push_back(i);
  }
  return out;
}

TermType generator_type(const BordismTerm& t, const StructureAlgebra& s) {
  resolve(t, s);
  const auto& n = t.name;
  const auto& l = t.labels;
  const Factor c = Factor::circle();
  auto iv = [](const std::string& a, const std::string& b) { return Factor::interval(a, b); };
  if (n == "unit" || n == "crosscap") return {{}, {c}};
  if (n == "counit") return {{c}, {}};
  if (n == "mul") return {{c, c}, {c}};
  if (n == "comul") return {{c}, {c, c}};
  if (n == "reflect") return {{c}, {c}};
  if (n == "id") {
    if (l.size() == 2) {
      for (const auto& x : l)
        if (s.find_object(x) < 0) throw Error(ErrorKind::UnknownLabel, where(t.span) + ": '" + x + "' is not a boundary object");
      return {{iv(l[0], l[1])}, {iv(l[0], l[1])}};
    }
    return {{c}, {c}};
  }
  if (n == "oid") return {{}, {iv(l[0], l[0])}};
  if (n == "omul") return {{iv(l[0], l[1]), iv(l[1], l[2])}, {iv(l[0], l[2])}};
  if (n == "otrace") return {{iv(l[0], l[0])}, {}};
  if (n == "ocopair") return {{}, {iv(l[0], l[1]), iv(l[1], l[0])}};
  if (n == "zip") return {{c}, {iv(l[0], l[0])}};
  if (n == "cozip") return {{iv(l[0], l[0])}, {c}};
  if (n == "halftwist") return {{iv(l[0], l[1])}, {iv(l[1], l[0])}};
  throw Error(ErrorKind::UnknownGenerator, where(t.span) + ": '" + n + "'");
}

Eigen::Index factor_dim(const Factor& f, const StructureAlgebra& s) {
  if (f.kind == Factor::Kind::circle) return s.closed().dim();
  return static_cast<Eigen::Index>(s.hom_basis(s.object_index(f.from), s.object_index(f.to)).size());
}

Eigen::Index word_dim(const ObjectWord& w, const StructureAlgebra& s) {
  Eigen::Index d = 1;
  for (const auto& f : w) d *= factor_dim(f, s);
  return d;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Mat evaluate_generator(const BordismTerm& t, const StructureAlgebra& s) {
  const auto idx = resolve(t, s);
  const auto& z = s.closed();
  const auto& alg = s.algebra();
  const int r = z.dim();
  const auto& n = t.name;
  auto homdim = [&](int a, int b) { return static_cast<Eigen::Index>(s.hom_basis(a, b).size()); };

  if (n == "unit") return z.coords(alg.unit());
  if (n == "crosscap") return z.coords(s.crosscap());
  if (n == "counit") {
    Mat m(1, r);
    for (int i = 0; i < r; ++i) m(0, i) = alg.trace0(z.basis(i));
    return m;
  }
  if (n == "mul") return z.product_matrix();
  if (n == "comul") {
    // Delta(a) = sum_i (a a_i) (x) a^i
    Mat m = Mat::Zero(static_cast<Eigen::Index>(r) * r, r);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i)
        m.col(j) += kron_vec(z.coords(alg.mul(z.basis(j), z.basis(i))), z.coords(z.dual_basis()[i]));
    return m;
  }
  if (n == "reflect") return s.involution();
  if (n == "id") {
    if (t.labels.size() == 2) {
      const auto d = homdim(s.object_index(t.labels[0]), s.object_index(t.labels[1]));
      return Mat::Identity(d, d);
    }
    return Mat::Identity(r, r);
  }
  if (n == "oid") {
    const int v = idx[0];
    const int dv = s.objects()[v].rep.dim();
    return s.hom_coords(v, v, Mat::Identity(dv, dv));
  }
  if (n == "omul") {
    const int u = idx[0], v = idx[1], w = idx[2];
    const auto& f = s.hom_basis(u, v);
    const auto& g = s.hom_basis(v, w);
    Mat m(homdim(u, w), static_cast<Eigen::Index>(f.size() * g.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        m.col(static_cast<Eigen::Index>(i * g.size() + j)) = s.hom_coords(u, w, g[j] * f[i]);
    return m;
  }
  if (n == "otrace") {
    const int v = idx[0];
    const auto& f = s.hom_basis(v, v);
    Mat m(1, static_cast<Eigen::Index>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) m(0, static_cast<Eigen::Index>(i)) = s.cy_trace(f[i]);
    return m;
  }
  if (n == "ocopair") {
    const int v = idx[0], w = idx[1];
    const auto dual = s.dual_hom_basis(v, w);
    const auto k = homdim(v, w);
    Vec out = Vec::Zero(k * homdim(w, v));
    for (Eigen::Index i = 0; i < k; ++i) out += kron_vec(Vec::Unit(k, i), s.hom_coords(w, v, dual[i]));
    return out;
  }
  if (n == "zip") {
    const int v = idx[0];
    Mat m(homdim(v, v), r);
    for (int i = 0; i < r; ++i) m.col(i) = s.hom_coords(v, v, s.bulk_boundary(v, z.basis(i)));
    return m;
  }
  if (n == "cozip") {
    const int v = idx[0];
    const auto& f = s.hom_basis(v, v);
    Mat m(r, static_cast<Eigen::Index>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = z.coords(s.boundary_bulk(v, f[i]));
    return m;
  }
  if (n == "halftwist") {
    const int v = idx[0], w = idx[1];
    const auto& f = s.hom_basis(v, w);
    Mat m(homdim(w, v), static_cast<Eigen::Index>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i)
      m.col(static_cast<Eigen::Index>(i)) = s.hom_coords(w, v, s.halftwist(v, w, f[i]));
    return m;
  }
  throw Error(ErrorKind::UnknownGenerator, where(t.span) + ": '" + n + "'");
}

}  // namespace

std::string to_string(const ObjectWord& word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ", ";
    s += word[i].kind == Factor::Kind::circle ? "C" : "I(" + word[i].from + "," + word[i].to + ")";
  }
  return s + "]";
}

TermPtr parse(std::string_view text) { return Parser(lex(text)).run(); }

std::string print(const BordismTerm& t) { return print_prec(t, 0); }

bool same_term(const BordismTerm& a, const BordismTerm& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == BordismTerm::Kind::generator) return a.name == b.name && a.labels == b.labels;
  return same_term(*a.lhs, *b.lhs) && same_term(*a.rhs, *b.rhs);
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : generators()) v.push_back(k);
    return v;
  }();
  return names;
}

TermType typecheck(const BordismTerm& t, const StructureAlgebra& s) {
  switch (t.kind) {
    case BordismTerm::Kind::generator:
      return generator_type(t, s);
    case BordismTerm::Kind::compose: {
      auto a = typecheck(*t.lhs, s);
      auto b = typecheck(*t.rhs, s);
      if (a.codomain != b.domain)
        throw Error(ErrorKind::TypeMismatch, where(t.span) + ": codomain " + to_string(a.codomain) +
                                                 " does not match domain " + to_string(b.domain));
      return {a.domain, b.codomain};
    }
    case BordismTerm::Kind::tensor: {
      auto a = typecheck(*t.lhs, s);
      auto b = typecheck(*t.rhs, s);
      a.domain.insert(a.domain.end(), b.domain.begin(), b.domain.end());
      a.codomain.insert(a.codomain.end(), b.codomain.begin(), b.codomain.end());
      return a;
    }
  }
  return {};
}

Mat evaluate(const BordismTerm& t, const StructureAlgebra& s) {
  switch (t.kind) {
    case BordismTerm::Kind::generator: {
      const auto type = generator_type(t, s);
      Mat m = evaluate_generator(t, s);
      if (m.rows() != word_dim(type.codomain, s) || m.cols() != word_dim(type.domain, s))
        throw Error(ErrorKind::TypeMismatch, where(t.span) + ": internal shape error");
      return m;
    }
    case BordismTerm::Kind::compose: {
      typecheck(t, s);
      return evaluate(*t.rhs, s) * evaluate(*t.lhs, s);
    }
    case BordismTerm::Kind::tensor:
      return kron(evaluate(*t.lhs, s), evaluate(*t.rhs, s));
  }
  return {};
}

double check_relation(const BordismTerm& lhs, const BordismTerm& rhs, const StructureAlgebra& s) {
  const auto a = typecheck(lhs, s);
  const auto b = typecheck(rhs, s);
  if (a.domain != b.domain || a.codomain != b.codomain)
    throw Error(ErrorKind::TypeMismatch, "relation sides have types " + to_string(a.domain) + " -> " + to_string(a.codomain) +
                                             " and " + to_string(b.domain) + " -> " + to_string(b.codomain));
  const Mat diff = evaluate(lhs, s) - evaluate(rhs, s);
  return max_norm(diff);
}

std::string cardy_lhs(const std::string& v) { return "crosscap ; zip[" + v + "]"; }

std::string cardy_rhs(const std::string& v) {
  return "ocopair[" + v + "," + v + "] ; (halftwist[" + v + "," + v + "] * id[" + v + "," + v + "]) ; omul[" + v + "," + v +
         "," + v + "]";
}

}  // namespace udw
