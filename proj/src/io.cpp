#include "udw/io.hpp"

#include "udw/error.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace udw {

namespace {

template <class T>
T get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw Error(ErrorKind::BadInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, std::string("field '") + key + "': " + e.what());
  }
}

Phase phase_field(const nlohmann::json& entry) {
  if (!entry.contains("q")) throw Error(ErrorKind::BadInput, "entry without 'q'");
  const auto& q = entry.at("q");
  if (q.is_string()) return Phase::parse(q.get<std::string>());
  if (q.is_number_integer()) return Phase(q.get<std::int64_t>(), 1);
  throw Error(ErrorKind::BadInput, "'q' must be a string \"a/b\"");
}

int index_in(int value, int n, const std::string& what) {
  if (value < 0 || value >= n) throw Error(ErrorKind::BadInput, what + " index " + std::to_string(value) + " out of range");
  return value;
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::BadInput, "cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::BadInput, "'" + path + "': " + e.what());
  }
}

std::shared_ptr<const GradedGroup> load_group(const nlohmann::json& j) {
  std::vector<std::string> names;
  if (j.contains("names")) names = get<std::vector<std::string>>(j, "names");
  if (j.contains("cayley")) {
    const auto table = get<Table>(j, "cayley");
    if (j.contains("order") && get<int>(j, "order") != static_cast<int>(table.size()))
      throw Error(ErrorKind::BadInput, "'order' does not match the table size");
    auto g = std::make_shared<GradedGroup>(FiniteGroup::from_cayley(table), get<std::vector<int>>(j, "grading"));
    g->set_names(std::move(names));
    return g;
  }
  if (j.contains("permutation_generators")) {
    const auto gens = get<std::vector<Permutation>>(j, "permutation_generators");
    const auto gen_signs = get<std::vector<int>>(j, "generator_signs");
    if (gens.size() != gen_signs.size()) throw Error(ErrorKind::BadInput, "one sign per generator required");
    auto closure = close_permutations(gens);
    const auto& grp = closure.group;
    std::vector<int> signs(grp.order(), 0);
    signs[0] = 1;
    // Breadth-first propagation along right multiplication by generators.
    std::vector<int> gen_index;
    for (const auto& p : gens)
      gen_index.push_back(static_cast<int>(std::find(closure.elements.begin(), closure.elements.end(), p) - closure.elements.begin()));
    for (int x = 0; x < grp.order(); ++x) {
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = grp.mul(x, gen_index[i]);
        const int s = signs[x] * gen_signs[i];
        if (signs[y] == 0) signs[y] = s;
        else if (signs[y] != s) throw Error(ErrorKind::NotHomomorphism, "generator signs are inconsistent");
      }
    }
    auto g = std::make_shared<GradedGroup>(grp, signs);
    g->set_names(std::move(names));
    return g;
  }
  throw Error(ErrorKind::BadInput, "group needs 'cayley' or 'permutation_generators'");
}

TwistedCocycle load_cocycle(const nlohmann::json& j, std::shared_ptr<const GradedGroup> group) {
  if (j.contains("twisted") && !get<bool>(j, "twisted"))
    throw Error(ErrorKind::BadInput, "the cocycle on the hat group must be twisted");
  const int n = group->hat().order();
  std::vector<Phase> v(static_cast<std::size_t>(n) * n);
  if (j.contains("values")) {
    for (const auto& entry : j.at("values")) {
      const auto pair = get<std::vector<int>>(entry, "pair");
      if (pair.size() != 2) throw Error(ErrorKind::BadInput, "'pair' needs two entries");
      v[static_cast<std::size_t>(index_in(pair[0], n, "pair")) * n + index_in(pair[1], n, "pair")] = phase_field(entry);
    }
  }
  return TwistedCocycle(Cochain(std::move(group), Domain::hat, true, 2, std::move(v)));
}

UCharacter load_lambda(const nlohmann::json& j, const GradedGroup& group) {
  std::vector<Phase> v(group.hat().order());
  if (j.contains("values")) {
    for (const auto& entry : j.at("values")) v[index_in(get<int>(entry, "element"), group.hat().order(), "element")] = phase_field(entry);
  }
  return UCharacter(group.hat(), std::move(v));
}

ordered_json group_to_json(const GradedGroup& g) {
  ordered_json j;
  j["order"] = g.hat().order();
  j["cayley"] = g.hat().cayley();
  j["grading"] = g.signs();
  if (!g.names().empty()) j["names"] = g.names();
  return j;
}

ordered_json cocycle_to_json(const TwistedCocycle& c) {
  ordered_json j;
  j["twisted"] = true;
  j["values"] = ordered_json::array();
  const int n = c.group().order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!c(a, b).is_one()) j["values"].push_back({{"pair", {a, b}}, {"q", c(a, b).str()}});
  return j;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  // Floating noise below this is rendered as zero so output is stable across platforms.
  if (std::abs(x) < 1e-11) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

ordered_json complex_json(cplx z) { return ordered_json::array({round12(z.real()), round12(z.imag())}); }

ordered_json alg_elem_json(const AlgElem& a) {
  ordered_json coeffs = ordered_json::array();
  for (Eigen::Index i = 0; i < a.coeffs.size(); ++i) coeffs.push_back(complex_json(a.coeffs(i)));
  return {{"coeffs", coeffs}};
}

}  // namespace udw
