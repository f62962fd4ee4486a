#include "udw/bordism.hpp"
#include "udw/cohom.hpp"
#include "udw/data.hpp"
#include "udw/error.hpp"
#include "udw/grp.hpp"
#include "udw/io.hpp"
#include "udw/reps.hpp"
#include "udw/tft.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace udw;

namespace {

struct JobSpec {
  std::string preset;
  int n = 0;
  std::string base;
  std::string input;
  std::string cocycle;
  std::string twist = "trivial";
  std::string lambda = "trivial";
  std::string format = "table";
  std::optional<std::uint64_t> seed;
  double tol = kAxiomTol;
};

std::uint64_t resolve_seed(const JobSpec& job) {
  if (job.seed) return *job.seed;
  if (const char* env = std::getenv("DW_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (end == env || *end != '\0') throw Error(ErrorKind::BadInput, "DW_SEED is not an integer");
    return v;
  }
  return kDefaultSeed;
}

DualityData load_data(const JobSpec& job) {
  if (job.preset.empty() == job.input.empty())
    throw Error(ErrorKind::BadInput, "give exactly one of --preset or --input");
  std::shared_ptr<const GradedGroup> group;
  std::optional<UCharacter> pi;
  if (!job.preset.empty()) {
    Preset p = preset(job.preset, {job.n, job.base});
    if (!p.note.empty()) std::cerr << "note: " << p.note << "\n";
    group = p.group;
    pi = p.characters.at(1).lambda;
  } else {
    group = load_group(read_json_file(job.input));
    pi = UCharacter::grading(*group);
  }
  std::optional<TwistedCocycle> theta;
  if (!job.cocycle.empty()) {
    theta = load_cocycle(read_json_file(job.cocycle), group);
  } else if (job.twist == "trivial") {
    theta = trivial_cocycle(group);
  } else if (job.twist == "delta") {
    theta = delta_cocycle(group);
  } else {
    throw Error(ErrorKind::BadParameter, "--twist must be trivial or delta");
  }
  if (!job.cocycle.empty() && job.twist != "trivial") *theta = multiply(*theta, delta_cocycle(group));
  std::optional<UCharacter> lambda;
  if (job.lambda == "trivial") lambda = UCharacter::trivial(group->hat());
  else if (job.lambda == "pi") lambda = *pi;
  else lambda = load_lambda(read_json_file(job.lambda), *group);
  return DualityData(*theta, *lambda);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

std::string fmt(cplx z) {
  const double re = round12(z.real()), im = round12(z.imag());
  if (im == 0.0) return fmt(re);
  std::string s = fmt(re);
  s += im < 0 ? " - " : " + ";
  return s + fmt(std::abs(im)) + "i";
}

std::string element_name(const GradedGroup& g, int hat_index) {
  const std::string n = g.name(hat_index);
  return n.empty() ? std::to_string(hat_index) : n;
}

int cmd_irreps(const JobSpec& job) {
  const DualityData d = load_data(job);
  const std::uint64_t seed = resolve_seed(job);
  const CharacterTable table = irreducible_characters(d.theta, seed);
  ordered_json out;
  out["irreps"] = ordered_json::array();
  const auto& kernel = d.group->kernel();
  if (job.format == "table") {
    std::cout << "dim  indicator  character\n";
  }
  for (const auto& chi : table.characters) {
    const int ind = rounded_indicator(fs_indicator(d, chi));
    if (job.format == "json") {
      ordered_json values = ordered_json::array();
      for (Eigen::Index g = 0; g < chi.values.size(); ++g) values.push_back(complex_json(chi.values(g)));
      out["irreps"].push_back({{"dim", chi.dim}, {"chi", values}, {"indicator", ind}});
    } else {
      std::ostringstream row;
      for (int g = 0; g < kernel.order(); ++g) row << (g ? ", " : "") << fmt(chi.values(g));
      std::printf("%-4d %+-10d %s\n", chi.dim, ind, row.str().c_str());
    }
  }
  if (job.format == "json") {
    out["seed"] = seed;
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_nu(const JobSpec& job) {
  const DualityData d = load_data(job);
  const AlgElem nu = fs_element(d);
  if (job.format == "json") {
    std::cout << alg_elem_json(nu).dump(2) << "\n";
    return 0;
  }
  bool any = false;
  for (Eigen::Index g = 0; g < nu.coeffs.size(); ++g) {
    if (std::abs(nu.coeffs(g)) < kAlgebraTol) continue;
    std::cout << (any ? " + " : "") << "(" << fmt(nu.coeffs(g)) << ") l_" << element_name(*d.group, d.group->embed(static_cast<int>(g)));
    any = true;
  }
  std::cout << (any ? "" : "0") << "\n";
  return 0;
}

int cmd_check(const JobSpec& job) {
  const DualityData d = load_data(job);
  const std::uint64_t seed = resolve_seed(job);
  const IdentityReport ids = check_cocycle_identities(d.theta_hat);
  const StructureAlgebra s(d, seed);
  AxiomReport report = check_oriented_axioms(s, seed);
  const AxiomReport unoriented = check_unoriented_axioms(s, seed);
  report.results.insert(report.results.end(), unoriented.results.begin(), unoriented.results.end());
  report.results.push_back({"figure_klein", check_relation(*parse(kKleinLhs), *parse(kKleinRhs), s), ""});
  for (const auto& obj : s.objects())
    report.results.push_back({"figure_cardy[" + obj.label + "]",
                              check_relation(*parse(cardy_lhs(obj.label)), *parse(cardy_rhs(obj.label)), s), ""});

  const bool ok = ids.ok && report.passed(job.tol);
  if (job.format == "json") {
    ordered_json out;
    out["cocycle_identities"] = {{"ok", ids.ok}, {"failed", ids.failed}, {"witness", ids.witness}};
    out["axioms"] = ordered_json::array();
    for (const auto& r : report.results)
      out["axioms"].push_back({{"name", r.name}, {"residual", round12(r.residual)}, {"pass", r.residual < job.tol}, {"witness", r.witness}});
    out["tolerance"] = job.tol;
    out["seed"] = seed;
    out["pass"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cocycle identities: ";
    if (ids.ok) {
      std::cout << "exact\n";
    } else {
      std::cout << "FAILED " << ids.failed << " at";
      for (int w : ids.witness) std::cout << " " << element_name(*d.group, w);
      std::cout << "\n";
    }
    for (const auto& r : report.results) {
      std::printf("%-4s %-34s %.3e", r.residual < job.tol ? "ok" : "FAIL", r.name.c_str(), r.residual);
      if (r.residual >= job.tol && !r.witness.empty()) std::printf("  (%s)", r.witness.c_str());
      std::printf("\n");
    }
    std::cout << (ok ? "all checks passed" : "check failed") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_partition(const JobSpec& job, int genus, int crosscaps, const std::vector<std::string>& boundary) {
  const DualityData d = load_data(job);
  const StructureAlgebra s(d, resolve_seed(job));
  Surface surface;
  surface.genus = genus;
  surface.crosscaps = crosscaps;
  for (const auto& b : boundary) {
    std::string label = b;
    if (auto eq = b.find('='); eq != std::string::npos) {
      label = b.substr(eq + 1);
      if (b.substr(0, eq) != "label") throw Error(ErrorKind::BadInput, "boundary entries are label=V<i>");
    }
    surface.boundary.push_back({label, std::nullopt});
  }
  const PartitionResult r = partition(s, surface);
  if (job.format == "json") {
    ordered_json labels = ordered_json::array();
    for (const auto& b : surface.boundary) labels.push_back(b.label);
    ordered_json out;
    out["surface"] = {{"genus", genus}, {"crosscaps", crosscaps}, {"boundary", labels}, {"euler", surface.euler()}};
    out["value"] = complex_json(r.value);
    ordered_json oracle = nullptr;
    if (r.oracle) oracle = std::to_string(r.oracle->numerator()) + "/" + std::to_string(r.oracle->denominator());
    out["routes"] = {{"state_sum", complex_json(r.state_sum)}, {"characters", complex_json(r.characters)}, {"oracle", oracle}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "value       " << fmt(r.value) << "\n";
    std::cout << "state sum   " << fmt(r.state_sum) << "\n";
    std::cout << "characters  " << fmt(r.characters) << "\n";
    if (r.oracle) std::cout << "oracle      " << r.oracle->numerator() << "/" << r.oracle->denominator() << "\n";
  }
  return 0;
}

int cmd_bordism(const JobSpec& job, const std::string& lhs, const std::string& rhs) {
  const TermPtr l = parse(lhs);
  const TermPtr r = parse(rhs);
  const DualityData d = load_data(job);
  const StructureAlgebra s(d, resolve_seed(job));
  const double residual = check_relation(*l, *r, s);
  const bool ok = residual < job.tol;
  if (job.format == "json") {
    ordered_json out{{"lhs", print(*l)}, {"rhs", print(*r)}, {"residual", round12(residual)}, {"pass", ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::printf("%s == %s\nresidual %.3e %s\n", print(*l).c_str(), print(*r).c_str(), residual, ok ? "ok" : "FAIL");
  }
  return ok ? 0 : 1;
}

void add_input_options(CLI::App* sub, JobSpec& job) {
  sub->add_option("--preset", job.preset, "preset name")->check(CLI::IsMember(preset_names()));
  sub->add_option("--n", job.n, "preset size parameter");
  sub->add_option("--base", job.base, "base group for product_with_C2");
  sub->add_option("--input", job.input, "graded group JSON");
  sub->add_option("--cocycle", job.cocycle, "twisted 2-cocycle JSON");
  sub->add_option("--twist", job.twist, "trivial or delta (multiplies --cocycle)");
  sub->add_option("--lambda", job.lambda, "trivial, pi, or a character JSON file");
  sub->add_option("--format", job.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--seed", job.seed, "RNG seed (DW_SEED overrides the default)");
  sub->add_option("--tol", job.tol, "residual tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Real representations and unoriented open/closed TFTs"};
  app.require_subcommand(1);
  JobSpec job;

  auto* irreps = app.add_subcommand("irreps", "irreducible characters and indicators");
  auto* nu = app.add_subcommand("nu", "the Frobenius-Schur element in the l_g basis");
  auto* check = app.add_subcommand("check", "axiom suites and figure relations");
  auto* part = app.add_subcommand("partition", "surface partition function");
  auto* bord = app.add_subcommand("bordism", "compare two bordism terms");
  for (auto* sub : {irreps, nu, check, part, bord}) add_input_options(sub, job);

  int genus = 0, crosscaps = 0;
  std::vector<std::string> boundary;
  part->add_option("--genus", genus)->check(CLI::NonNegativeNumber);
  part->add_option("--crosscaps", crosscaps)->check(CLI::NonNegativeNumber);
  part->add_option("--boundary", boundary, "boundary circle label, label=V<i>")->delimiter(',');
  std::string lhs, rhs;
  bord->add_option("--lhs", lhs)->required();
  bord->add_option("--rhs", rhs)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (irreps->parsed()) return cmd_irreps(job);
    if (nu->parsed()) return cmd_nu(job);
    if (check->parsed()) return cmd_check(job);
    if (part->parsed()) return cmd_partition(job, genus, crosscaps, boundary);
    if (bord->parsed()) return cmd_bordism(job, lhs, rhs);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::RouteMismatch ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
