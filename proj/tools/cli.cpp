#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "oddfactor/errors.hpp"
#include "oddfactor/factor.hpp"
#include "oddfactor/families.hpp"
#include "oddfactor/graph6.hpp"
#include "oddfactor/harness.hpp"
#include "oddfactor/serialize.hpp"
#include "oddfactor/spectral.hpp"

namespace oddfactor::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

SearchCaps caps_from_env() {
  SearchCaps caps;
  if (const char* raw = std::getenv("OVERRIDE_CAPS")) {
    const int value = std::atoi(raw);
    if (value > 0) {
      caps.subset_enum = std::max(caps.subset_enum, value);
      caps.factor_search = std::max(caps.factor_search, value);
      std::cerr << "warning: OVERRIDE_CAPS raises enumeration caps to "
                << value << "\n";
    }
  }
  return caps;
}

// Collects the graphs named by -g: a literal graph6 string, or every line of
// standard input when the value is "-".
std::vector<Graph> resolve_graphs(const std::string& source) {
  std::vector<Graph> graphs;
  if (source == "-") {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.empty()) continue;
      graphs.push_back(parse_graph6(line));
    }
  } else {
    graphs.push_back(parse_graph6(source));
  }
  return graphs;
}

std::vector<int> parse_part_list(const std::string& raw) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < raw.size()) {
    size_t comma = raw.find(',', pos);
    if (comma == std::string::npos) comma = raw.size();
    parts.push_back(std::stoi(raw.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (parts.empty()) throw std::invalid_argument("empty part list");
  return parts;
}

int run_factor_check(const std::string& source, int b, const SearchCaps& caps) {
  for (const Graph& g : resolve_graphs(source)) {
    const auto factor = has_odd_factor(g, b, caps);
    Json j;
    j["graph6"] = emit_graph6(g);
    j["b"] = b;
    j["hasFactor"] = factor.has_value();
    if (factor) j["factor"] = factor->edges;
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

int run_critical_check(const std::string& source, int b, int k,
                       const std::string& method, const SearchCaps& caps) {
  const FactorParams params{b, k};
  for (const Graph& g : resolve_graphs(source)) {
    Json j;
    j["graph6"] = emit_graph6(g);
    j["b"] = b;
    j["k"] = k;
    j["method"] = method;
    std::optional<bool> criterion, direct;
    if (method == "criterion" || method == "both") {
      const CriticalityVerdict v = is_k_critical(g, params, caps);
      criterion = v.critical;
      j["criterion"] = v.critical;
      if (v.witness)
        j["witness"] = certificate_json(g, params, *v.witness);
    }
    if (method == "direct" || method == "both") {
      const DirectCriticalityVerdict v = is_k_critical_direct(g, params, caps);
      direct = v.critical;
      j["direct"] = v.critical;
      if (v.failing_deletion) j["failingDeletion"] = *v.failing_deletion;
    }
    if (criterion && direct && *criterion != *direct) {
      Json repro;
      repro["disagreement"] = true;
      repro["graph6"] = emit_graph6(g);
      repro["b"] = b;
      repro["k"] = k;
      repro["criterion"] = *criterion;
      repro["direct"] = *direct;
      std::cout << repro.dump() << "\n";
      return kViolation;
    }
    j["critical"] = criterion ? *criterion : *direct;
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

int run_extremal_build(const std::string& family, int n, int b, int k, int s,
                       int delta, int t, int p, const std::string& parts_raw) {
  Graph g;
  if (family == "parts") {
    g = build_parts(s, parse_part_list(parts_raw));
  } else if (family == "cluster") {
    g = build_cluster_join(n, s, t, p);
  } else if (family == "star") {
    g = build_g_star(ExtremalParams{n, b, k, delta});
  } else if (family == "G2") {
    g = build_g2(n, b, k, s);
  } else if (family == "G3") {
    g = build_g3(n, b, k, s, delta);
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }
  std::cout << emit_graph6(g) << "\n";
  return kOk;
}

int run_spectral_radius(const std::string& source, double tol) {
  for (const Graph& g : resolve_graphs(source)) {
    Json j;
    j["graph6"] = emit_graph6(g);
    j["n"] = g.order();
    j["rho"] = spectral_radius(g, tol);
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

int run_spectral_quotient(const std::string& family, int n, int b, int k,
                          int delta, int s) {
  QuotientFamily f;
  if (family == "B2")
    f = QuotientFamily::B2;
  else if (family == "Bstar")
    f = QuotientFamily::Bstar;
  else if (family == "B3")
    f = QuotientFamily::B3;
  else
    throw std::invalid_argument("unknown family: " + family);
  std::cout << family_cubic_json(char_cubic(f, n, b, k, delta, s)).dump()
            << "\n";
  return kOk;
}

int run_verify_sweep(Mode mode, int b, int k, int delta, int n, int samples,
                     std::uint64_t seed, const std::string& format,
                     const SearchCaps& caps) {
  SweepParams params;
  params.b = b;
  params.k = k;
  params.delta = delta;
  params.n = n;
  params.mode = mode;
  params.samples = samples;
  params.seed = seed;
  const std::vector<InstanceVerdict> verdicts = sweep(params, caps);
  long long consistent = 0, extremal = 0, counterexamples = 0;
  for (const auto& v : verdicts) {
    switch (v.classification) {
      case Classification::consistent: ++consistent; break;
      case Classification::extremal_equality: ++extremal; break;
      case Classification::counterexample: ++counterexamples; break;
    }
  }
  if (format == "csv") {
    std::cout << sweep_csv(params, verdicts);
  } else {
    for (const auto& v : verdicts) std::cout << verdict_json(v).dump() << "\n";
    Json counts;
    counts["samples"] = samples;
    counts["consistent"] = consistent;
    counts["extremalEquality"] = extremal;
    counts["counterexamples"] = counterexamples;
    Json j;
    j["summary"] = counts;
    std::cout << j.dump() << "\n";
  }
  return counterexamples == 0 ? kOk : kViolation;
}

int run_verify_identities(int n_max) {
  IdentityGridOptions opt;
  opt.n_max = n_max;
  const IdentityGridReport report = run_identity_grid(opt);
  for (const auto& line : report.lines) {
    Json j;
    j["check"] = line.name;
    j["points"] = line.points;
    j["holds"] = line.holds;
    j["fails"] = line.fails;
    std::cout << j.dump() << "\n";
  }
  return report.all_hold() ? kOk : kViolation;
}

int run_graph6_roundtrip(const std::string& source, const std::string& file) {
  std::vector<std::string> lines;
  auto drain = [&lines](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  };
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open file: " + file);
    drain(in);
  } else if (source == "-") {
    drain(std::cin);
  } else {
    lines.push_back(source);
  }
  long long mismatches = 0;
  for (const std::string& line : lines)
    if (emit_graph6(parse_graph6(line)) != line) ++mismatches;
  Json j;
  j["lines"] = static_cast<long long>(lines.size());
  j["mismatches"] = mismatches;
  std::cout << j.dump() << "\n";
  return mismatches == 0 ? kOk : kViolation;
}

}  // namespace

int run(int argc, const char* const argv[]) {
  CLI::App app{"verification workbench for k-criticality with respect to [1,b]-odd factors"};
  app.require_subcommand(1);

  std::string g6;
  int b = 1, k = 1, n = 0, s = 0, delta = 0, t = 1, p = 1;
  int samples = 0, n_max = 60;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::string method = "both", family, format = "json", parts_raw, file;

  auto* factor = app.add_subcommand("factor", "[1,b]-odd factor existence");
  auto* factor_check = factor->add_subcommand("check", "decide factor existence");
  factor_check->add_option("-g,--graph", g6, "graph6 string, or - for stdin lines")->required();
  factor_check->add_option("-b", b, "odd degree bound")->required();

  auto* critical = app.add_subcommand("critical", "k-criticality");
  auto* critical_check = critical->add_subcommand("check", "decide k-criticality");
  critical_check->add_option("-g,--graph", g6, "graph6 string, or - for stdin lines")->required();
  critical_check->add_option("-b", b, "odd degree bound")->required();
  critical_check->add_option("-k", k, "deletion size")->required();
  critical_check->add_option("--method", method, "criterion | direct | both")
      ->check(CLI::IsMember({"criterion", "direct", "both"}));

  auto* extremal = app.add_subcommand("extremal", "extremal family builders");
  auto* extremal_build = extremal->add_subcommand("build", "emit a family graph as graph6");
  extremal_build->add_option("--family", family, "parts | cluster | star | G2 | G3")->required();
  extremal_build->add_option("--n", n, "order");
  extremal_build->add_option("--b", b, "odd degree bound");
  extremal_build->add_option("--k", k, "deletion size");
  extremal_build->add_option("--s", s, "hub size");
  extremal_build->add_option("--delta", delta, "minimum-degree parameter");
  extremal_build->add_option("--t", t, "part count");
  extremal_build->add_option("--p", p, "small part size");
  extremal_build->add_option("--parts", parts_raw, "comma-separated part sizes");

  auto* spectral = app.add_subcommand("spectral", "adjacency spectra");
  auto* spectral_radius_cmd = spectral->add_subcommand("radius", "largest adjacency eigenvalue");
  spectral_radius_cmd->add_option("-g,--graph", g6, "graph6 string, or - for stdin lines")->required();
  spectral_radius_cmd->add_option("--tol", tol, "eigenvalue tolerance");
  auto* spectral_quotient = spectral->add_subcommand("quotient", "family quotient matrix and cubic");
  spectral_quotient->add_option("--family", family, "B2 | Bstar | B3")->required();
  spectral_quotient->add_option("--n", n, "order")->required();
  spectral_quotient->add_option("--b", b, "odd degree bound")->required();
  spectral_quotient->add_option("--k", k, "deletion size")->required();
  spectral_quotient->add_option("--delta", delta, "minimum-degree parameter");
  spectral_quotient->add_option("--s", s, "hub size");

  auto* verify = app.add_subcommand("verify", "theorem and identity audits");
  auto* verify_thm11 = verify->add_subcommand("thm11", "size-condition sweep");
  auto* verify_thm12 = verify->add_subcommand("thm12", "spectral-condition sweep");
  for (CLI::App* cmd : {verify_thm11, verify_thm12}) {
    cmd->add_option("--b", b, "odd degree bound")->required();
    cmd->add_option("--k", k, "deletion size")->required();
    cmd->add_option("--delta", delta, "minimum degree")->required();
    cmd->add_option("--n", n, "order")->required();
    cmd->add_option("--samples", samples, "sample count")->required();
    cmd->add_option("--seed", seed, "random seed (mandatory: sweeps must be reproducible)")->required();
    cmd->add_option("--format", format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
  }
  auto* verify_identities = verify->add_subcommand("identities", "exact identity grid");
  verify_identities->add_option("--n-max", n_max, "order sweep limit");

  auto* graph6_cmd = app.add_subcommand("graph6", "graph6 encoding utilities");
  auto* roundtrip = graph6_cmd->add_subcommand("roundtrip", "byte-exact round-trip audit");
  roundtrip->add_option("-g,--graph", g6, "graph6 string, or - for stdin lines");
  roundtrip->add_option("--file", file, "file of graph6 lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const SearchCaps caps = caps_from_env();
  try {
    if (*factor_check) return run_factor_check(g6, b, caps);
    if (*critical_check) return run_critical_check(g6, b, k, method, caps);
    if (*extremal_build)
      return run_extremal_build(family, n, b, k, s, delta, t, p, parts_raw);
    if (*spectral_radius_cmd) return run_spectral_radius(g6, tol);
    if (*spectral_quotient) {
      if (delta == 0) delta = k + 1;  // B2 does not use delta
      return run_spectral_quotient(family, n, b, k, delta, s);
    }
    if (*verify_thm11)
      return run_verify_sweep(Mode::size, b, k, delta, n, samples, seed,
                              format, caps);
    if (*verify_thm12)
      return run_verify_sweep(Mode::spectral, b, k, delta, n, samples, seed,
                              format, caps);
    if (*verify_identities) return run_verify_identities(n_max);
    if (*roundtrip) {
      if (g6.empty() && file.empty())
        throw std::invalid_argument("roundtrip needs -g or --file");
      return run_graph6_roundtrip(g6, file);
    }
    std::cerr << "error: no subcommand selected\n";
    return kUsage;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kCapacity;
  } catch (const SamplingError& e) {
    std::cerr << "sampling error: " << e.what() << "\n";
    return kCapacity;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace oddfactor::cli
