#include "oddfactor/serialize.hpp"

#include <sstream>

#include "oddfactor/graph6.hpp"

namespace oddfactor {

namespace {

const char* family_name(QuotientFamily f) {
  switch (f) {
    case QuotientFamily::B2: return "B2";
    case QuotientFamily::Bstar: return "Bstar";
    case QuotientFamily::B3: return "B3";
  }
  return "?";
}

}  // namespace

Json certificate_json(const Graph& g, const FactorParams& p,
                      const DeficiencyCertificate& cert) {
  Json j;
  j["graph6"] = emit_graph6(g);
  j["b"] = p.b;
  j["k"] = p.k;
  j["deficiency"] = cert.deficiency;
  j["witness"] = cert.witness;
  j["oddComponents"] = cert.odd_components;
  return j;
}

Json family_cubic_json(const FamilyCubic& fc) {
  Json j;
  j["family"] = family_name(fc.family);
  Json params;
  params["n"] = fc.n;
  params["b"] = fc.b;
  params["k"] = fc.k;
  params["delta"] = fc.delta;
  params["s"] = fc.s;
  j["params"] = params;
  j["matrix"] = fc.matrix;
  j["coeffs"] = {fc.phi.c2, fc.phi.c1, fc.phi.c0};
  const std::vector<double> roots = cubic_real_roots(fc.phi);
  j["theta1"] = roots.size() > 0 ? Json(roots[0]) : Json(nullptr);
  j["theta2"] = roots.size() > 1 ? Json(roots[1]) : Json(nullptr);
  j["theta3"] = roots.size() > 2 ? Json(roots[2]) : Json(nullptr);
  return j;
}

Json verdict_json(const InstanceVerdict& v) {
  Json j;
  j["graph6"] = v.graph6;
  j["mode"] = to_string(v.mode);
  j["b"] = v.b;
  j["k"] = v.k;
  j["n"] = v.n;
  j["delta"] = v.delta;
  Json checks;
  checks["connected"] = v.connected_ok;
  checks["parity"] = v.parity_ok;
  checks["order"] = v.order_ok;
  checks["boundDefined"] = v.bound_defined;
  checks["bound"] = v.bound_ok;
  j["checks"] = checks;
  j["e"] = v.edge_value;
  j["eBound"] = v.edge_bound;
  if (v.mode == Mode::spectral) {
    j["rho"] = v.rho_value;
    j["rhoBound"] = v.rho_bound;
  }
  j["critical"] = v.critical;
  if (v.witness) {
    Json w;
    w["witness"] = v.witness->witness;
    w["oddComponents"] = v.witness->odd_components;
    w["deficiency"] = v.witness->deficiency;
    j["witness"] = w;
  }
  j["classification"] = to_string(v.classification);
  return j;
}

std::string sweep_csv(const SweepParams& params,
                      const std::vector<InstanceVerdict>& verdicts) {
  long long consistent = 0, extremal = 0, counterexamples = 0;
  for (const auto& v : verdicts) {
    switch (v.classification) {
      case Classification::consistent: ++consistent; break;
      case Classification::extremal_equality: ++extremal; break;
      case Classification::counterexample: ++counterexamples; break;
    }
  }
  std::ostringstream out;
  out << "b,k,delta,n,mode,samples,seed,consistent,extremalEquality,counterexamples\n";
  out << params.b << ',' << params.k << ',' << params.delta << ',' << params.n
      << ',' << to_string(params.mode) << ',' << params.samples << ','
      << params.seed << ',' << consistent << ',' << extremal << ','
      << counterexamples << '\n';
  return out.str();
}

}  // namespace oddfactor
