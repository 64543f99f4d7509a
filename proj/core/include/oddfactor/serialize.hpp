#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddfactor/factor.hpp"
#include "oddfactor/harness.hpp"
#include "oddfactor/spectral.hpp"

namespace oddfactor {

// Stable-keyed JSON (insertion order preserved) so output lines diff cleanly.
using Json = nlohmann::ordered_json;

Json certificate_json(const Graph& g, const FactorParams& p,
                      const DeficiencyCertificate& cert);

Json family_cubic_json(const FamilyCubic& fc);

Json verdict_json(const InstanceVerdict& v);

// One-row CSV summary of a sweep (with header).
std::string sweep_csv(const SweepParams& params,
                      const std::vector<InstanceVerdict>& verdicts);

}  // namespace oddfactor
