#ifndef BERGEHIT_IO_HPP
#define BERGEHIT_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bergehit/absorption.hpp"
#include "bergehit/berge.hpp"
#include "bergehit/engine.hpp"
#include "bergehit/process.hpp"
#include "bergehit/thresholds.hpp"

namespace bergehit {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edge_ids": [...], "cycle": bool}
Json certificate_json(const BergePath& p);
Json certificate_json(const BergeCycle& c);
BergePath path_from_json(const Json& j);
BergeCycle cycle_from_json(const Json& j);

Json outcome_json(const DecisionOutcome& out);

/// One JSON object per absorption step, newline terminated.
std::string trace_json_lines(const std::vector<AbsorptionStep>& trace);
Json step_json(const AbsorptionStep& step);

Json threshold_json(const ThresholdReport& rep);
Json properties_json(const std::vector<PropertyVerdict>& verdicts);

/// Lines starting with "# " echo the run header; then trial,seed,tau2,tauBH,coincide,provenance,millis.
/// millis is left empty unless timing is set, so the file stays byte-deterministic.
std::string trials_csv(const TrialBatch& batch, const std::vector<std::string>& header, bool timing);
Json summary_json(const TrialSummary& s);

}  // namespace bergehit

#endif  // BERGEHIT_IO_HPP
