#pragma once

#include <json.hpp>

#include "aisr/decision.hpp"
#include "aisr/evaluator.hpp"
#include "aisr/representation.hpp"

namespace aisr {

// All serialization uses ordered_json so that identical inputs produce
// byte-identical output.
using Json = nlohmann::ordered_json;

Json jk_verdict_json(const JkVerdict& v, int k);
Json jk_threshold_json(const JkThreshold& t);

// Counterexample letters map to element literals of c.
Json verdict_json(const Verdict& v, const Carrier& c);

Json rep_report_json(const RepresentationReport& r);

Json agreement_record_json(const AgreementRecord& rec);
Json agreement_report_json(const AgreementReport& r);

}  // namespace aisr
