#pragma once

#include <json.hpp>

#include "gab/invariants.hpp"
#include "gab/rewrite.hpp"
#include "gab/verify.hpp"

namespace gab {

using Json = nlohmann::ordered_json;

/// Matrices arrive as arrays of scalar strings: [["0","1"],["-q","0"]].
ScalarMatrix matrix_from_json(const Json& j, BaseField field);
Json matrix_to_json(const ScalarMatrix& m);

BaseField field_from_json(const Json& bundle);

Json trace_to_json(const std::vector<ReductionStep>& trace);
Json membership_trace_to_json(const std::vector<MembershipStep>& trace);

/// Full diamond report: rules, per-ambiguity certificates with replayable
/// traces, verdict. Field order is stable for golden-file tests.
Json confluence_report_to_json(const ReductionSystem& sys, const ConfluenceReport& rep);

Json certificate_to_json(const Certificate& cert);
Json invariant_report_to_json(const InvariantReport& rep);
Json witness_verdict_to_json(const WitnessVerdict& v);
Json galois_verdict_to_json(const GaloisPairVerdict& v);

/// Parse the NCPoly text form, e.g. "x11*x22 - q*x21*x12 - D"; slot prefixes
/// L: / R: select tensor factors, D and Dinv name d^{±1}.
NCPoly parse_ncpoly(const std::string& text, BaseField field = BaseField::GaussianRationals);

} // namespace gab
