#pragma once

// JSON encodings. All integers are written as JSON integers; a class
// coefficient that does not fit in 64 bits is written as a decimal string,
// and both spellings are accepted on input.
//
//   GrothClass          {"coeffs": [c0, c1, ...]}
//   Fan                 {"rank": m, "rays": [[...], ...], "max_cones": [[i, ...], ...]}
//   ChartPresentation   {"coords": [{"name": s, "monomial": [...]}, ...],
//                        "relation": {"left": [...], "right": [...]} | null}
//   VerificationReport  {"model": {...}, "checks": [{"name", "pass", "detail"}, ...],
//                        "fiber_class_before": {...}, "fiber_class_after": {...},
//                        "mod_L_invariant": b[, "sub_reports": [...]]}

#include <nlohmann/json.hpp>

#include "degenkit/chart.hpp"
#include "degenkit/cone.hpp"
#include "degenkit/degeneration.hpp"
#include "degenkit/fan.hpp"
#include "degenkit/groth_class.hpp"
#include "degenkit/lattice_vector.hpp"
#include "degenkit/toric_model.hpp"

namespace degenkit {

using Json = nlohmann::ordered_json;

namespace grothring {
void to_json(Json& j, const GrothClass& c);
void from_json(const Json& j, GrothClass& c);
}  // namespace grothring

namespace toriclat {
void to_json(Json& j, const LatticeVector& v);
void from_json(const Json& j, LatticeVector& v);
void to_json(Json& j, const Cone& c);
void to_json(Json& j, const Fan& f);
void to_json(Json& j, const ChartPresentation& c);
void to_json(Json& j, const SemistableReport& r);
void from_json(const Json& j, SemistableReport& r);

/// {"rank": m, "rays": [...]}
Cone cone_from_json(const Json& j);
Fan fan_from_json(const Json& j);
ChartPresentation chart_from_json(const Json& j);
}  // namespace toriclat

namespace degeneration {
void to_json(Json& j, const ModelSpec& m);
void from_json(const Json& j, ModelSpec& m);
void to_json(Json& j, const Check& c);
void from_json(const Json& j, Check& c);
void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);
}  // namespace degeneration

}  // namespace degenkit
