#pragma once

#include "qcoin/exact.hpp"
#include "qcoin/geometry.hpp"
#include "qcoin/montecarlo.hpp"
#include "qcoin/pattern_count.hpp"
#include "qcoin/quantum.hpp"

#include <json.hpp>

#include <string>

namespace qcoin {

using Json = nlohmann::ordered_json;

Placement placement_from_string(const std::string& name);

// {"rational": "5/64", "decimal": {"value": 0.078125, "digits": 12}}
Json rational_json(const Rational& r, int float_digits = 12);

// {"value": v, "tol": "..."} — every bare float in JSON output carries its
// tolerance context.
Json float_json(double value, const std::string& tolerance_context);

// Flat key-value record: alphabet_size, length, placement, k, partition,
// positions.
Json to_json(const PatternSpec& spec);
PatternSpec pattern_spec_from_json(const Json& j);

Json to_json(const AllowedCount& count);

// {"qubit_count": n, "amplitudes": [[index, re, im], ...]}
Json to_json(const NQubitState& state);
NQubitState state_from_json(const Json& j);

// {"dimension": d, "entries": [[re, im], ...]} row-major.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// {"dims": [[lower, upper, qubit_count], ...]}
Json to_json(const BoxRegion& region);
BoxRegion box_region_from_json(const Json& j);

Json to_json(const EventSpec& event);
Json to_json(const TrialEstimate& estimate);

}  // namespace qcoin
