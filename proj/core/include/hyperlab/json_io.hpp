#pragma once

// JSON encodings for inputs and reports. Readers validate field presence and
// types and throw InputError with the offending field name.
//
//   WindowVector   {"p": 2, "lo": 1, "hi": 2, "coeffs": [[re, im], ...], "axis": "N"|"Z"}
//   WeightSequence {"axis": "N"|"Z", "rule": {"kind": "constant"|"periodic"|"piecewise"|"explicit", ...}}
//   MoebiusMap     {"a": [re, im], "b": ..., "c": ..., "d": ...}
//   HardyFunction  {"coeffs": [[re, im], ...]}

#include <nlohmann/json.hpp>

#include "hyperlab/criterion.hpp"
#include "hyperlab/hardy.hpp"
#include "hyperlab/moebius.hpp"
#include "hyperlab/seqspace.hpp"
#include "hyperlab/shift.hpp"

namespace hyperlab {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j, const char* field = "complex value");

Json to_json(Axis axis);
Axis axis_from_json(const Json& j);

Json to_json(const WindowVector& x);
/// `default_axis` applies when the object carries no "axis" field.
WindowVector window_vector_from_json(const Json& j, Axis default_axis);

Json to_json(const WeakNeighborhood& w);
WeakNeighborhood weak_neighborhood_from_json(const Json& j, Axis default_axis);

Json to_json(const WeightSequence& w);
WeightSequence weight_sequence_from_json(const Json& j);

Json to_json(const MoebiusMap& m);
MoebiusMap moebius_from_json(const Json& j);

Json to_json(const HardyFunction& f);
HardyFunction hardy_function_from_json(const Json& j);

Json to_json(const CriterionInstance& inst);
CriterionInstance criterion_instance_from_json(const Json& j);

Json to_json(const SalasUnilateralReport& r);
SalasUnilateralReport salas_unilateral_report_from_json(const Json& j);
Json to_json(const SalasBilateralReport& r);
SalasBilateralReport salas_bilateral_report_from_json(const Json& j);
Json to_json(const RefutationCertificate& r);
RefutationCertificate refutation_certificate_from_json(const Json& j);

Json to_json(const WeakNullReport& r);
WeakNullReport weak_null_report_from_json(const Json& j);
Json to_json(const CriterionReport& r);
CriterionReport criterion_report_from_json(const Json& j);
Json to_json(const TransitivityReport& r);
TransitivityReport transitivity_report_from_json(const Json& j);

Json to_json(const MapClass& c);
MapClass map_class_from_json(const Json& j);
Json to_json(const HalfPlaneForm& h);
HalfPlaneForm half_plane_form_from_json(const Json& j);
Json to_json(const ParabolicIdentityReport& r);
ParabolicIdentityReport parabolic_identity_report_from_json(const Json& j);

Json to_json(const GrowthEstimateReport& r);
GrowthEstimateReport growth_estimate_report_from_json(const Json& j);
Json to_json(const OrbitDecayReport& r);
OrbitDecayReport orbit_decay_report_from_json(const Json& j);
Json to_json(const ObstructionReport& r);
ObstructionReport obstruction_report_from_json(const Json& j);
Json to_json(const ClusterReport& r);
ClusterReport cluster_report_from_json(const Json& j);

}  // namespace hyperlab
