#include "hyperlab/json_io.hpp"

#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) {
        throw InputError(std::string("expected a JSON object holding '") + key + "'");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw InputError(std::string("missing field '") + key + "'");
    }
    return *it;
}

bool has(const Json& j, const char* key) {
    return j.is_object() && j.contains(key) && !j.at(key).is_null();
}

double number(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number()) {
        throw InputError(std::string("field '") + key + "' must be a number");
    }
    return v.get<double>();
}

long integer(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) {
        throw InputError(std::string("field '") + key + "' must be an integer");
    }
    return v.get<long>();
}

std::size_t count(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0)) {
        throw InputError(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

bool boolean(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) {
        throw InputError(std::string("field '") + key + "' must be a boolean");
    }
    return v.get<bool>();
}

std::string text(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) {
        throw InputError(std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

const Json& array(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_array()) {
        throw InputError(std::string("field '") + key + "' must be an array");
    }
    return v;
}

template <class T>
Json optional_to_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::optional<std::size_t> optional_count(const Json& j, const char* key) {
    if (!has(j, key)) {
        return std::nullopt;
    }
    return count(j, key);
}

std::optional<long> optional_integer(const Json& j, const char* key) {
    if (!has(j, key)) {
        return std::nullopt;
    }
    return integer(j, key);
}

std::vector<double> numbers(const Json& j, const char* key) {
    std::vector<double> out;
    for (const Json& v : array(j, key)) {
        if (!v.is_number()) {
            throw InputError(std::string("field '") + key + "' must hold numbers");
        }
        out.push_back(v.get<double>());
    }
    return out;
}

std::vector<std::vector<double>> number_rows(const Json& j, const char* key) {
    std::vector<std::vector<double>> out;
    for (const Json& row : array(j, key)) {
        Json wrapper = {{"row", row}};
        out.push_back(numbers(wrapper, "row"));
    }
    return out;
}

std::vector<Complex> complex_list(const Json& j, const char* key) {
    std::vector<Complex> out;
    for (const Json& v : array(j, key)) {
        out.push_back(complex_from_json(v, key));
    }
    return out;
}

Json complex_list_to_json(const std::vector<Complex>& values) {
    Json out = Json::array();
    for (const Complex& z : values) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

}  // namespace

Json complex_to_json(Complex z) {
    // + 0.0 folds -0.0 so printed reports do not depend on the sign of zero.
    return Json::array({z.real() + 0.0, z.imag() + 0.0});
}

Complex complex_from_json(const Json& j, const char* what) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError(std::string(what) + " must be a number or a [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(Axis axis) {
    return axis == Axis::Natural ? "N" : "Z";
}

Axis axis_from_json(const Json& j) {
    if (j == "N") {
        return Axis::Natural;
    }
    if (j == "Z") {
        return Axis::Integers;
    }
    throw InputError("axis must be \"N\" or \"Z\"");
}

Json to_json(const WindowVector& x) {
    Json coeffs = Json::array();
    for (const Complex& c : x.coeffs()) {
        coeffs.push_back(complex_to_json(c));
    }
    return {{"p", x.p()}, {"lo", x.window().lo}, {"hi", x.window().hi}, {"coeffs", coeffs}, {"axis", to_json(x.axis())}};
}

WindowVector window_vector_from_json(const Json& j, Axis default_axis) {
    const Axis axis = has(j, "axis") ? axis_from_json(j.at("axis")) : default_axis;
    const IndexWindow window = IndexWindow::make(integer(j, "lo"), integer(j, "hi"), axis);
    return WindowVector(window, complex_list(j, "coeffs"), number(j, "p"));
}

Json to_json(const WeakNeighborhood& w) {
    return {{"center", to_json(w.center)}, {"indices", w.indices}, {"epsilon", w.epsilon}};
}

WeakNeighborhood weak_neighborhood_from_json(const Json& j, Axis default_axis) {
    std::vector<long> indices;
    for (const Json& v : array(j, "indices")) {
        if (!v.is_number_integer()) {
            throw InputError("field 'indices' must hold integers");
        }
        indices.push_back(v.get<long>());
    }
    return WeakNeighborhood(window_vector_from_json(field(j, "center"), default_axis), std::move(indices),
                            number(j, "epsilon"));
}

Json to_json(const WeightSequence& w) {
    Json rule = std::visit(
        overloaded{
            [](const WeightSequence::Constant& r) { return Json{{"kind", "constant"}, {"value", r.value}}; },
            [](const WeightSequence::Periodic& r) { return Json{{"kind", "periodic"}, {"values", r.values}}; },
            [](const WeightSequence::Piecewise& r) {
                return Json{{"kind", "piecewise"},
                            {"neg_value", r.neg_value},
                            {"pos_value", r.pos_value},
                            {"breakpoint", r.breakpoint}};
            },
            [](const WeightSequence::Explicit& r) {
                Json values = Json::array();
                for (const auto& [j, v] : r.values) {
                    values.push_back(Json::array({j, v}));
                }
                return Json{{"kind", "explicit"}, {"values", values}, {"tail", r.tail}};
            },
        },
        w.rule());
    return {{"axis", to_json(w.axis())}, {"rule", rule}};
}

WeightSequence weight_sequence_from_json(const Json& j) {
    const Axis axis = axis_from_json(field(j, "axis"));
    const Json& rule = field(j, "rule");
    const std::string kind = text(rule, "kind");
    if (kind == "constant") {
        return {axis, WeightSequence::Constant{number(rule, "value")}};
    }
    if (kind == "periodic") {
        return {axis, WeightSequence::Periodic{numbers(rule, "values")}};
    }
    if (kind == "piecewise") {
        const long breakpoint = has(rule, "breakpoint") ? integer(rule, "breakpoint") : 0;
        return {axis, WeightSequence::Piecewise{number(rule, "neg_value"), number(rule, "pos_value"), breakpoint}};
    }
    if (kind == "explicit") {
        WeightSequence::Explicit r{{}, number(rule, "tail")};
        for (const Json& entry : array(rule, "values")) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number()) {
                throw InputError("explicit weights must be [index, value] pairs");
            }
            r.values[entry[0].get<long>()] = entry[1].get<double>();
        }
        return {axis, std::move(r)};
    }
    throw InputError("unknown weight rule kind '" + kind + "'");
}

Json to_json(const MoebiusMap& m) {
    return {{"a", complex_to_json(m.a())},
            {"b", complex_to_json(m.b())},
            {"c", complex_to_json(m.c())},
            {"d", complex_to_json(m.d())}};
}

MoebiusMap moebius_from_json(const Json& j) {
    return {complex_from_json(field(j, "a"), "a"), complex_from_json(field(j, "b"), "b"),
            complex_from_json(field(j, "c"), "c"), complex_from_json(field(j, "d"), "d")};
}

Json to_json(const HardyFunction& f) {
    return {{"coeffs", complex_list_to_json(f.coeffs())}};
}

HardyFunction hardy_function_from_json(const Json& j) {
    return HardyFunction(complex_list(j, "coeffs"));
}

Json to_json(const CriterionInstance& inst) {
    Json ys = Json::array();
    for (const WindowVector& y : inst.y_samples) {
        ys.push_back(to_json(y));
    }
    Json zs = Json::array();
    for (const WindowVector& z : inst.z_samples) {
        zs.push_back(to_json(z));
    }
    return {{"weights", to_json(inst.op.weights())},
            {"y_samples", ys},
            {"z_samples", zs},
            {"nk", inst.nk},
            {"M", inst.m},
            {"s_index", inst.s_index == RightInverseIndex::ByNk ? "n_k" : "k"}};
}

CriterionInstance criterion_instance_from_json(const Json& j) {
    WeightSequence weights = weight_sequence_from_json(field(j, "weights"));
    const Axis axis = weights.axis();
    CriterionInstance inst{BackwardShift(std::move(weights)), {}, {}, {}};
    for (const Json& y : array(j, "y_samples")) {
        inst.y_samples.push_back(window_vector_from_json(y, axis));
    }
    for (const Json& z : array(j, "z_samples")) {
        inst.z_samples.push_back(window_vector_from_json(z, axis));
    }
    for (const Json& n : array(j, "nk")) {
        if (!n.is_number_integer() || n.get<long>() < 1) {
            throw InputError("field 'nk' must hold positive integers");
        }
        inst.nk.push_back(n.get<std::size_t>());
    }
    if (has(j, "M")) {
        inst.m = number(j, "M");
    }
    if (has(j, "s_index")) {
        const std::string s = text(j, "s_index");
        if (s == "n_k") {
            inst.s_index = RightInverseIndex::ByNk;
        } else if (s == "k") {
            inst.s_index = RightInverseIndex::ByK;
        } else {
            throw InputError("s_index must be \"n_k\" or \"k\"");
        }
    }
    inst.validate();
    return inst;
}

Json to_json(const SalasUnilateralReport& r) {
    return {{"test", "salas_unilateral"},
            {"verdict", to_string(r.verdict)},
            {"horizon", r.horizon},
            {"threshold", r.threshold},
            {"witness", {{"first_crossing", optional_to_json(r.first_crossing)}, {"argmax_n", r.argmax_n}}},
            {"products", {{"max_log10", r.max_log10_product}}}};
}

SalasUnilateralReport salas_unilateral_report_from_json(const Json& j) {
    SalasUnilateralReport r;
    r.verdict = verdict_from_string(text(j, "verdict"));
    r.horizon = count(j, "horizon");
    r.threshold = number(j, "threshold");
    const Json& w = field(j, "witness");
    r.first_crossing = optional_count(w, "first_crossing");
    r.argmax_n = count(w, "argmax_n");
    r.max_log10_product = number(field(j, "products"), "max_log10");
    return r;
}

Json to_json(const SalasBilateralReport& r) {
    return {{"test", "salas_bilateral"},
            {"verdict", to_string(r.verdict)},
            {"query", {{"epsilon", r.query.epsilon}, {"q", r.query.q}, {"horizon", r.query.horizon}}},
            {"witness", {{"n", optional_to_json(r.n)}}},
            {"products", {{"min_forward_log10", r.min_forward_log10}, {"max_backward_log10", r.max_backward_log10}}}};
}

SalasBilateralReport salas_bilateral_report_from_json(const Json& j) {
    SalasBilateralReport r;
    r.verdict = verdict_from_string(text(j, "verdict"));
    const Json& q = field(j, "query");
    r.query = {number(q, "epsilon"), integer(q, "q"), count(q, "horizon")};
    r.n = optional_count(field(j, "witness"), "n");
    const Json& p = field(j, "products");
    r.min_forward_log10 = number(p, "min_forward_log10");
    r.max_backward_log10 = number(p, "max_backward_log10");
    return r;
}

Json to_json(const RefutationCertificate& r) {
    return {{"test", "refute_conjecture"},
            {"verdict", r.violated == ConjectureCondition::Undetermined ? to_string(Verdict::UndeterminedAtHorizon)
                                                                        : to_string(Verdict::Violated)},
            {"violated_condition", to_string(r.violated)},
            {"alpha", {{"log10", r.alpha_log10}, {"unbounded", r.alpha_unbounded}, {"k", r.alpha_k}, {"j", r.alpha_j}}},
            {"witness",
             {{"k", r.witness.k}, {"j", r.witness.j}, {"log10_product", r.witness.log10_product}, {"N", r.witness.bound_n}}},
            {"reference_log10", r.reference_log10},
            {"chain_last_n", r.chain_last_n},
            {"w0", r.w0},
            {"products",
             {{"sup_backward_log10", r.sup_backward_log10}, {"forward_at_zero_log10", r.forward_at_zero_log10}}},
            {"j_range", r.j_range},
            {"n_max", r.n_max},
            {"note", r.note}};
}

RefutationCertificate refutation_certificate_from_json(const Json& j) {
    RefutationCertificate r;
    r.violated = condition_from_string(text(j, "violated_condition"));
    const Json& a = field(j, "alpha");
    r.alpha_log10 = number(a, "log10");
    r.alpha_unbounded = boolean(a, "unbounded");
    r.alpha_k = count(a, "k");
    r.alpha_j = integer(a, "j");
    const Json& w = field(j, "witness");
    r.witness = {count(w, "k"), integer(w, "j"), number(w, "log10_product"), number(w, "N")};
    r.reference_log10 = number(j, "reference_log10");
    r.chain_last_n = count(j, "chain_last_n");
    r.w0 = number(j, "w0");
    const Json& p = field(j, "products");
    r.sup_backward_log10 = numbers(p, "sup_backward_log10");
    r.forward_at_zero_log10 = numbers(p, "forward_at_zero_log10");
    r.j_range = integer(j, "j_range");
    r.n_max = count(j, "n_max");
    r.note = text(j, "note");
    return r;
}

namespace {

std::string_view to_string(WeakNullFailure f) noexcept {
    switch (f) {
        case WeakNullFailure::None:
            return "NONE";
        case WeakNullFailure::Norm:
            return "NORM";
        case WeakNullFailure::Coordinate:
            return "COORDINATE";
    }
    return "NONE";
}

WeakNullFailure failure_from_string(const std::string& s) {
    for (auto f : {WeakNullFailure::None, WeakNullFailure::Norm, WeakNullFailure::Coordinate}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    throw InputError("unknown weak-null failure '" + s + "'");
}

template <class T>
Json optional_rows(const std::vector<std::optional<T>>& rows) {
    Json out = Json::array();
    for (const auto& v : rows) {
        out.push_back(optional_to_json(v));
    }
    return out;
}

}  // namespace

Json to_json(const WeakNullReport& r) {
    return {{"passed", r.passed},
            {"failure", to_string(r.failure)},
            {"norms", r.norms},
            {"sup_norm", r.sup_norm},
            {"tracked", r.tracked},
            {"final_max_coordinate", r.final_max_coordinate},
            {"failing_position", optional_to_json(r.failing_position)},
            {"failing_index", optional_to_json(r.failing_index)},
            {"failing_value", r.failing_value}};
}

WeakNullReport weak_null_report_from_json(const Json& j) {
    WeakNullReport r;
    r.passed = boolean(j, "passed");
    r.failure = failure_from_string(text(j, "failure"));
    r.norms = numbers(j, "norms");
    r.sup_norm = number(j, "sup_norm");
    for (const Json& v : array(j, "tracked")) {
        r.tracked.push_back(v.get<long>());
    }
    r.final_max_coordinate = number(j, "final_max_coordinate");
    r.failing_position = optional_count(j, "failing_position");
    r.failing_index = optional_integer(j, "failing_index");
    r.failing_value = number(j, "failing_value");
    return r;
}

Json to_json(const CriterionReport& r) {
    Json c1_samples = Json::array();
    for (const WeakNullReport& s : r.cond1.samples) {
        c1_samples.push_back(to_json(s));
    }
    return {{"test", "criterion"},
            {"overall", r.overall},
            {"cond1",
             {{"passed", r.cond1.passed},
              {"failing_sample", optional_to_json(r.cond1.failing_sample)},
              {"samples", c1_samples}}},
            {"cond2",
             {{"passed", r.cond2.passed},
              {"failing_sample", optional_to_json(r.cond2.failing_sample)},
              {"observed_sup", r.cond2.observed_sup},
              {"scaling", r.cond2.scaling},
              {"tail_start", optional_rows(r.cond2.tail_start)},
              {"norms", r.cond2.norms}}},
            {"cond3",
             {{"passed", r.cond3.passed},
              {"failing_sample", optional_to_json(r.cond3.failing_sample)},
              {"final_residual_a", r.cond3.final_residual_a},
              {"max_residual_b", r.cond3.max_residual_b},
              {"scaling", r.cond3.scaling},
              {"residual_a", r.cond3.residual_a},
              {"residual_b", r.cond3.residual_b}}}};
}

CriterionReport criterion_report_from_json(const Json& j) {
    CriterionReport r;
    r.overall = boolean(j, "overall");
    const Json& c1 = field(j, "cond1");
    r.cond1.passed = boolean(c1, "passed");
    r.cond1.failing_sample = optional_count(c1, "failing_sample");
    for (const Json& s : array(c1, "samples")) {
        r.cond1.samples.push_back(weak_null_report_from_json(s));
    }
    const Json& c2 = field(j, "cond2");
    r.cond2.passed = boolean(c2, "passed");
    r.cond2.failing_sample = optional_count(c2, "failing_sample");
    r.cond2.observed_sup = number(c2, "observed_sup");
    r.cond2.scaling = numbers(c2, "scaling");
    for (const Json& v : array(c2, "tail_start")) {
        r.cond2.tail_start.push_back(v.is_null() ? std::nullopt : std::optional<std::size_t>(v.get<std::size_t>()));
    }
    r.cond2.norms = number_rows(c2, "norms");
    const Json& c3 = field(j, "cond3");
    r.cond3.passed = boolean(c3, "passed");
    r.cond3.failing_sample = optional_count(c3, "failing_sample");
    r.cond3.final_residual_a = number(c3, "final_residual_a");
    r.cond3.max_residual_b = number(c3, "max_residual_b");
    r.cond3.scaling = numbers(c3, "scaling");
    r.cond3.residual_a = number_rows(c3, "residual_a");
    r.cond3.residual_b = number_rows(c3, "residual_b");
    return r;
}

Json to_json(const TransitivityReport& r) {
    return {{"test", "transitivity"},
            {"verdict", to_string(r.verdict)},
            {"horizon", r.horizon},
            {"witness",
             {{"n", optional_to_json(r.n)},
              {"x", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"distance", r.witness_distance},
              {"orbit_norm", r.orbit_norm}}}};
}

TransitivityReport transitivity_report_from_json(const Json& j) {
    TransitivityReport r;
    r.verdict = verdict_from_string(text(j, "verdict"));
    r.horizon = count(j, "horizon");
    const Json& w = field(j, "witness");
    r.n = optional_count(w, "n");
    if (has(w, "x")) {
        r.witness = window_vector_from_json(w.at("x"), Axis::Integers);
    }
    r.witness_distance = number(w, "distance");
    r.orbit_norm = number(w, "orbit_norm");
    return r;
}

Json to_json(const MapClass& c) {
    Json points = Json::array();
    for (const FixedPoint& p : c.fixed_points) {
        points.push_back({{"value", p.at_infinity ? Json("infinity") : complex_to_json(p.value)},
                          {"location", to_string(p.location)}});
    }
    return {{"test", "classify"},
            {"kind", to_string(c.kind)},
            {"fixed_points", points},
            {"automorphism", c.automorphism},
            {"has_interior_fixed_point", c.has_interior_fixed_point},
            {"trace_squared", complex_to_json(c.trace_squared)}};
}

MapClass map_class_from_json(const Json& j) {
    MapClass c;
    c.kind = map_kind_from_string(text(j, "kind"));
    for (const Json& p : array(j, "fixed_points")) {
        FixedPoint fp;
        const Json& v = field(p, "value");
        fp.at_infinity = v == "infinity";
        if (!fp.at_infinity) {
            fp.value = complex_from_json(v, "fixed point");
        }
        fp.location = location_from_string(text(p, "location"));
        c.fixed_points.push_back(fp);
    }
    c.automorphism = boolean(j, "automorphism");
    c.has_interior_fixed_point = boolean(j, "has_interior_fixed_point");
    c.trace_squared = complex_from_json(field(j, "trace_squared"), "trace_squared");
    return c;
}

Json to_json(const HalfPlaneForm& h) {
    return {{"test", "half_plane"},
            {"translation", complex_to_json(h.translation)},
            {"rotation", complex_to_json(h.rotation)},
            {"automorphism", h.automorphism},
            {"residual", h.residual}};
}

HalfPlaneForm half_plane_form_from_json(const Json& j) {
    return {complex_from_json(field(j, "translation"), "translation"), complex_from_json(field(j, "rotation"), "rotation"),
            boolean(j, "automorphism"), number(j, "residual")};
}

Json to_json(const ParabolicIdentityReport& r) {
    return {{"test", "identity_check"},
            {"a", complex_to_json(r.a)},
            {"z", complex_to_json(r.z)},
            {"n", r.n},
            {"modulus", {{"lhs", r.modulus_lhs}, {"rhs", r.modulus_rhs}, {"error", r.modulus_error}}},
            {"difference",
             {{"lhs", complex_to_json(r.difference_lhs)},
              {"rhs", complex_to_json(r.difference_rhs)},
              {"error", r.difference_error}}}};
}

ParabolicIdentityReport parabolic_identity_report_from_json(const Json& j) {
    ParabolicIdentityReport r;
    r.a = complex_from_json(field(j, "a"), "a");
    r.z = complex_from_json(field(j, "z"), "z");
    r.n = count(j, "n");
    const Json& m = field(j, "modulus");
    r.modulus_lhs = number(m, "lhs");
    r.modulus_rhs = number(m, "rhs");
    r.modulus_error = number(m, "error");
    const Json& d = field(j, "difference");
    r.difference_lhs = complex_from_json(field(d, "lhs"), "lhs");
    r.difference_rhs = complex_from_json(field(d, "rhs"), "rhs");
    r.difference_error = number(d, "error");
    return r;
}

Json to_json(const GrowthEstimateReport& r) {
    return {{"test", "growth_estimate"}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}, {"tight", r.tight}};
}

GrowthEstimateReport growth_estimate_report_from_json(const Json& j) {
    return {number(j, "lhs"), number(j, "rhs"), boolean(j, "holds"), boolean(j, "tight")};
}

Json to_json(const OrbitDecayReport& r) {
    return {{"test", "orbit_decay"},
            {"a", complex_to_json(r.a)},
            {"z", complex_to_json(r.z)},
            {"fitted_m", r.fitted_m},
            {"first_half_max", r.first_half_max},
            {"second_half_max", r.second_half_max},
            {"bounded", r.bounded},
            {"distances", r.distances}};
}

OrbitDecayReport orbit_decay_report_from_json(const Json& j) {
    OrbitDecayReport r;
    r.a = complex_from_json(field(j, "a"), "a");
    r.z = complex_from_json(field(j, "z"), "z");
    r.fitted_m = number(j, "fitted_m");
    r.first_half_max = number(j, "first_half_max");
    r.second_half_max = number(j, "second_half_max");
    r.bounded = boolean(j, "bounded");
    r.distances = numbers(j, "distances");
    return r;
}

Json to_json(const ObstructionReport& r) {
    return {{"test", "fixed_point_obstruction"},
            {"fixed_point", complex_to_json(r.fixed_point)},
            {"value", complex_to_json(r.value)},
            {"iterations", r.iterations},
            {"max_deviation", r.max_deviation}};
}

ObstructionReport obstruction_report_from_json(const Json& j) {
    return {complex_from_json(field(j, "fixed_point"), "fixed_point"), complex_from_json(field(j, "value"), "value"),
            count(j, "iterations"), number(j, "max_deviation")};
}

Json to_json(const ClusterReport& r) {
    return {{"test", "constant_cluster"}, {"steps", r.steps}, {"spreads", r.spreads}, {"decreasing", r.decreasing}};
}

ClusterReport cluster_report_from_json(const Json& j) {
    ClusterReport r;
    for (const Json& v : array(j, "steps")) {
        r.steps.push_back(v.get<std::uint64_t>());
    }
    r.spreads = numbers(j, "spreads");
    r.decreasing = boolean(j, "decreasing");
    return r;
}

}  // namespace hyperlab
