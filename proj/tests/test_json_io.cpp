#include <doctest.h>

#include <vector>

#include "hyperlab/error.hpp"
#include "hyperlab/json_io.hpp"
#include "support.hpp"

using namespace hyperlab;
using hyperlab::testing::Rng;

namespace {

// print, parse back, and compare values; also reprint to catch lossy fields.
template <class T, class Reader>
void round_trip(const T& value, Reader read) {
    const std::string text = to_json(value).dump();
    const T back = read(Json::parse(text));
    CHECK(back == value);
    CHECK(to_json(back).dump() == text);
}

}  // namespace

TEST_CASE("complex values accept numbers and pairs") {
    CHECK(complex_from_json(Json(2.5)) == Complex{2.5});
    CHECK(complex_from_json(Json::array({1.0, -2.0})) == Complex{1.0, -2.0});
    CHECK_THROWS_AS(complex_from_json(Json("x")), InputError);
    CHECK_THROWS_AS(complex_from_json(Json::array({1.0})), InputError);
    CHECK(complex_to_json(Complex{-0.0, -0.0}).dump() == "[0.0,0.0]");
}

TEST_CASE("window vector schema") {
    const WindowVector x(IndexWindow::make(-1, 1, Axis::Integers), {1.0, Complex{0, 2}, -3.0}, 2.0);
    const Json j = to_json(x);
    CHECK(j["p"] == 2.0);
    CHECK(j["lo"] == -1);
    CHECK(j["hi"] == 1);
    CHECK(j["coeffs"].size() == 3);
    CHECK(window_vector_from_json(j, Axis::Natural) == x);

    Json no_axis = j;
    no_axis.erase("axis");
    no_axis["lo"] = 1;
    no_axis["hi"] = 3;
    CHECK(window_vector_from_json(no_axis, Axis::Natural).axis() == Axis::Natural);

    Json missing = j;
    missing.erase("coeffs");
    CHECK_THROWS_WITH_AS(window_vector_from_json(missing, Axis::Integers), "missing field 'coeffs'", InputError);
}

TEST_CASE("weight sequence schema") {
    const std::vector<WeightSequence> all{
        WeightSequence::constant(Axis::Natural, 2.0),
        WeightSequence::periodic(Axis::Integers, {0.5, 1.5, 2.0}),
        WeightSequence::piecewise(0.5, 2.0, 3),
        WeightSequence(Axis::Natural, WeightSequence::Explicit{{{1, 0.5}, {4, 3.0}}, 1.25}),
    };
    for (const auto& w : all) {
        const auto back = weight_sequence_from_json(Json::parse(to_json(w).dump()));
        CHECK(back.axis() == w.axis());
        for (long j = w.axis() == Axis::Natural ? 1 : -10; j <= 10; ++j) {
            CHECK(back(j) == w(j));
        }
        CHECK(to_json(back) == to_json(w));
    }
    CHECK_THROWS_AS(weight_sequence_from_json(Json::parse(R"({"axis":"N","rule":{"kind":"spiral"}})")), InputError);
    CHECK_THROWS_AS(weight_sequence_from_json(Json::parse(R"({"axis":"Q","rule":{"kind":"constant","value":1}})")),
                    InputError);
    CHECK_THROWS_AS(weight_sequence_from_json(Json::parse(R"({"axis":"N","rule":{"kind":"constant","value":-1}})")),
                    InputError);
}

TEST_CASE("criterion instance schema") {
    const Json j = Json::parse(R"({
        "weights": {"axis": "N", "rule": {"kind": "constant", "value": 2}},
        "y_samples": [{"p": 2, "lo": 1, "hi": 1, "coeffs": [[1, 0]]}],
        "z_samples": [{"p": 2, "lo": 2, "hi": 3, "coeffs": [1, [0, 1]]}],
        "nk": [1, 2, 3],
        "M": 10,
        "s_index": "k"
    })");
    const auto inst = criterion_instance_from_json(j);
    CHECK(inst.nk == std::vector<std::size_t>{1, 2, 3});
    CHECK(inst.s_index == RightInverseIndex::ByK);
    CHECK(inst.z_samples[0][3] == Complex{0, 1});
    const auto again = criterion_instance_from_json(to_json(inst));
    CHECK(again.y_samples == inst.y_samples);
    CHECK(again.z_samples == inst.z_samples);
    CHECK(again.m == inst.m);

    Json missing = j;
    missing.erase("nk");
    CHECK_THROWS_WITH_AS(criterion_instance_from_json(missing), "missing field 'nk'", InputError);
    Json bad = j;
    bad["nk"] = Json::array({3, 1});
    CHECK_THROWS_AS(criterion_instance_from_json(bad), InputError);
}

TEST_CASE("maps and functions") {
    const MoebiusMap m(Complex{1, 1}, 0.5, Complex{0, -0.25}, 3.0);
    const auto back = moebius_from_json(Json::parse(to_json(m).dump()));
    CHECK(back.a() == m.a());
    CHECK(back.d() == m.d());
    round_trip(HardyFunction({1.0, Complex{0, 2}, 0.125}), hardy_function_from_json);
}

TEST_CASE("every report round-trips") {
    round_trip(salas_unilateral(WeightSequence::constant(Axis::Natural, 2.0), 40, 1e6), salas_unilateral_report_from_json);
    round_trip(salas_unilateral(WeightSequence::constant(Axis::Natural, 1.0), 40, 1e6), salas_unilateral_report_from_json);
    round_trip(salas_bilateral(WeightSequence::piecewise(0.5, 2.0), {0.1, 2, 64}), salas_bilateral_report_from_json);
    round_trip(salas_bilateral(WeightSequence::constant(Axis::Integers, 1.0), {0.1, 2, 8}),
               salas_bilateral_report_from_json);
    for (double c : {0.5, 1.5, 2.0}) {
        round_trip(refute_conjecture(WeightSequence::constant(Axis::Integers, c), std::vector<std::size_t>{1, 2, 4, 8, 16},
                                     1000, 160),
                   refutation_certificate_from_json);
    }

    std::vector<WindowVector> basis;
    for (long j = 1; j <= 3; ++j) {
        basis.push_back(WindowVector::basis(j, Axis::Natural, 2.0));
    }
    const CriterionInstance inst{BackwardShift(WeightSequence::constant(Axis::Natural, 2.0)), basis, basis,
                                 {1, 2, 3, 4, 5}, 10.0, RightInverseIndex::ByNk};
    round_trip(check_criterion(inst), criterion_report_from_json);
    const CriterionInstance flat{BackwardShift(WeightSequence::constant(Axis::Integers, 2.0)),
                                 {WindowVector::basis(0, Axis::Integers, 2.0)},
                                 {WindowVector::basis(0, Axis::Integers, 2.0)},
                                 {1, 2, 3, 4, 5, 6, 7, 8},
                                 10.0,
                                 RightInverseIndex::ByK};
    round_trip(check_criterion(flat), criterion_report_from_json);

    const auto e1 = WindowVector::basis(1, Axis::Natural, 2.0);
    const BackwardShift two(WeightSequence::constant(Axis::Natural, 2.0));
    round_trip(transitivity_witness(two, e1, 0.5, WeakNeighborhood(e1, {1}, 0.1), 64, 1),
               transitivity_report_from_json);
    round_trip(transitivity_witness(BackwardShift(WeightSequence::constant(Axis::Natural, 1.0)), e1 - e1, 0.05,
                                    WeakNeighborhood(e1, {1}, 0.1), 8),
               transitivity_report_from_json);

    round_trip(classify(MoebiusMap::parabolic(1.0)), map_class_from_json);
    round_trip(classify(MoebiusMap(1.0, 0.0, -1.0, 2.0)), map_class_from_json);
    round_trip(classify(MoebiusMap::rotation(0.7)), map_class_from_json);
    round_trip(to_half_plane(MoebiusMap::parabolic(Complex{1, 2})), half_plane_form_from_json);
    round_trip(parabolic_identity_check(Complex{1, 0.5}, Complex{0.2, 0.3}, 17), parabolic_identity_report_from_json);
    round_trip(growth_estimate_check(HardyFunction({1.0, 2.0}), 0.5, Complex{0, 0.3}), growth_estimate_report_from_json);
    round_trip(orbit_decay(HardyFunction::identity(), 1.0, 0.5, 50), orbit_decay_report_from_json);
    round_trip(fixed_point_obstruction(MoebiusMap(1.0, 0.0, -1.0, 2.0), HardyFunction({1.0, 1.0}), 20),
               obstruction_report_from_json);
    round_trip(constant_cluster_check(HardyFunction::identity(), 1.0, {0.0, 0.5}, 64), cluster_report_from_json);
}

TEST_CASE("property: random window vectors round-trip") {
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        const Axis axis = rng.unit() < 0.5 ? Axis::Natural : Axis::Integers;
        const auto x = testing::random_vector(rng, axis, rng.uniform(1.0, 5.0), axis == Axis::Natural ? 1 : -50, 50);
        CHECK(window_vector_from_json(Json::parse(to_json(x).dump()), Axis::Natural) == x);
    }
}
