#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "hyperlab/error.hpp"
#include "hyperlab/shift.hpp"
#include "support.hpp"

using namespace hyperlab;
using hyperlab::testing::Rng;

namespace {

const WeightSequence kTwoN = WeightSequence::constant(Axis::Natural, 2.0);
const WeightSequence kTwoZ = WeightSequence::constant(Axis::Integers, 2.0);
const WeightSequence kHalfDouble = WeightSequence::piecewise(0.5, 2.0);

bool same_coeffs(const WindowVector& x, const testing::Sparse& y, double rel) {
    const auto xs = testing::to_sparse(x);
    for (const auto& [j, v] : y) {
        if (std::abs(x[j] - v) > rel * std::abs(v)) {
            return false;
        }
    }
    for (const auto& [j, v] : xs) {
        if (!y.contains(j) && v != Complex{}) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("weight rules") {
    CHECK(kHalfDouble(0) == 0.5);
    CHECK(kHalfDouble(1) == 2.0);
    CHECK(kHalfDouble(-7) == 0.5);
    const auto per = WeightSequence::periodic(Axis::Integers, {1.0, 2.0, 3.0});
    CHECK(per(0) == 1.0);
    CHECK(per(4) == 2.0);
    CHECK(per(-1) == 3.0);
    CHECK(per.bound() == 3.0);
    CHECK_THROWS_AS(kTwoN(0), InputError);
    CHECK_THROWS_AS(WeightSequence::constant(Axis::Natural, 0.0), InputError);
    CHECK_THROWS_AS(WeightSequence::periodic(Axis::Natural, {}), InputError);
    CHECK_THROWS_AS(WeightSequence::constant(Axis::Natural, std::numeric_limits<double>::infinity()), InputError);
    const WeightSequence ex(Axis::Natural, WeightSequence::Explicit{{{1, 4.0}, {3, 0.25}}, 1.5});
    CHECK(ex(1) == 4.0);
    CHECK(ex(2) == 1.5);
    CHECK(ex(3) == 0.25);
    CHECK(ex.bound() == 4.0);
    CHECK(ex.log_weight(3) == doctest::Approx(std::log(0.25)));
}

TEST_CASE("apply examples") {
    const BackwardShift t(kTwoN);
    const auto y = apply(t, WindowVector::basis(3, Axis::Natural, 2.0));
    CHECK(y[2] == Complex{2.0});
    CHECK(norm(y) == 2.0);
    CHECK(apply(t, WindowVector::basis(1, Axis::Natural, 2.0)).is_zero());
    const auto z = apply(BackwardShift(kHalfDouble), WindowVector::basis(0, Axis::Integers, 2.0));
    CHECK(z[-1] == Complex{0.5});
    CHECK(norm(z) == 0.5);
    CHECK_THROWS_AS(apply(t, WindowVector::basis(0, Axis::Integers, 2.0)), InputError);
}

TEST_CASE("apply_power examples") {
    const BackwardShift t(kTwoN);
    const auto x = WindowVector::basis(5, Axis::Natural, 2.0);
    CHECK(apply_power(t, x, 0) == x);
    const auto y = apply_power(t, x, 3);
    CHECK(y[2] == Complex{8.0});
    CHECK(norm(y) == 8.0);
    CHECK(apply_power(t, WindowVector::basis(2, Axis::Natural, 2.0), 3).is_zero());
}

TEST_CASE("right_inverse_power examples") {
    const auto s = right_inverse_power(BackwardShift(kTwoN), WindowVector::basis(1, Axis::Natural, 2.0), 3);
    CHECK(s[4] == Complex{0.125});
    CHECK(norm(s) == 0.125);

    const BackwardShift unit(WeightSequence::constant(Axis::Integers, 1.0));
    const WindowVector z(IndexWindow::make(-2, 1, Axis::Integers), {1.0, Complex{0, 2}, -3.0, 0.5}, 2.0);
    const auto s5 = right_inverse_power(unit, z, 5);
    for (long j = -2; j <= 1; ++j) {
        CHECK(s5[j + 5] == z[j]);
    }
}

TEST_CASE("right_inverse_power names the index on underflow") {
    const BackwardShift t(WeightSequence::constant(Axis::Natural, 1e10));
    try {
        (void)right_inverse_power(t, WindowVector::basis(3, Axis::Natural, 2.0), 40);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
}

TEST_CASE("salas_unilateral examples") {
    const auto two = salas_unilateral(kTwoN, 40, 1e6);
    CHECK(two.verdict == Verdict::EvidenceHypercyclic);
    CHECK(two.first_crossing == 20u);
    CHECK(two.max_log10_product == doctest::Approx(40 * std::log10(2.0)).epsilon(1e-14));

    const auto one = salas_unilateral(WeightSequence::constant(Axis::Natural, 1.0), 40, 1e6);
    CHECK(one.verdict == Verdict::UndeterminedAtHorizon);
    CHECK(one.max_log10_product == 0.0);

    const auto half = salas_unilateral(WeightSequence::constant(Axis::Natural, 0.5), 40, 1e6);
    CHECK(half.verdict == Verdict::UndeterminedAtHorizon);
    CHECK(half.argmax_n == 1u);
    CHECK(half.max_log10_product == doctest::Approx(std::log10(0.5)));

    CHECK_THROWS_AS(salas_unilateral(kTwoZ, 10, 10.0), InputError);
}

TEST_CASE("salas_bilateral examples") {
    const auto r = salas_bilateral(kHalfDouble, {0.1, 2, 64});
    REQUIRE(r.verdict == Verdict::EvidenceHypercyclic);
    CHECK(r.n == 6u);
    CHECK(r.min_forward_log10 == doctest::Approx(4 * std::log10(2.0)));
    CHECK(r.max_backward_log10 == doctest::Approx(-4 * std::log10(2.0)));
    CHECK(testing::brute_force_bilateral(kHalfDouble, 0.1, 2, 64) == 6u);

    CHECK(salas_bilateral(WeightSequence::constant(Axis::Integers, 1.0), {0.1, 2, 64}).verdict ==
          Verdict::UndeterminedAtHorizon);
    CHECK(salas_bilateral(kTwoZ, {0.1, 1, 64}).verdict == Verdict::UndeterminedAtHorizon);
}

TEST_CASE("salas_bilateral is independent of thread count") {
    Rng rng(21);
    for (int i = 0; i < 40; ++i) {
        const auto w = testing::random_weights(rng, Axis::Integers);
        const SalasQuery q{rng.uniform(0.05, 0.5), rng.integer(1, 4), 48};
        CHECK(salas_bilateral(w, q, 1) == salas_bilateral(w, q, 4));
    }
}

TEST_CASE("property: bilateral verdict agrees with brute force") {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        const double lo = rng.uniform(0.3, 1.0);
        const double hi = rng.uniform(1.0, 3.0);
        const auto w = WeightSequence::piecewise(lo, hi, rng.integer(-3, 3));
        const double eps = rng.uniform(0.01, 0.5);
        const long q = rng.integer(1, 4);
        const auto r = salas_bilateral(w, {eps, q, 64});
        const std::size_t oracle = testing::brute_force_bilateral(w, eps, q, 64);
        if (oracle == 0) {
            CHECK(r.verdict == Verdict::UndeterminedAtHorizon);
        } else {
            CHECK(r.n == oracle);
        }
    }
}

TEST_CASE("property: apply_power matches repeated single steps") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        const Axis axis = rng.unit() < 0.5 ? Axis::Natural : Axis::Integers;
        const auto w = testing::random_weights(rng, axis);
        const auto x = testing::random_vector(rng, axis, 2.0, axis == Axis::Natural ? 1 : -30, 30);
        const auto n = static_cast<std::size_t>(rng.integer(0, 50));
        CHECK(same_coeffs(apply_power(BackwardShift(w), x, n),
                          testing::shift_power(w, testing::to_sparse(x), n), 1e-12));
    }
}

TEST_CASE("property: powers factor") {
    Rng rng(24);
    for (int i = 0; i < 300; ++i) {
        const Axis axis = rng.unit() < 0.5 ? Axis::Natural : Axis::Integers;
        const BackwardShift t(testing::random_weights(rng, axis));
        const auto x = testing::random_vector(rng, axis, 2.0, axis == Axis::Natural ? 1 : -30, 30);
        const auto m = static_cast<std::size_t>(rng.integer(0, 25));
        const auto n = static_cast<std::size_t>(rng.integer(0, 25));
        const auto whole = apply_power(t, x, m + n);
        const auto split = apply_power(t, apply_power(t, x, n), m);
        CHECK(same_coeffs(whole, testing::to_sparse(split), 1e-12));
    }
}

TEST_CASE("property: T^k S^k z = z") {
    Rng rng(25);
    for (int i = 0; i < 500; ++i) {
        const Axis axis = rng.unit() < 0.5 ? Axis::Natural : Axis::Integers;
        const BackwardShift t(testing::random_weights(rng, axis));
        const auto z = testing::random_vector(rng, axis, 2.0, axis == Axis::Natural ? 1 : -30, 30);
        const auto k = static_cast<std::size_t>(rng.integer(1, 40));
        const auto back = apply_power(t, right_inverse_power(t, z, k), k);
        CHECK(same_coeffs(back, testing::to_sparse(z), 1e-12));
    }
}

TEST_CASE("property: unilateral report agrees with direct products") {
    Rng rng(26);
    for (int i = 0; i < 100; ++i) {
        const auto w = testing::random_weights(rng, Axis::Natural);
        const auto horizon = static_cast<std::size_t>(rng.integer(1, 200));
        const double threshold = std::pow(10.0, rng.uniform(-1.0, 6.0));
        const auto r = salas_unilateral(w, horizon, threshold);
        long double best = 0.0L;
        std::size_t arg = 0;
        std::optional<std::size_t> crossing;
        long double p = 1.0L;
        for (std::size_t n = 1; n <= horizon; ++n) {
            p *= w(static_cast<long>(n));
            if (p > best) {
                best = p;
                arg = n;
            }
            if (!crossing && p >= threshold) {
                crossing = n;
            }
        }
        CHECK(r.max_log10_product == doctest::Approx(static_cast<double>(std::log10(best))).epsilon(1e-12));
        CHECK(r.argmax_n == arg);
        CHECK(r.first_crossing == crossing);
        CHECK((r.verdict == Verdict::EvidenceHypercyclic) == crossing.has_value());
    }
}
