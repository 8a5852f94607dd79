#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperlab/error.hpp"
#include "hyperlab/shift.hpp"
#include "support.hpp"

using namespace hyperlab;
using hyperlab::testing::Rng;

namespace {

std::vector<std::size_t> doubling(std::size_t max) {
    std::vector<std::size_t> nk;
    for (std::size_t n = 1; n <= max; n *= 2) {
        nk.push_back(n);
    }
    return nk;
}

RefutationCertificate run(const WeightSequence& w, const std::vector<std::size_t>& nk, unsigned threads = 1) {
    return refute_conjecture(w, nk, 1000, 10 * static_cast<long>(nk.back()), threads);
}

}  // namespace

TEST_CASE("constant 2 violates condition 1") {
    const auto r = run(WeightSequence::constant(Axis::Integers, 2.0), doubling(256));
    CHECK(r.violated == ConjectureCondition::Cond1);
    // Backward products over n_k weights are 2^{n_k}.
    REQUIRE(r.sup_backward_log10.size() == 9);
    CHECK(r.sup_backward_log10.back() == doctest::Approx(256 * std::log10(2.0)));
    CHECK(r.witness.log10_product > r.sup_backward_log10.front() + 3.0);
}

TEST_CASE("constant 1/2 and constant 1 violate condition 2") {
    for (double c : {0.5, 1.0}) {
        CAPTURE(c);
        const auto r = run(WeightSequence::constant(Axis::Integers, c), doubling(64));
        CHECK(r.violated == ConjectureCondition::Cond2);
        CHECK(r.w0 == c);
        CHECK(r.w0 > static_cast<double>(r.chain_last_n));
        CHECK(r.forward_at_zero_log10.back() == doctest::Approx(65 * std::log10(c)));
    }
}

TEST_CASE("a short n_k list with growth still under way is undetermined") {
    // Backward sups 1.5, 1.5^2, 1.5^4 grow by less than N_max but are still rising.
    const auto r = refute_conjecture(WeightSequence::constant(Axis::Integers, 1.5), std::vector<std::size_t>{1, 2, 4},
                                     1000, 40);
    CHECK(r.violated == ConjectureCondition::Undetermined);
}

TEST_CASE("forward products that stop growing violate condition 2 before alpha settles") {
    // w = 1.1 up to index 5 and 0.9 after: backward sups still rise at n_k = 64
    // (1.1^64 < 1000), but w_0 ... w_{n_k} = 1.1^6 0.9^{n_k - 5} has been shrinking.
    const auto r = run(WeightSequence::piecewise(1.1, 0.9, 5), doubling(64));
    CHECK(r.violated == ConjectureCondition::Cond2);
    CHECK(r.witness.bound_n == 0.0);
    CHECK(r.witness.k == 7u);
    CHECK(r.witness.log10_product == doctest::Approx(6 * std::log10(1.1) + 59 * std::log10(0.9)));
    CHECK(r.reference_log10 == doctest::Approx(5 * std::log10(1.1)));
}

TEST_CASE("refute_conjecture validates input") {
    const auto w = WeightSequence::constant(Axis::Integers, 2.0);
    CHECK_THROWS_AS(refute_conjecture(w, std::vector<std::size_t>{}, 1000, 10), InputError);
    CHECK_THROWS_AS(refute_conjecture(w, std::vector<std::size_t>{2, 2}, 1000, 10), InputError);
    CHECK_THROWS_AS(refute_conjecture(w, std::vector<std::size_t>{1, 4}, 1000, 2), InputError);
    CHECK_THROWS_AS(refute_conjecture(WeightSequence::constant(Axis::Natural, 2.0), std::vector<std::size_t>{1}, 1000, 10),
                    InputError);
}

TEST_CASE("property: the certificate never reports both conditions consistent") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        const auto w = testing::random_weights(rng, Axis::Integers);
        const auto nk = doubling(static_cast<std::size_t>(1) << rng.integer(3, 8));
        const auto r = run(w, nk);
        CAPTURE(i);
        if (r.violated == ConjectureCondition::Cond2 && r.witness.bound_n == 0.0) {
            // Stalled forward growth: the last product is no larger than an earlier one.
            CHECK(r.witness.k == nk.size());
            CHECK(r.witness.log10_product <= r.reference_log10 + 1e-9);
            CHECK(r.forward_at_zero_log10.back() == r.witness.log10_product);
        } else if (r.violated == ConjectureCondition::Cond2) {
            // The chain forced w_0 > N up to chain_last_n, and at the next scale no
            // forward product clears alpha N.
            CHECK(r.w0 > static_cast<double>(r.chain_last_n));
            CHECK(r.witness.bound_n == static_cast<double>(r.chain_last_n + 1));
            for (double f : r.forward_at_zero_log10) {
                CHECK(f <= r.reference_log10 + 1e-9);
            }
        }
        if (r.violated == ConjectureCondition::Cond1) {
            CHECK(r.witness.log10_product > r.sup_backward_log10.front());
        }
        CHECK(run(w, nk, 4) == r);
    }
}

TEST_CASE("property: backward sup matches direct products") {
    Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        const auto w = testing::random_weights(rng, Axis::Integers);
        const std::vector<std::size_t> nk{1, 3, 7};
        const long jr = 20;
        const auto r = refute_conjecture(w, nk, 1000, jr);
        for (std::size_t k = 0; k < nk.size(); ++k) {
            long double best = 0.0L;
            for (long j = -jr; j <= jr; ++j) {
                best = std::max(best, testing::weight_product(w, j - static_cast<long>(nk[k]) + 1, j));
            }
            CHECK(r.sup_backward_log10[k] == doctest::Approx(static_cast<double>(std::log10(best))).epsilon(1e-12));
            CHECK(r.forward_at_zero_log10[k] ==
                  doctest::Approx(static_cast<double>(std::log10(testing::weight_product(w, 0, static_cast<long>(nk[k])))))
                      .epsilon(1e-12));
        }
    }
}
