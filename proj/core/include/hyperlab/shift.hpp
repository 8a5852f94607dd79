#pragma once

// Weighted backward shifts T e_j = w_j e_{j-1} on l^p(N) and l^p(Z), their
// weighted forward right inverses, the Salas hypercyclicity scans and the
// finite-data refutation certificate for the two-condition bilateral
// weak-hypercyclicity conjecture.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hyperlab/seqspace.hpp"
#include "hyperlab/verdict.hpp"

namespace hyperlab {

/// Positive bounded weights (w_j). Every rule defines w_j for every index on its axis.
class WeightSequence {
public:
    struct Constant {
        double value;
    };
    /// w_j = values[j mod L], anchored at j = 0 (non-negative remainder).
    struct Periodic {
        std::vector<double> values;
    };
    /// w_j = neg_value for j <= breakpoint, pos_value otherwise.
    struct Piecewise {
        double neg_value;
        double pos_value;
        long breakpoint = 0;
    };
    /// Listed weights, `tail` everywhere else.
    struct Explicit {
        std::map<long, double> values;
        double tail;
    };
    using Rule = std::variant<Constant, Periodic, Piecewise, Explicit>;

    WeightSequence(Axis axis, Rule rule);

    static WeightSequence constant(Axis axis, double value) { return {axis, Constant{value}}; }
    static WeightSequence periodic(Axis axis, std::vector<double> values) { return {axis, Periodic{std::move(values)}}; }
    static WeightSequence piecewise(double neg_value, double pos_value, long breakpoint = 0) {
        return {Axis::Integers, Piecewise{neg_value, pos_value, breakpoint}};
    }

    Axis axis() const noexcept { return axis_; }
    const Rule& rule() const noexcept { return rule_; }
    /// sup_j w_j.
    double bound() const noexcept { return bound_; }

    /// w_j. Throws InputError for j < 1 on the natural axis.
    double operator()(long j) const;
    double log_weight(long j) const;

private:
    Axis axis_;
    Rule rule_;
    double bound_ = 0.0;
};

class BackwardShift {
public:
    explicit BackwardShift(WeightSequence weights) : weights_(std::move(weights)) {}

    const WeightSequence& weights() const noexcept { return weights_; }
    Axis axis() const noexcept { return weights_.axis(); }
    bool unilateral() const noexcept { return axis() == Axis::Natural; }

private:
    WeightSequence weights_;
};

/// (Tx)_{j-1} = w_j x_j. On the natural axis the image of e_1 is zero.
WindowVector apply(const BackwardShift& t, const WindowVector& x);

/// T^n x via (T^n x)_{j-n} = (w_j w_{j-1} ... w_{j-n+1}) x_j.
WindowVector apply_power(const BackwardShift& t, const WindowVector& x, std::size_t n);

/// S^k z for the weighted forward shift S e_j = e_{j+1} / w_{j+1}, so that
/// T^k S^k z = z. Throws NumericError naming the source index if a weight
/// product leaves the normal double range.
WindowVector right_inverse_power(const BackwardShift& t, const WindowVector& z, std::size_t k);

struct SalasUnilateralReport {
    Verdict verdict = Verdict::UndeterminedAtHorizon;
    std::size_t horizon = 0;
    double threshold = 0.0;
    std::optional<std::size_t> first_crossing;  ///< smallest n with w_1...w_n >= threshold
    std::size_t argmax_n = 1;                   ///< smallest n attaining the max product
    double max_log10_product = 0.0;

    friend bool operator==(const SalasUnilateralReport&, const SalasUnilateralReport&) = default;
};

/// Running products w_1...w_n for n <= horizon, accumulated in log space.
SalasUnilateralReport salas_unilateral(const WeightSequence& w, std::size_t horizon, double threshold);

struct SalasQuery {
    double epsilon = 0.1;
    long q = 1;
    std::size_t horizon = 64;

    friend bool operator==(const SalasQuery&, const SalasQuery&) = default;
};

struct SalasBilateralReport {
    Verdict verdict = Verdict::UndeterminedAtHorizon;
    SalasQuery query;
    std::optional<std::size_t> n;  ///< smallest qualifying n
    /// Extremes over |j| < q at the returned n (or at the horizon when undetermined):
    /// min_j prod_{s=1}^{n} w_{j+s} and max_j prod_{s=0}^{n-1} w_{j-s}.
    double min_forward_log10 = 0.0;
    double max_backward_log10 = 0.0;

    friend bool operator==(const SalasBilateralReport&, const SalasBilateralReport&) = default;
};

/// Smallest n <= horizon with prod_{s=1}^{n} w_{j+s} > 1/eps and
/// prod_{s=0}^{n-1} w_{j-s} < eps for every |j| < q.
SalasBilateralReport salas_bilateral(const WeightSequence& w, const SalasQuery& query, unsigned threads = 1);

enum class ConjectureCondition { Cond1, Cond2, Undetermined };

struct RefutationWitness {
    std::size_t k = 0;          ///< 1-based position in n_k
    long j = 0;
    double log10_product = 0.0;
    double bound_n = 0.0;       ///< the scale N at which the witness was read; 0 for a stalled forward product

    friend bool operator==(const RefutationWitness&, const RefutationWitness&) = default;
};

struct RefutationCertificate {
    ConjectureCondition violated = ConjectureCondition::Undetermined;
    /// Set when the backward products outgrow every sampled scale.
    bool alpha_unbounded = false;
    /// Observed max over k and |j| <= j_range of w_j w_{j-1} ... w_{j-n_k+1}.
    double alpha_log10 = 0.0;
    std::size_t alpha_k = 0;
    long alpha_j = 0;
    RefutationWitness witness;
    /// log10 of the bound the witness product is measured against.
    double reference_log10 = 0.0;
    /// Largest N for which the chain (forward product > alpha N, reversed product <= alpha)
    /// forced w_0 > N. Zero when the chain never fired.
    std::uint64_t chain_last_n = 0;
    double w0 = 0.0;
    std::vector<double> sup_backward_log10;  ///< per k, max over j
    std::vector<double> forward_at_zero_log10;  ///< per k, log10(w_0 w_1 ... w_{n_k})
    long j_range = 0;
    std::uint64_t n_max = 0;
    std::string note;

    friend bool operator==(const RefutationCertificate&, const RefutationCertificate&) = default;
};

/// Replays the impossibility argument on finite data and returns the first
/// inconsistency: unbounded backward products (condition 1), forward
/// products at j = 0 capped by alpha * N or no longer growing while alpha is
/// still climbing (condition 2), or Undetermined.
RefutationCertificate refute_conjecture(const WeightSequence& w, std::span<const std::size_t> nk, std::uint64_t n_max,
                                        long j_range, unsigned threads = 1);

std::string_view to_string(ConjectureCondition c) noexcept;
ConjectureCondition condition_from_string(std::string_view s);

}  // namespace hyperlab
