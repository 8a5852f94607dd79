#pragma once

// Sampled checks of the three hypotheses of the weak hypercyclicity criterion
// for backward shifts, and a constructive witness search for T^n G meeting a
// weak neighborhood W.

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperlab/seqspace.hpp"
#include "hyperlab/shift.hpp"
#include "hyperlab/verdict.hpp"

namespace hyperlab {

/// Which power of the right inverse plays S_k: S^{n_k} (matches the
/// T^{n_k} S_{n_k} z -> z reading) or S^k.
enum class RightInverseIndex { ByNk, ByK };

struct CriterionInstance {
    BackwardShift op;
    std::vector<WindowVector> y_samples;  ///< finitely supported stand-ins for the dense set Y
    std::vector<WindowVector> z_samples;  ///< stand-ins for Z
    std::vector<std::size_t> nk;
    double m = 10.0;
    RightInverseIndex s_index = RightInverseIndex::ByNk;

    /// nk nonempty and strictly increasing, m > 0, samples on the shift's axis
    /// with a common exponent.
    void validate() const;
};

struct Condition1Report {
    bool passed = true;
    std::vector<WeakNullReport> samples;
    std::optional<std::size_t> failing_sample;  ///< 0-based

    friend bool operator==(const Condition1Report&, const Condition1Report&) = default;
};

struct Condition2Report {
    bool passed = true;
    double observed_sup = 0.0;                      ///< sup over samples and k of ||T^{n_k} y|| after scaling
    std::vector<double> scaling;                    ///< factor applied to each y to bring ||y|| <= 1
    std::vector<std::optional<std::size_t>> tail_start;  ///< smallest 1-based N with tail sup <= M
    std::vector<std::vector<double>> norms;
    std::optional<std::size_t> failing_sample;

    friend bool operator==(const Condition2Report&, const Condition2Report&) = default;
};

struct Condition3Report {
    bool passed = true;
    std::vector<double> scaling;
    std::vector<std::vector<double>> residual_a;  ///< ||S_k z|| per k
    std::vector<std::vector<double>> residual_b;  ///< ||T^{n_k} S_{n_k} z - z|| per k
    double final_residual_a = 0.0;                ///< max over samples of the last residual_a
    double max_residual_b = 0.0;
    std::optional<std::size_t> failing_sample;

    friend bool operator==(const Condition3Report&, const Condition3Report&) = default;
};

struct CriterionReport {
    Condition1Report cond1;
    Condition2Report cond2;
    Condition3Report cond3;
    bool overall = false;  ///< all three sampled conditions hold

    friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

struct CriterionTolerances {
    double coord_tol = 1e-9;
    double norm_bound = 1e6;   ///< boundedness cap for the weak-null surrogate
    double decay_tol = 1e-6;   ///< residual_a must end below this
    double exact_tol = 1e-10;  ///< residual_b bound (relative to the normalized z)
};

/// (T^{n_k} y)_k is weakly null for every sampled y; the tracked coordinates
/// are those of y's window. Propagates the p = 1 rejection.
Condition1Report check_condition1(const CriterionInstance& inst, double coord_tol, double norm_bound);

/// For each y (scaled to norm <= 1) a tail of k along which ||T^{n_k} y|| <= M.
Condition2Report check_condition2(const CriterionInstance& inst);

/// ||S_k z|| decays below `decay_tol` by the last k and T^{n_k} S_{n_k} z
/// reproduces z within `exact_tol`; z is normalized to norm 1 first.
Condition3Report check_condition3(const CriterionInstance& inst, double decay_tol, double exact_tol = 1e-10);

CriterionReport check_criterion(const CriterionInstance& inst, const CriterionTolerances& tol = {});

struct TransitivityReport {
    Verdict verdict = Verdict::UndeterminedAtHorizon;
    std::size_t horizon = 0;
    std::optional<std::size_t> n;
    std::optional<WindowVector> witness;  ///< x in G with T^n x in W
    double witness_distance = 0.0;        ///< ||x - G.center||
    double orbit_norm = 0.0;              ///< ||T^n x||, for Ball_M bookkeeping

    friend bool operator==(const TransitivityReport&, const TransitivityReport&) = default;
};

/// Searches n in [start, horizon] for x = g + S^n (W.center - T^n g restricted
/// to W's coordinates) with ||x - g|| < radius; then T^n x agrees with
/// W.center on W's coordinates. This is the y + S_k z construction.
TransitivityReport transitivity_witness(const BackwardShift& t, const WindowVector& g_center, double g_radius,
                                        const WeakNeighborhood& w, std::size_t horizon, std::size_t start = 0);

}  // namespace hyperlab
