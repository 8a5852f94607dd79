#include "hyperlab/criterion.hpp"

#include <algorithm>
#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

void CriterionInstance::validate() const {
    if (nk.empty()) {
        throw InputError("criterion instance needs a nonempty n_k sequence");
    }
    for (std::size_t i = 1; i < nk.size(); ++i) {
        if (nk[i] <= nk[i - 1]) {
            throw InputError("n_k must be strictly increasing");
        }
    }
    if (!(m > 0.0)) {
        throw InputError("criterion bound M must be positive");
    }
    std::optional<double> p;
    for (const auto* samples : {&y_samples, &z_samples}) {
        for (const WindowVector& v : *samples) {
            if (v.axis() != op.axis()) {
                throw InputError("criterion sample lives on a different axis than the shift");
            }
            if (p && *p != v.p()) {
                throw InputError("criterion samples mix exponents");
            }
            p = v.p();
        }
    }
}

Condition1Report check_condition1(const CriterionInstance& inst, double coord_tol, double norm_bound) {
    inst.validate();
    Condition1Report report;
    for (std::size_t s = 0; s < inst.y_samples.size(); ++s) {
        const WindowVector& y = inst.y_samples[s];
        std::vector<WindowVector> orbit;
        orbit.reserve(inst.nk.size());
        for (std::size_t n : inst.nk) {
            orbit.push_back(apply_power(inst.op, y, n));
        }
        std::vector<long> tracked;
        for (long j = y.window().lo; j <= y.window().hi; ++j) {
            tracked.push_back(j);
        }
        report.samples.push_back(weak_null_surrogate(orbit, coord_tol, norm_bound, std::move(tracked)));
        if (!report.samples.back().passed && !report.failing_sample) {
            report.failing_sample = s;
        }
    }
    report.passed = !report.failing_sample;
    return report;
}

Condition2Report check_condition2(const CriterionInstance& inst) {
    inst.validate();
    Condition2Report report;
    for (std::size_t s = 0; s < inst.y_samples.size(); ++s) {
        const WindowVector& y = inst.y_samples[s];
        const double size = norm(y);
        const double scale = size > 1.0 ? 1.0 / size : 1.0;
        const WindowVector scaled = Complex{scale} * y;
        std::vector<double> norms;
        norms.reserve(inst.nk.size());
        for (std::size_t n : inst.nk) {
            norms.push_back(norm(apply_power(inst.op, scaled, n)));
            report.observed_sup = std::max(report.observed_sup, norms.back());
        }
        std::optional<std::size_t> start;
        double tail = 0.0;
        for (std::size_t k = norms.size(); k-- > 0;) {
            tail = std::max(tail, norms[k]);
            if (tail > inst.m) {
                break;
            }
            start = k + 1;
        }
        report.scaling.push_back(scale);
        report.tail_start.push_back(start);
        report.norms.push_back(std::move(norms));
        if (!start && !report.failing_sample) {
            report.failing_sample = s;
        }
    }
    report.passed = !report.failing_sample;
    return report;
}

Condition3Report check_condition3(const CriterionInstance& inst, double decay_tol, double exact_tol) {
    inst.validate();
    Condition3Report report;
    for (std::size_t s = 0; s < inst.z_samples.size(); ++s) {
        const WindowVector& z = inst.z_samples[s];
        const double size = norm(z);
        const double scale = size > 0.0 ? 1.0 / size : 1.0;
        const WindowVector unit = Complex{scale} * z;
        std::vector<double> res_a;
        std::vector<double> res_b;
        for (std::size_t k = 0; k < inst.nk.size(); ++k) {
            const std::size_t n = inst.nk[k];
            const std::size_t power = inst.s_index == RightInverseIndex::ByNk ? n : k + 1;
            res_a.push_back(norm(right_inverse_power(inst.op, unit, power)));
            const WindowVector back = apply_power(inst.op, right_inverse_power(inst.op, unit, n), n);
            res_b.push_back(norm(back - unit));
            report.max_residual_b = std::max(report.max_residual_b, res_b.back());
        }
        const double last_a = res_a.back();
        report.final_residual_a = std::max(report.final_residual_a, last_a);
        const bool ok = last_a < decay_tol &&
                        std::all_of(res_b.begin(), res_b.end(), [&](double r) { return r <= exact_tol; });
        report.scaling.push_back(scale);
        report.residual_a.push_back(std::move(res_a));
        report.residual_b.push_back(std::move(res_b));
        if (!ok && !report.failing_sample) {
            report.failing_sample = s;
        }
    }
    report.passed = !report.failing_sample;
    return report;
}

CriterionReport check_criterion(const CriterionInstance& inst, const CriterionTolerances& tol) {
    CriterionReport report;
    report.cond1 = check_condition1(inst, tol.coord_tol, tol.norm_bound);
    report.cond2 = check_condition2(inst);
    report.cond3 = check_condition3(inst, tol.decay_tol, tol.exact_tol);
    report.overall = report.cond1.passed && report.cond2.passed && report.cond3.passed;
    return report;
}

TransitivityReport transitivity_witness(const BackwardShift& t, const WindowVector& g_center, double g_radius,
                                        const WeakNeighborhood& w, std::size_t horizon, std::size_t start) {
    if (!(g_radius > 0.0)) {
        throw InputError("norm ball radius must be positive");
    }
    if (g_center.axis() != t.axis() || w.center.axis() != t.axis()) {
        throw InputError("transitivity inputs live on a different axis than the shift");
    }
    TransitivityReport report;
    report.horizon = horizon;

    IndexWindow coords = g_center.window();
    if (!w.indices.empty()) {
        const auto [lo, hi] = std::minmax_element(w.indices.begin(), w.indices.end());
        coords = IndexWindow::make(*lo, *hi, t.axis());
    }

    for (std::size_t n = start; n <= horizon; ++n) {
        const WindowVector image = apply_power(t, g_center, n);
        std::vector<Complex> target(coords.size());
        for (long j : w.indices) {
            target[static_cast<std::size_t>(j - coords.lo)] = w.center[j] - image[j];
        }
        const WindowVector correction =
            right_inverse_power(t, WindowVector(coords, std::move(target), g_center.p()), n);
        const double distance = norm(correction);
        if (!(distance < g_radius)) {
            continue;
        }
        const WindowVector x = g_center + correction;
        const WindowVector orbit = apply_power(t, x, n);
        if (!weak_member(orbit, w)) {
            continue;
        }
        report.verdict = Verdict::EvidenceHypercyclic;
        report.n = n;
        report.witness_distance = distance;
        report.orbit_norm = norm(orbit);
        report.witness = x;
        return report;
    }
    return report;
}

}  // namespace hyperlab
