#include "hyperlab/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

IndexWindow IndexWindow::make(long lo, long hi, Axis axis) {
    if (lo > hi) {
        throw InputError("index window has lo > hi (" + std::to_string(lo) + " > " + std::to_string(hi) + ")");
    }
    if (axis == Axis::Natural && lo < 1) {
        throw InputError("natural-axis window must start at index >= 1, got " + std::to_string(lo));
    }
    return IndexWindow{lo, hi, axis};
}

IndexWindow hull(const IndexWindow& a, const IndexWindow& b) {
    if (a.axis != b.axis) {
        throw InputError("cannot combine windows on different axes");
    }
    return IndexWindow{std::min(a.lo, b.lo), std::max(a.hi, b.hi), a.axis};
}

WindowVector::WindowVector(IndexWindow window, std::vector<Complex> coeffs, double p)
    : window_(IndexWindow::make(window.lo, window.hi, window.axis)), coeffs_(std::move(coeffs)), p_(p) {
    if (!(p_ >= 1.0) || !std::isfinite(p_)) {
        throw InputError("exponent p must be a finite real >= 1");
    }
    if (coeffs_.size() != window_.size()) {
        throw InputError("coefficient count " + std::to_string(coeffs_.size()) + " does not match window size " +
                         std::to_string(window_.size()));
    }
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InputError("window vector coefficients must be finite");
        }
    }
}

WindowVector WindowVector::zero(IndexWindow window, double p) {
    return WindowVector(window, std::vector<Complex>(window.size()), p);
}

WindowVector WindowVector::basis(long j, Axis axis, double p, Complex scale) {
    return WindowVector(IndexWindow::make(j, j, axis), {scale}, p);
}

Complex WindowVector::operator[](long j) const noexcept {
    if (!window_.contains(j)) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(j - window_.lo)];
}

bool WindowVector::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) { return c == Complex{}; });
}

WindowVector WindowVector::widened(const IndexWindow& w) const {
    if (w.axis != window_.axis || w.lo > window_.lo || w.hi < window_.hi) {
        throw InputError("widened window must contain the current window");
    }
    std::vector<Complex> out(w.size());
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + (window_.lo - w.lo));
    return WindowVector(w, std::move(out), p_);
}

namespace {

void require_compatible(const WindowVector& a, const WindowVector& b) {
    if (a.p() != b.p()) {
        throw InputError("vectors live in different l^p spaces");
    }
    if (a.axis() != b.axis()) {
        throw InputError("vectors live on different axes");
    }
}

template <class Op>
WindowVector combine(const WindowVector& a, const WindowVector& b, Op op) {
    require_compatible(a, b);
    const IndexWindow w = hull(a.window(), b.window());
    std::vector<Complex> out(w.size());
    for (long j = w.lo; j <= w.hi; ++j) {
        out[static_cast<std::size_t>(j - w.lo)] = op(a[j], b[j]);
    }
    return WindowVector(w, std::move(out), a.p());
}

}  // namespace

WindowVector operator+(const WindowVector& a, const WindowVector& b) {
    return combine(a, b, [](Complex u, Complex v) { return u + v; });
}

WindowVector operator-(const WindowVector& a, const WindowVector& b) {
    return combine(a, b, [](Complex u, Complex v) { return u - v; });
}

WindowVector operator*(Complex c, const WindowVector& x) {
    std::vector<Complex> out(x.coeffs().begin(), x.coeffs().end());
    for (Complex& v : out) {
        v *= c;
    }
    return WindowVector(x.window(), std::move(out), x.p());
}

double norm(const WindowVector& x) {
    double scale = 0.0;
    for (const Complex& c : x.coeffs()) {
        scale = std::max(scale, std::abs(c));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    const double p = x.p();
    double sum = 0.0;
    for (const Complex& c : x.coeffs()) {
        const double r = std::abs(c) / scale;
        if (p == 1.0) {
            sum += r;
        } else if (p == 2.0) {
            sum += r * r;
        } else {
            sum += std::pow(r, p);
        }
    }
    if (p == 1.0) {
        return scale * sum;
    }
    if (p == 2.0) {
        return scale * std::sqrt(sum);
    }
    return scale * std::pow(sum, 1.0 / p);
}

bool in_ball(const WindowVector& x, double radius) {
    return norm(x) <= radius;
}

Restriction restrict_to(const WindowVector& x, const IndexWindow& window) {
    if (window.axis != x.axis()) {
        throw InputError("restriction window is on a different axis");
    }
    std::vector<Complex> kept(window.size());
    std::vector<Complex> dropped;
    for (long j = x.window().lo; j <= x.window().hi; ++j) {
        if (window.contains(j)) {
            kept[static_cast<std::size_t>(j - window.lo)] = x[j];
        } else {
            dropped.push_back(x[j]);
        }
    }
    Restriction r{WindowVector(window, std::move(kept), x.p()), 0.0};
    if (!dropped.empty()) {
        const std::size_t n = dropped.size();
        r.dropped_norm = norm(WindowVector(IndexWindow::make(1, static_cast<long>(n), Axis::Natural), std::move(dropped), x.p()));
    }
    return r;
}

WeakNeighborhood::WeakNeighborhood(WindowVector c, std::vector<long> idx, double eps)
    : center(std::move(c)), indices(std::move(idx)), epsilon(eps) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InputError("weak neighborhood epsilon must be a finite positive real");
    }
    if (center.axis() == Axis::Natural) {
        for (long j : indices) {
            if (j < 1) {
                throw InputError("functional index " + std::to_string(j) + " is not on the natural axis");
            }
        }
    }
}

bool weak_member(const WindowVector& x, const WeakNeighborhood& w) {
    return std::all_of(w.indices.begin(), w.indices.end(),
                       [&](long j) { return std::abs(x[j] - w.center[j]) < w.epsilon; });
}

WeakNullReport weak_null_surrogate(std::span<const WindowVector> seq, double coord_tol, double norm_bound,
                                   std::optional<std::vector<long>> tracked) {
    if (seq.empty()) {
        throw InputError("weak-null surrogate needs a nonempty sequence");
    }
    const double p = seq.front().p();
    for (const WindowVector& x : seq) {
        if (x.p() != p) {
            throw InputError("weak-null surrogate sequence mixes exponents");
        }
    }
    if (p == 1.0) {
        throw InputError(
            "weak-null surrogate rejected for p = 1: l^1 is not reflexive and by the Schur property "
            "bounded coordinatewise-null sequences need not be weakly null");
    }

    WeakNullReport report;
    if (tracked) {
        report.tracked = std::move(*tracked);
    } else {
        const IndexWindow& w = seq.front().window();
        for (long j = w.lo; j <= w.hi; ++j) {
            report.tracked.push_back(j);
        }
    }

    report.norms.reserve(seq.size());
    for (const WindowVector& x : seq) {
        const double n = norm(x);
        report.norms.push_back(n);
        report.sup_norm = std::max(report.sup_norm, n);
        if (!report.failing_position && n > norm_bound) {
            report.failing_position = report.norms.size();
            report.failing_value = n;
        }
    }

    const WindowVector& last = seq.back();
    for (long j : report.tracked) {
        const double m = std::abs(last[j]);
        report.final_max_coordinate = std::max(report.final_max_coordinate, m);
        if (m >= coord_tol && !report.failing_index) {
            report.failing_index = j;
        }
    }

    if (report.failing_position) {
        report.failure = WeakNullFailure::Norm;
    } else if (report.failing_index) {
        report.failure = WeakNullFailure::Coordinate;
        report.failing_value = std::abs(last[*report.failing_index]);
    }
    report.passed = report.failure == WeakNullFailure::None;
    return report;
}

}  // namespace hyperlab
