#pragma once

// Test-only oracles and random generators. The oracles deliberately avoid the
// library's fast paths (log-space sums, binary powering, prefix tables) so
// agreement is meaningful.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "hyperlab/hardy.hpp"
#include "hyperlab/moebius.hpp"
#include "hyperlab/seqspace.hpp"
#include "hyperlab/shift.hpp"

namespace hyperlab::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    long integer(long lo, long hi) { return lo + static_cast<long>(unit() * static_cast<double>(hi - lo + 1)); }
    Complex complex_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
    /// Uniform in the disk of the given radius.
    Complex disk(double radius) { return std::polar(radius * std::sqrt(unit()), 2.0 * std::numbers::pi * unit()); }

private:
    std::mt19937_64 engine_;
};

// --- sequence-space oracles -------------------------------------------------

using Sparse = std::map<long, Complex>;

inline Sparse to_sparse(const WindowVector& x) {
    Sparse s;
    for (long j = x.window().lo; j <= x.window().hi; ++j) {
        if (x[j] != Complex{}) {
            s[j] = x[j];
        }
    }
    return s;
}

/// One backward-shift step straight from T e_j = w_j e_{j-1}, T e_1 = 0 on N.
inline Sparse shift_once(const WeightSequence& w, const Sparse& x) {
    Sparse y;
    for (const auto& [j, v] : x) {
        if (w.axis() == Axis::Natural && j == 1) {
            continue;
        }
        y[j - 1] += w(j) * v;
    }
    return y;
}

inline Sparse shift_power(const WeightSequence& w, Sparse x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x = shift_once(w, x);
    }
    return x;
}

inline double lp_norm(const Sparse& x, double p) {
    long double s = 0.0L;
    for (const auto& [j, v] : x) {
        s += std::pow(static_cast<long double>(std::abs(v)), static_cast<long double>(p));
    }
    return static_cast<double>(std::pow(s, 1.0L / static_cast<long double>(p)));
}

/// prod_{i=from}^{to} w_i by plain multiplication in long double.
inline long double weight_product(const WeightSequence& w, long from, long to) {
    long double p = 1.0L;
    for (long i = from; i <= to; ++i) {
        p *= w(i);
    }
    return p;
}

/// Smallest n <= horizon with, for all |j| < q, prod_{s=1}^n w_{j+s} > 1/eps and
/// prod_{s=0}^{n-1} w_{j-s} < eps. Zero when none.
inline std::size_t brute_force_bilateral(const WeightSequence& w, double eps, long q, std::size_t horizon) {
    for (std::size_t n = 1; n <= horizon; ++n) {
        bool ok = true;
        for (long j = -(q - 1); j <= q - 1 && ok; ++j) {
            const long double fwd = weight_product(w, j + 1, j + static_cast<long>(n));
            const long double bwd = weight_product(w, j - static_cast<long>(n) + 1, j);
            ok = fwd > 1.0L / eps && bwd < eps;
        }
        if (ok) {
            return n;
        }
    }
    return 0;
}

inline WeightSequence random_weights(Rng& rng, Axis axis) {
    switch (rng.integer(0, 3)) {
        case 0:
            return WeightSequence::constant(axis, rng.uniform(0.5, 2.0));
        case 1: {
            std::vector<double> v(static_cast<std::size_t>(rng.integer(1, 5)));
            for (auto& x : v) {
                x = rng.uniform(0.5, 2.0);
            }
            return WeightSequence::periodic(axis, v);
        }
        case 2:
            if (axis == Axis::Integers) {
                return WeightSequence::piecewise(rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0), rng.integer(-3, 3));
            }
            return WeightSequence::constant(axis, rng.uniform(0.5, 2.0));
        default: {
            std::map<long, double> m;
            const long lo = axis == Axis::Natural ? 1 : -10;
            for (long j = lo; j <= 10; ++j) {
                m[j] = rng.uniform(0.5, 2.0);
            }
            return WeightSequence(axis, WeightSequence::Explicit{m, rng.uniform(0.5, 2.0)});
        }
    }
}

inline WindowVector random_vector(Rng& rng, Axis axis, double p, long lo_min, long hi_max) {
    long lo = rng.integer(lo_min, hi_max);
    long hi = rng.integer(lo_min, hi_max);
    if (lo > hi) {
        std::swap(lo, hi);
    }
    std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1));
    for (auto& x : c) {
        x = rng.complex_box(1.0);
    }
    return WindowVector(IndexWindow::make(lo, hi, axis), c, p);
}

// --- Moebius and H^2 oracles ------------------------------------------------

/// n-fold application without matrix powering.
inline Complex apply_loop(const MoebiusMap& m, Complex z, std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) {
        z = (m.a() * z + m.b()) / (m.c() * z + m.d());
    }
    return z;
}

inline Complex cayley(Complex z) { return (1.0 + z) / (1.0 - z); }

/// Disk automorphism z -> (z - p) / (1 - conj(p) z).
inline MoebiusMap disk_automorphism(Complex p) { return MoebiusMap(1.0, -p, -std::conj(p), 1.0); }

/// tau_p^{-1} o (lambda z) o tau_p: a self-map with interior fixed point p.
inline MoebiusMap contraction_about(Complex p, Complex lambda) {
    const MoebiusMap tau = disk_automorphism(p);
    return compose(inverse(tau), compose(MoebiusMap(lambda, 0.0, 0.0, 1.0), tau));
}

inline HardyFunction random_polynomial(Rng& rng, std::size_t max_degree) {
    std::vector<Complex> c(static_cast<std::size_t>(rng.integer(0, static_cast<long>(max_degree))) + 1);
    for (auto& x : c) {
        x = rng.complex_box(1.0);
    }
    return HardyFunction(std::move(c));
}

/// Plain sum of c_k z^k, no Horner.
inline Complex power_sum(const HardyFunction& f, Complex z) {
    Complex s{};
    Complex zk{1.0, 0.0};
    for (const Complex& c : f.coeffs()) {
        s += c * zk;
        zk *= z;
    }
    return s;
}

}  // namespace hyperlab::testing
