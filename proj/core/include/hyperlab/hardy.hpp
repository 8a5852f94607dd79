#pragma once

// Truncated Taylor-coefficient model of H^2: point evaluation, composition
// with linear fractional symbols, the pointwise growth estimate and the
// orbit diagnostics for parabolic and interior-fixed-point symbols.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlab/moebius.hpp"
#include "hyperlab/seqspace.hpp"

namespace hyperlab {

/// f(z) = sum_{n=0}^{D} coeffs[n] z^n with ||f||^2 = sum |coeffs[n]|^2.
class HardyFunction {
public:
    HardyFunction() : coeffs_{Complex{}} {}
    explicit HardyFunction(std::vector<Complex> coeffs);

    static HardyFunction constant(Complex c) { return HardyFunction({c}); }
    /// f(z) = z.
    static HardyFunction identity() { return HardyFunction({0.0, 1.0}); }

    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const HardyFunction&, const HardyFunction&) = default;

private:
    std::vector<Complex> coeffs_;
};

HardyFunction operator+(const HardyFunction& f, const HardyFunction& g);
HardyFunction operator*(Complex c, const HardyFunction& f);

/// Truncated H^2 norm.
double norm(const HardyFunction& f);

/// Horner evaluation. Throws InputError for |z| >= 1.
Complex eval(const HardyFunction& f, Complex z);

struct CompositionOperator {
    MoebiusMap symbol;
    std::size_t degree_cap = 256;
};

struct ComposeOptions {
    double radius = 0.9;           ///< sampling circle
    double fallback_radius = 0.5;  ///< retried when the residual at `radius` is too large
    double max_residual = 1e-6;
};

struct CompositionResult {
    HardyFunction function;
    double residual = 0.0;  ///< max |result(z) - f(phi(z))| on the check grid
    double radius = 0.0;    ///< sampling radius that produced `function`
};

/// Taylor coefficients of f o phi up to degree_cap, from samples on a circle of
/// radius r < 1 inverted by a discrete Fourier transform with coefficient k
/// divided by r^k. Throws NumericError when neither radius meets max_residual.
CompositionResult compose_with_residual(const CompositionOperator& op, const HardyFunction& f,
                                        const ComposeOptions& options = {});
HardyFunction compose(const CompositionOperator& op, const HardyFunction& f, const ComposeOptions& options = {});

struct GrowthEstimateReport {
    double lhs = 0.0;  ///< |f(z) - f(w)|
    double rhs = 0.0;  ///< 2 ||f|| |z - w| / min(1 - |z|, 1 - |w|)^{3/2}
    bool holds = true;
    bool tight = false;  ///< lhs within 1% of rhs; flagged for review, not a failure

    friend bool operator==(const GrowthEstimateReport&, const GrowthEstimateReport&) = default;
};

GrowthEstimateReport growth_estimate_check(const HardyFunction& f, Complex z, Complex w);

struct OrbitDecayReport {
    Complex a;
    Complex z;
    std::vector<double> distances;  ///< d_n = |f(phi_n(z)) - f(phi_n(0))| for n = 1..n_max
    double fitted_m = 0.0;          ///< max_n d_n sqrt(n)
    double first_half_max = 0.0;    ///< max of d_n sqrt(n) over n <= n_max / 2
    double second_half_max = 0.0;   ///< max of d_n sqrt(n) over n > n_max / 2
    bool bounded = true;

    friend bool operator==(const OrbitDecayReport&, const OrbitDecayReport&) = default;
};

/// d_n for the parabolic symbol with translation a, with phi_n taken from the
/// matrix group law. `bounded` means the second-half maximum of d_n sqrt(n)
/// does not exceed 1.05 times the first-half maximum.
OrbitDecayReport orbit_decay(const HardyFunction& f, Complex a, Complex z, std::size_t n_max, unsigned threads = 1);

struct ObstructionReport {
    Complex fixed_point;
    Complex value;            ///< f(p)
    std::size_t iterations = 0;
    double max_deviation = 0.0;  ///< max_n |f(phi_n(p)) - f(p)|

    friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// Orbit values at an interior fixed point p never move. Without an explicit
/// point the interior fixed point from classify() is used (0 for the
/// identity). Throws InputError when there is no fixed point in the open disk
/// or the supplied point is not fixed.
ObstructionReport fixed_point_obstruction(const MoebiusMap& phi, const HardyFunction& f, std::size_t n,
                                          std::optional<Complex> point = std::nullopt);

struct ClusterReport {
    std::vector<std::uint64_t> steps;  ///< n/4, n/2, n
    std::vector<double> spreads;       ///< max over grid pairs of |f(phi_m(z)) - f(phi_m(z'))|
    bool decreasing = true;

    friend bool operator==(const ClusterReport&, const ClusterReport&) = default;
};

ClusterReport constant_cluster_check(const HardyFunction& f, Complex a, const std::vector<Complex>& grid,
                                     std::uint64_t n);

}  // namespace hyperlab
