#include "hyperlab/hardy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hyperlab/error.hpp"
#include "hyperlab/parallel.hpp"

namespace hyperlab {

HardyFunction::HardyFunction(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        coeffs_.push_back(Complex{});
    }
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InputError("Taylor coefficients must be finite");
        }
    }
}

HardyFunction operator+(const HardyFunction& f, const HardyFunction& g) {
    std::vector<Complex> out(std::max(f.coeffs().size(), g.coeffs().size()));
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        out[k] += f.coeffs()[k];
    }
    for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
        out[k] += g.coeffs()[k];
    }
    return HardyFunction(std::move(out));
}

HardyFunction operator*(Complex c, const HardyFunction& f) {
    std::vector<Complex> out = f.coeffs();
    for (Complex& v : out) {
        v *= c;
    }
    return HardyFunction(std::move(out));
}

double norm(const HardyFunction& f) {
    double scale = 0.0;
    for (const Complex& c : f.coeffs()) {
        scale = std::max(scale, std::abs(c));
    }
    if (scale == 0.0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const Complex& c : f.coeffs()) {
        sum += std::norm(c / scale);
    }
    return scale * std::sqrt(sum);
}

Complex eval(const HardyFunction& f, Complex z) {
    if (!(std::abs(z) < 1.0)) {
        throw InputError("point evaluation needs |z| < 1");
    }
    const auto& c = f.coeffs();
    Complex acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        acc = acc * z + c[k];
    }
    return acc;
}

namespace {

std::vector<Complex> residual_grid() {
    std::vector<Complex> grid{Complex{}};
    for (double r : {0.3, 0.6, 0.9}) {
        for (int k = 0; k < 16; ++k) {
            grid.push_back(std::polar(r, 2.0 * std::numbers::pi * (k + 0.5) / 16.0));
        }
    }
    return grid;
}

CompositionResult sample_and_invert(const CompositionOperator& op, const HardyFunction& f, double radius) {
    const std::size_t terms = op.degree_cap + 1;
    const std::size_t samples = std::bit_ceil(4 * terms);

    std::vector<Complex> twiddle(samples);
    for (std::size_t m = 0; m < samples; ++m) {
        twiddle[m] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(samples));
    }
    std::vector<Complex> values(samples);
    double peak = 0.0;
    for (std::size_t m = 0; m < samples; ++m) {
        values[m] = eval(f, hyperlab::apply(op.symbol, radius * std::conj(twiddle[m])));
        peak = std::max(peak, std::abs(values[m]));
    }

    // Coefficients whose contribution on the sampling circle sits below the
    // rounding floor of the transform are noise amplified by r^{-k}.
    const double noise_floor = 64.0 * std::numeric_limits<double>::epsilon() * peak;
    std::vector<Complex> coeffs(terms);
    double radius_power = 1.0;
    for (std::size_t k = 0; k < terms; ++k) {
        Complex acc{};
        for (std::size_t m = 0; m < samples; ++m) {
            acc += values[m] * twiddle[(m * k) % samples];
        }
        acc /= static_cast<double>(samples);
        coeffs[k] = std::abs(acc) <= noise_floor ? Complex{} : acc / radius_power;
        radius_power *= radius;
    }

    CompositionResult result{HardyFunction(std::move(coeffs)), 0.0, radius};
    for (const Complex z : residual_grid()) {
        result.residual =
            std::max(result.residual, std::abs(eval(result.function, z) - eval(f, hyperlab::apply(op.symbol, z))));
    }
    return result;
}

}  // namespace

CompositionResult compose_with_residual(const CompositionOperator& op, const HardyFunction& f,
                                        const ComposeOptions& options) {
    if (!is_self_map(op.symbol)) {
        throw InputError("composition symbol is not a self-map of the unit disk");
    }
    if (!(options.radius > 0.0 && options.radius < 1.0) ||
        !(options.fallback_radius > 0.0 && options.fallback_radius < 1.0)) {
        throw InputError("sampling radii must lie in (0, 1)");
    }
    CompositionResult result = sample_and_invert(op, f, options.radius);
    if (result.residual > options.max_residual && options.fallback_radius != options.radius) {
        CompositionResult retry = sample_and_invert(op, f, options.fallback_radius);
        if (retry.residual < result.residual) {
            result = std::move(retry);
        }
    }
    if (result.residual > options.max_residual) {
        throw NumericError("composition residual " + std::to_string(result.residual) + " exceeds " +
                           std::to_string(options.max_residual) + "; retry with a degree_cap above " +
                           std::to_string(op.degree_cap));
    }
    return result;
}

HardyFunction compose(const CompositionOperator& op, const HardyFunction& f, const ComposeOptions& options) {
    return compose_with_residual(op, f, options).function;
}

GrowthEstimateReport growth_estimate_check(const HardyFunction& f, Complex z, Complex w) {
    if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0)) {
        throw InputError("growth estimate needs |z| < 1 and |w| < 1");
    }
    GrowthEstimateReport r;
    r.lhs = std::abs(eval(f, z) - eval(f, w));
    const double gap = std::min(1.0 - std::abs(z), 1.0 - std::abs(w));
    r.rhs = 2.0 * norm(f) * std::abs(z - w) / std::pow(gap, 1.5);
    r.holds = r.lhs <= r.rhs + 1e-12;
    r.tight = r.rhs > 0.0 && r.lhs >= 0.99 * r.rhs;
    return r;
}

OrbitDecayReport orbit_decay(const HardyFunction& f, Complex a, Complex z, std::size_t n_max, unsigned threads) {
    if (!(a.real() > 0.0)) {
        throw InputError("orbit decay needs Re(a) > 0");
    }
    if (!(std::abs(z) < 1.0)) {
        throw InputError("orbit decay needs |z| < 1");
    }
    if (n_max == 0) {
        throw InputError("orbit decay needs n_max >= 1");
    }
    const MoebiusMap phi = MoebiusMap::parabolic(a);
    OrbitDecayReport r;
    r.a = a;
    r.z = z;
    r.distances = parallel_map<double>(n_max, threads, [&](std::size_t i) {
        const MoebiusMap phi_n = iterate(phi, i + 1);
        return std::abs(eval(f, hyperlab::apply(phi_n, z)) - eval(f, hyperlab::apply(phi_n, 0.0)));
    });
    const std::size_t half = n_max / 2;
    for (std::size_t i = 0; i < n_max; ++i) {
        const double scaled = r.distances[i] * std::sqrt(static_cast<double>(i + 1));
        r.fitted_m = std::max(r.fitted_m, scaled);
        if (i + 1 <= half) {
            r.first_half_max = std::max(r.first_half_max, scaled);
        } else {
            r.second_half_max = std::max(r.second_half_max, scaled);
        }
    }
    r.bounded = half == 0 || r.second_half_max <= 1.05 * r.first_half_max;
    return r;
}

ObstructionReport fixed_point_obstruction(const MoebiusMap& phi, const HardyFunction& f, std::size_t n,
                                          std::optional<Complex> point) {
    Complex p;
    if (point) {
        p = *point;
        if (!(std::abs(p) < 1.0)) {
            throw InputError("obstruction point must lie in the open disk");
        }
        if (std::abs(hyperlab::apply(phi, p) - p) > 1e-12) {
            throw InputError("obstruction point is not fixed by the symbol");
        }
    } else {
        const MapClass cls = classify(phi);
        if (cls.kind == MapKind::Identity) {
            p = 0.0;
        } else {
            const auto it = std::find_if(cls.fixed_points.begin(), cls.fixed_points.end(),
                                         [](const FixedPoint& fp) { return fp.location == PointLocation::InDisk; });
            if (it == cls.fixed_points.end()) {
                throw InputError("symbol has no fixed point in the open disk");
            }
            p = it->value;
        }
    }
    ObstructionReport r;
    r.fixed_point = p;
    r.value = eval(f, p);
    r.iterations = n;
    Complex q = p;
    for (std::size_t k = 1; k <= n; ++k) {
        q = hyperlab::apply(phi, q);
        const Complex v = eval(f, q);
        r.max_deviation = std::max(r.max_deviation, std::abs(v - r.value));
    }
    return r;
}

ClusterReport constant_cluster_check(const HardyFunction& f, Complex a, const std::vector<Complex>& grid,
                                     std::uint64_t n) {
    if (grid.empty()) {
        throw InputError("cluster check needs a nonempty grid");
    }
    for (const Complex& z : grid) {
        if (!(std::abs(z) < 1.0)) {
            throw InputError("cluster grid points must lie in the open disk");
        }
    }
    if (!(a.real() > 0.0)) {
        throw InputError("cluster check needs Re(a) > 0");
    }
    const MoebiusMap phi = MoebiusMap::parabolic(a);
    ClusterReport r;
    r.steps = {n / 4, n / 2, n};
    for (const std::uint64_t m : r.steps) {
        const MoebiusMap phi_m = iterate(phi, m);
        std::vector<Complex> values;
        values.reserve(grid.size());
        for (const Complex& z : grid) {
            values.push_back(eval(f, hyperlab::apply(phi_m, z)));
        }
        double spread = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                spread = std::max(spread, std::abs(values[i] - values[j]));
            }
        }
        r.spreads.push_back(spread);
    }
    r.decreasing = r.spreads[1] <= r.spreads[0] + 1e-12 && r.spreads[2] <= r.spreads[1] + 1e-12;
    return r;
}

}  // namespace hyperlab
