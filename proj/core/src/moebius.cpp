#include "hyperlab/moebius.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hyperlab/error.hpp"

namespace hyperlab {

namespace {

constexpr double kBoundaryTol = 1e-9;
constexpr double kIdentityTol = 1e-12;
constexpr double kLocationTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kParabolicSnap = 1e-14;

using Matrix = std::array<Complex, 4>;

double max_abs(const Matrix& m) noexcept {
    double s = 0.0;
    for (const Complex& v : m) {
        s = std::max(s, std::abs(v));
    }
    return s;
}

Matrix multiply(const Matrix& x, const Matrix& y) noexcept {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

// Keeps entries near unit size during long products; the map is unchanged.
void rescale(Matrix& m) noexcept {
    const double s = max_abs(m);
    if (s > 1e64 || (s > 0.0 && s < 1e-64)) {
        for (Complex& v : m) {
            v /= s;
        }
    }
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

PointLocation locate(Complex z) noexcept {
    const double r = std::abs(z);
    if (r < 1.0 - kLocationTol) {
        return PointLocation::InDisk;
    }
    if (r <= 1.0 + kLocationTol) {
        return PointLocation::OnCircle;
    }
    return PointLocation::OutsideClosedDisk;
}

MoebiusMap from_matrix(const Matrix& m) {
    return {m[0], m[1], m[2], m[3]};
}

Matrix to_matrix(const MoebiusMap& m) noexcept {
    return {m.a(), m.b(), m.c(), m.d()};
}

}  // namespace

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d) {
    Matrix m{a, b, c, d};
    for (const Complex& v : m) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InputError("Moebius coefficients must be finite");
        }
    }
    const double s = max_abs(m);
    if (s == 0.0) {
        throw InputError("Moebius coefficients are all zero");
    }
    // Already normalized input (e.g. read back from JSON) is kept bit for bit.
    if (std::abs(m[0] * m[3] - m[1] * m[2] - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) {
        a_ = m[0];
        b_ = m[1];
        c_ = m[2];
        d_ = m[3];
        return;
    }
    for (Complex& v : m) {
        v /= s;
    }
    const Complex det = m[0] * m[3] - m[1] * m[2];
    if (det == Complex{}) {
        throw InputError("Moebius map is degenerate: ad - bc = 0");
    }
    const Complex root = std::sqrt(det);
    a_ = m[0] / root;
    b_ = m[1] / root;
    c_ = m[2] / root;
    d_ = m[3] / root;
}

MoebiusMap MoebiusMap::rotation(double theta) {
    return {std::polar(1.0, theta), 0.0, 0.0, 1.0};
}

MoebiusMap MoebiusMap::parabolic(Complex a) {
    return compose(cayley_inverse(), compose(translation(a), cayley()));
}

Complex apply(const MoebiusMap& m, Complex z) {
    const Complex den = m.c() * z + m.d();
    if (den == Complex{} || std::abs(den) <= 1e-15 * (std::abs(m.c()) * std::abs(z) + std::abs(m.d()))) {
        throw InputError("z = " + format_complex(z) + " is the pole -d/c of the map");
    }
    return (m.a() * z + m.b()) / den;
}

MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2) {
    return from_matrix(multiply(to_matrix(m1), to_matrix(m2)));
}

MoebiusMap inverse(const MoebiusMap& m) {
    return {m.d(), -m.b(), -m.c(), m.a()};
}

MoebiusMap iterate(const MoebiusMap& m, std::uint64_t n) {
    if (n == 0) {
        return MoebiusMap::identity();
    }
    const Matrix base0 = to_matrix(m);
    // Parabolic with s = trace / 2 = +-1: (sM - I)^2 = 0, so M^n = s^n (I + n(sM - I)).
    // Squaring would let the rounding in (sM - I)^2 grow like n^2.
    const Complex half = m.trace() / 2.0;
    const double s = half.real() >= 0.0 ? 1.0 : -1.0;
    if (std::abs(half - s) <= kParabolicSnap && !is_identity(m)) {
        const double k = static_cast<double>(n);
        return from_matrix({1.0 + k * (s * base0[0] - 1.0), k * s * base0[1], k * s * base0[2],
                            1.0 + k * (s * base0[3] - 1.0)});
    }
    Matrix result{1.0, 0.0, 0.0, 1.0};
    Matrix base = base0;
    while (n > 0) {
        if (n & 1U) {
            result = multiply(result, base);
            rescale(result);
        }
        n >>= 1U;
        if (n > 0) {
            base = multiply(base, base);
            rescale(base);
        }
    }
    const double scale = max_abs(result);
    if (std::abs(result[0] * result[3] - result[1] * result[2]) <= 1e-28 * scale * scale) {
        throw NumericError("iterate is numerically degenerate: the orbit has collapsed to a point");
    }
    return from_matrix(result);
}

bool is_identity(const MoebiusMap& m) noexcept {
    const double scale = std::max(std::abs(m.a()), std::abs(m.d()));
    const double tol = kIdentityTol * scale;
    return std::abs(m.b()) <= tol && std::abs(m.c()) <= tol && std::abs(m.a() - m.d()) <= tol;
}

double max_boundary_modulus(const MoebiusMap& m, int grid) {
    double best = 0.0;
    for (int k = 0; k < grid; ++k) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / grid);
        const Complex den = m.c() * z + m.d();
        if (den == Complex{}) {
            return std::numeric_limits<double>::infinity();
        }
        best = std::max(best, std::abs((m.a() * z + m.b()) / den));
    }
    return best;
}

namespace {

bool pole_outside_closed_disk(const MoebiusMap& m) noexcept {
    // |-d/c| > 1, written without dividing.
    return std::abs(m.d()) > std::abs(m.c()) * (1.0 + 1e-12);
}

}  // namespace

bool is_self_map(const MoebiusMap& m) {
    return pole_outside_closed_disk(m) && max_boundary_modulus(m) <= 1.0 + kBoundaryTol;
}

bool is_automorphism(const MoebiusMap& m) {
    if (!pole_outside_closed_disk(m)) {
        return false;
    }
    constexpr int grid = 256;
    for (int k = 0; k < grid; ++k) {
        const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * k / grid);
        if (std::abs(std::abs(hyperlab::apply(m, z)) - 1.0) > kBoundaryTol) {
            return false;
        }
    }
    return true;
}

MapClass classify(const MoebiusMap& m) {
    if (!is_self_map(m)) {
        throw InputError("classification needs a self-map of the unit disk");
    }
    MapClass out;
    out.automorphism = is_automorphism(m);
    if (is_identity(m)) {
        out.kind = MapKind::Identity;
        out.trace_squared = 4.0;
        return out;
    }

    const Complex tr2 = m.trace() * m.trace();
    out.trace_squared = tr2;
    const double scale = std::max(1.0, std::abs(tr2));
    const bool parabolic = std::abs(tr2 - 4.0) <= kTraceTol * scale;
    if (parabolic) {
        out.kind = MapKind::Parabolic;
    } else if (std::abs(tr2.imag()) <= kTraceTol * scale && tr2.real() >= 0.0) {
        if (tr2.real() < 4.0) {
            out.kind = MapKind::Elliptic;
        } else {
            out.kind = out.automorphism ? MapKind::HyperbolicAutomorphism : MapKind::HyperbolicNonAutomorphism;
        }
    } else {
        out.kind = MapKind::Loxodromic;
    }

    const Complex a = m.a(), b = m.b(), c = m.c(), d = m.d();
    const double coeff_scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    auto finite_point = [](Complex z) { return FixedPoint{z, false, locate(z)}; };
    const FixedPoint infinity{Complex{}, true, PointLocation::OutsideClosedDisk};

    if (std::abs(c) <= 1e-14 * coeff_scale) {
        // Affine: infinity is always fixed.
        if (std::abs(d - a) <= kIdentityTol * coeff_scale) {
            out.fixed_points = {infinity};
        } else {
            out.fixed_points = {finite_point(b / (d - a)), infinity};
        }
    } else if (parabolic) {
        out.fixed_points = {finite_point((a - d) / (2.0 * c))};
    } else {
        // c z^2 + (d - a) z - b = 0, roots chosen to avoid cancellation.
        const Complex disc = (a - d) * (a - d) + 4.0 * b * c;
        Complex root = std::sqrt(disc);
        if ((std::conj(a - d) * root).real() < 0.0) {
            root = -root;
        }
        const Complex q = (a - d) + root;
        if (q == Complex{}) {
            out.fixed_points = {finite_point(0.0)};
        } else {
            out.fixed_points = {finite_point(q / (2.0 * c)), finite_point(-2.0 * b / q)};
        }
    }
    out.has_interior_fixed_point =
        std::any_of(out.fixed_points.begin(), out.fixed_points.end(),
                    [](const FixedPoint& p) { return p.location == PointLocation::InDisk; });
    return out;
}

HalfPlaneForm to_half_plane(const MoebiusMap& m) {
    const MapClass cls = classify(m);
    if (cls.kind != MapKind::Parabolic) {
        throw InputError("half-plane normal form needs a parabolic map, got " + std::string(to_string(cls.kind)));
    }
    const FixedPoint& fp = cls.fixed_points.front();
    if (fp.at_infinity || fp.location != PointLocation::OnCircle) {
        throw InputError("parabolic map has no boundary fixed point on the unit circle");
    }
    HalfPlaneForm form;
    form.rotation = fp.value / std::abs(fp.value);
    form.automorphism = cls.automorphism;

    const double theta = std::arg(form.rotation);
    const MoebiusMap rotated = compose(MoebiusMap::rotation(-theta), compose(m, MoebiusMap::rotation(theta)));
    const MoebiusMap phi = compose(MoebiusMap::cayley(), compose(rotated, MoebiusMap::cayley_inverse()));
    form.translation = phi.b() / phi.d();

    for (const Complex w : {Complex{0.5, 0.0}, Complex{1.0, 0.0}, Complex{2.0, 1.0}, Complex{0.25, -3.0},
                            Complex{4.0, 4.0}}) {
        form.residual = std::max(form.residual, std::abs(hyperlab::apply(phi, w) - w - form.translation));
    }
    return form;
}

ParabolicIdentityReport parabolic_identity_check(Complex a, Complex z, std::uint64_t n) {
    if (!(a.real() > 0.0)) {
        throw InputError("parabolic identities need Re(a) > 0");
    }
    if (!(std::abs(z) < 1.0)) {
        throw InputError("parabolic identities need |z| < 1");
    }
    if (n == 0) {
        throw InputError("parabolic identities need n >= 1");
    }
    ParabolicIdentityReport r;
    r.a = a;
    r.z = z;
    r.n = n;

    const MoebiusMap phi_n = iterate(MoebiusMap::parabolic(a), n);
    const Complex at_z = hyperlab::apply(phi_n, z);
    const Complex at_0 = hyperlab::apply(phi_n, 0.0);
    r.modulus_lhs = 1.0 - std::norm(at_z);
    r.difference_lhs = at_z - at_0;

    const Complex s = (1.0 + z) / (1.0 - z);
    const Complex s0 = 1.0;
    const Complex shift = static_cast<double>(n) * a;
    r.modulus_rhs = 4.0 * (s + shift).real() / std::norm(1.0 + s + shift);
    r.difference_rhs = 2.0 * (s - s0) / ((s + shift + 1.0) * (s0 + shift + 1.0));

    r.modulus_error = std::abs(r.modulus_lhs - r.modulus_rhs);
    r.difference_error = std::abs(r.difference_lhs - r.difference_rhs);
    return r;
}

std::string_view to_string(MapKind k) noexcept {
    switch (k) {
        case MapKind::Parabolic:
            return "PARABOLIC";
        case MapKind::HyperbolicAutomorphism:
            return "HYPERBOLIC_AUTOMORPHISM";
        case MapKind::HyperbolicNonAutomorphism:
            return "HYPERBOLIC_NON_AUTOMORPHISM";
        case MapKind::Elliptic:
            return "ELLIPTIC";
        case MapKind::Loxodromic:
            return "LOXODROMIC";
        case MapKind::Identity:
            return "IDENTITY";
    }
    return "IDENTITY";
}

std::string_view to_string(PointLocation l) noexcept {
    switch (l) {
        case PointLocation::InDisk:
            return "IN_DISK";
        case PointLocation::OnCircle:
            return "ON_CIRCLE";
        case PointLocation::OutsideClosedDisk:
            return "OUTSIDE_CLOSED_DISK";
    }
    return "OUTSIDE_CLOSED_DISK";
}

MapKind map_kind_from_string(std::string_view s) {
    for (auto k : {MapKind::Parabolic, MapKind::HyperbolicAutomorphism, MapKind::HyperbolicNonAutomorphism,
                   MapKind::Elliptic, MapKind::Loxodromic, MapKind::Identity}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw InputError("unknown map kind '" + std::string(s) + "'");
}

PointLocation location_from_string(std::string_view s) {
    for (auto l : {PointLocation::InDisk, PointLocation::OnCircle, PointLocation::OutsideClosedDisk}) {
        if (to_string(l) == s) {
            return l;
        }
    }
    throw InputError("unknown point location '" + std::string(s) + "'");
}

}  // namespace hyperlab
