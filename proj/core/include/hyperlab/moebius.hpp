#pragma once

// Linear fractional maps z -> (az + b) / (cz + d) as normalized 2x2 matrices:
// classification, fixed points, conjugation of parabolic self-maps of the
// disk to translations of the right half-plane, and the closed-form
// parabolic orbit identities.

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hyperlab/seqspace.hpp"

namespace hyperlab {

class MoebiusMap {
public:
    /// Throws InputError when ad - bc vanishes. Stored scaled so ad - bc = 1.
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
    /// sigma(z) = (1 + z) / (1 - z), the disk onto the right half-plane.
    static MoebiusMap cayley() { return {1.0, 1.0, -1.0, 1.0}; }
    static MoebiusMap cayley_inverse() { return {1.0, -1.0, 1.0, 1.0}; }
    static MoebiusMap translation(Complex a) { return {1.0, a, 0.0, 1.0}; }
    static MoebiusMap rotation(double theta);
    /// sigma^{-1} o (w -> w + a) o sigma; a self-map of the disk with boundary
    /// fixed point +1 whenever Re(a) >= 0.
    static MoebiusMap parabolic(Complex a);

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }

    /// a + d for the normalized matrix; defined up to sign.
    Complex trace() const noexcept { return a_ + d_; }

private:
    Complex a_, b_, c_, d_;
};

/// (az + b) / (cz + d). Throws InputError at the pole z = -d/c.
/// Spell it hyperlab::apply when z is a std::complex lvalue: ADL also finds std::apply.
Complex apply(const MoebiusMap& m, Complex z);

/// m1 o m2.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2);
MoebiusMap inverse(const MoebiusMap& m);
/// n-th iterate: closed form for parabolic maps, binary powering otherwise.
/// Throws NumericError when the product underflows to a rank-one matrix.
MoebiusMap iterate(const MoebiusMap& m, std::uint64_t n);

/// Coefficient matrix within 1e-12 of a scalar multiple of the identity.
bool is_identity(const MoebiusMap& m) noexcept;

/// max |m(e^{i theta})| over a uniform boundary grid (default 256 points).
double max_boundary_modulus(const MoebiusMap& m, int grid = 256);
/// Pole outside the closed disk and max boundary modulus <= 1 + 1e-9.
bool is_self_map(const MoebiusMap& m);
/// Self-map whose boundary moduli all lie within 1e-9 of 1.
bool is_automorphism(const MoebiusMap& m);

enum class MapKind {
    Parabolic,
    HyperbolicAutomorphism,
    HyperbolicNonAutomorphism,
    Elliptic,
    Loxodromic,
    Identity,
};

enum class PointLocation { InDisk, OnCircle, OutsideClosedDisk };

struct FixedPoint {
    Complex value;
    bool at_infinity = false;
    PointLocation location = PointLocation::OutsideClosedDisk;

    friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
};

struct MapClass {
    MapKind kind = MapKind::Identity;
    std::vector<FixedPoint> fixed_points;  ///< one entry for a double fixed point
    bool automorphism = false;
    bool has_interior_fixed_point = false;
    Complex trace_squared;

    friend bool operator==(const MapClass&, const MapClass&) = default;
};

/// Conjugacy class from the normalized trace, fixed points from
/// c z^2 + (d - a) z - b = 0. Affine maps carry infinity as a formal fixed
/// point. Throws InputError unless m is a self-map of the disk.
MapClass classify(const MoebiusMap& m);

struct HalfPlaneForm {
    Complex translation;  ///< Phi(w) = w + translation
    Complex rotation;     ///< boundary fixed point zeta; the map was conjugated by z -> zeta z
    bool automorphism = false;
    double residual = 0.0;  ///< max |Phi(w) - w - translation| on the check grid

    friend bool operator==(const HalfPlaneForm&, const HalfPlaneForm&) = default;
};

/// Rotates the boundary fixed point of a parabolic self-map to +1 and
/// conjugates by sigma. Throws InputError for non-parabolic input.
HalfPlaneForm to_half_plane(const MoebiusMap& m);

struct ParabolicIdentityReport {
    Complex a;
    Complex z;
    std::uint64_t n = 0;
    double modulus_lhs = 0.0;  ///< 1 - |phi_n(z)|^2 by iteration
    double modulus_rhs = 0.0;  ///< 4 Re(sigma(z) + na) / |1 + sigma(z) + na|^2
    double modulus_error = 0.0;
    Complex difference_lhs;    ///< phi_n(z) - phi_n(0) by iteration
    Complex difference_rhs;    ///< 2 (sigma(z) - sigma(0)) / ((sigma(z) + na + 1)(sigma(0) + na + 1))
    double difference_error = 0.0;

    friend bool operator==(const ParabolicIdentityReport&, const ParabolicIdentityReport&) = default;
};

/// Both sides of both closed-form identities for phi = MoebiusMap::parabolic(a).
ParabolicIdentityReport parabolic_identity_check(Complex a, Complex z, std::uint64_t n);

std::string_view to_string(MapKind k) noexcept;
std::string_view to_string(PointLocation l) noexcept;
MapKind map_kind_from_string(std::string_view s);
PointLocation location_from_string(std::string_view s);

}  // namespace hyperlab
