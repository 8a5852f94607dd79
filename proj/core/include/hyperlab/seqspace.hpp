#pragma once

// Finite model of l^p(N) and l^p(Z): vectors supported on an explicit index
// window, their norms, coordinate functionals and the coordinate-functional
// surrogate for weak neighborhoods.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace hyperlab {

using Complex = std::complex<double>;

/// Index set of the ambient space: Natural is {1, 2, ...}, Integers is Z.
enum class Axis { Natural, Integers };

/// Closed index interval [lo, hi] on an axis.
struct IndexWindow {
    long lo = 1;
    long hi = 1;
    Axis axis = Axis::Integers;

    /// Validating constructor: lo <= hi, and lo >= 1 on the natural axis.
    static IndexWindow make(long lo, long hi, Axis axis);

    std::size_t size() const noexcept { return static_cast<std::size_t>(hi - lo + 1); }
    bool contains(long j) const noexcept { return lo <= j && j <= hi; }

    friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

/// Smallest window containing both arguments. Axes must agree.
IndexWindow hull(const IndexWindow& a, const IndexWindow& b);

/// Finitely supported element of l^p. Coefficients outside the window are zero.
class WindowVector {
public:
    WindowVector(IndexWindow window, std::vector<Complex> coeffs, double p);

    static WindowVector zero(IndexWindow window, double p);
    /// scale * e_j on a one-point window.
    static WindowVector basis(long j, Axis axis, double p, Complex scale = 1.0);

    const IndexWindow& window() const noexcept { return window_; }
    Axis axis() const noexcept { return window_.axis; }
    double p() const noexcept { return p_; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Coordinate functional x -> x_j; zero outside the window.
    Complex operator[](long j) const noexcept;

    bool is_zero() const noexcept;

    /// Same vector with the window grown to `w` (which must contain the current one).
    WindowVector widened(const IndexWindow& w) const;

    friend bool operator==(const WindowVector&, const WindowVector&) = default;

private:
    IndexWindow window_;
    std::vector<Complex> coeffs_;
    double p_;
};

WindowVector operator+(const WindowVector& a, const WindowVector& b);
WindowVector operator-(const WindowVector& a, const WindowVector& b);
WindowVector operator*(Complex c, const WindowVector& x);

/// (sum |x_j|^p)^(1/p), evaluated with max-scaling so large or tiny entries
/// do not overflow.
double norm(const WindowVector& x);

/// Membership in the closed ball {x : ||x|| <= radius}. No tolerance.
bool in_ball(const WindowVector& x, double radius);

struct Restriction {
    WindowVector vector;
    double dropped_norm = 0.0;  ///< l^p norm of the discarded coefficients
};

/// Restricts x to `window`; the mass that falls outside is reported, not lost silently.
Restriction restrict_to(const WindowVector& x, const IndexWindow& window);

/// Basic weak neighborhood built from finitely many coordinate functionals:
/// {x : |x_j - center_j| < epsilon for every listed j}.
struct WeakNeighborhood {
    WindowVector center;
    std::vector<long> indices;
    double epsilon;

    WeakNeighborhood(WindowVector center, std::vector<long> indices, double epsilon);
};

bool weak_member(const WindowVector& x, const WeakNeighborhood& w);

enum class WeakNullFailure { None, Norm, Coordinate };

struct WeakNullReport {
    bool passed = false;
    WeakNullFailure failure = WeakNullFailure::None;
    std::vector<double> norms;       ///< norm of each element, in order
    double sup_norm = 0.0;
    std::vector<long> tracked;       ///< coordinates checked on the last element
    double final_max_coordinate = 0.0;
    std::optional<std::size_t> failing_position;  ///< 1-based position of the first over-bound norm
    std::optional<long> failing_index;            ///< tracked coordinate that stayed large
    double failing_value = 0.0;                   ///< offending norm or coordinate modulus

    friend bool operator==(const WeakNullReport&, const WeakNullReport&) = default;
};

/// Surrogate for weak convergence to zero in reflexive l^p (1 < p < infinity):
/// the sequence is norm bounded by `norm_bound` and the tracked coordinates of
/// the final element have modulus below `coord_tol`. By default the tracked
/// coordinates are the window of the first element.
///
/// Throws InputError for p = 1, where bounded + coordinatewise null does not
/// characterize weak convergence, and for empty or mixed-exponent input.
WeakNullReport weak_null_surrogate(std::span<const WindowVector> seq, double coord_tol, double norm_bound,
                                   std::optional<std::vector<long>> tracked = std::nullopt);

}  // namespace hyperlab
