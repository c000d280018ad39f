#pragma once

#include <string>
#include <vector>

#include "affine/core_algebra.hpp"

namespace affine {

/// A point of the (psi3, Psi3) plane.
struct PlanePoint {
    double x = 0.0;
    double y = 0.0;
};

enum class CurveSign { Plus, Minus };

/// Outcome of locating a plane point against the two boundary curves.
/// D20 is the open region enclosed by the left-opening cusp curve, D02 the
/// region enclosed by the right-opening smooth curve, D11 everything between;
/// points within tolerance of a curve get the matching boundary label and the
/// cusp point (-2, 1) gets its own label.  Outside is reserved for non-finite
/// input.
enum class RegionLabel {
    D20,
    D11,
    D02,
    BoundarySigmaPlus,
    BoundarySigmaMinus,
    Cusp,
    Outside,
};

std::string to_string(RegionLabel label);

/// The boundary curves
///   sigma_+(t) = ( 4t^2 + 1/t^2 + 2,  4t^4 + 4t^2 + 2)
///   sigma_-(t) = (-4t^2 - 1/t^2 + 2,  4t^4 - 4t^2 + 2)
/// sigma_+ is smooth; sigma_- has a cusp at (-2, 1), reached at t = 1/sqrt(2).
/// Throws for t <= 0 (the curves are sampled on the positive half-line; both
/// are even in t).
PlanePoint sigma(CurveSign sign, double t);

/// The cusp of sigma_-, the image of the exceptional orbit.
inline constexpr PlanePoint kCusp{-2.0, 1.0};

/// Parameter window the classifier samples; covers |x| up to ~4e6 and
/// y up to ~4e12.
inline constexpr double kCurveParamMin = 1e-3;
inline constexpr double kCurveParamMax = 1e3;

/// Locates p by horizontal-ray crossing parity against both curves.  Each
/// curve is split into y-monotone branches bracketed on a log-spaced
/// parameter grid and the crossings are refined adaptively near the ray.
/// tol is the absolute plane distance for boundary/cusp labels;
/// samples_per_curve controls the bracketing grid.
RegionLabel classify_point(const PlanePoint& p, double tol = 1e-8,
                           int samples_per_curve = 2048);

struct CurveSample {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// n log-spaced samples of the chosen curve with exact endpoints, increasing
/// in t.  Requires n >= 2 and 0 < t_min < t_max.
std::vector<CurveSample> emit_curve(CurveSign sign, double t_min, double t_max, int n);

struct GridBounds {
    double x0 = 0.0, x1 = 0.0;
    double y0 = 0.0, y1 = 0.0;
};

struct GridPoint {
    double x = 0.0;
    double y = 0.0;
    RegionLabel label = RegionLabel::Outside;
};

/// Row-major lattice of labeled points over the bounds, resolution points per
/// axis (endpoints included).  Requires resolution >= 2 and nonempty bounds.
std::vector<GridPoint> region_grid(const GridBounds& bounds, int resolution,
                                   double tol = 1e-8);

}  // namespace affine
