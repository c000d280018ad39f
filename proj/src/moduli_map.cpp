#include "affine/moduli_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace affine {

namespace {

double curve_x(CurveSign sign, double u) {
    const double s = sign == CurveSign::Plus ? 1.0 : -1.0;
    return 2.0 + s * (4.0 * u + 1.0 / u);
}

double curve_y(CurveSign sign, double u) {
    const double s = sign == CurveSign::Plus ? 1.0 : -1.0;
    return (4.0 * u * u + s * 4.0 * u) + 2.0;
}

// A parameter interval on which y is strictly monotone.  sigma_+ is monotone
// over the whole window; sigma_- splits at the cusp parameter.
struct Branch {
    CurveSign sign;
    double t_lo, t_hi;
};

std::vector<Branch> branches() {
    const double tc = 1.0 / std::sqrt(2.0);
    return {
        {CurveSign::Plus, kCurveParamMin, kCurveParamMax},
        {CurveSign::Minus, kCurveParamMin, tc},
        {CurveSign::Minus, tc, kCurveParamMax},
    };
}

// x-coordinate of the crossing of the branch with the horizontal line y = y0,
// found by bisection in t (the branch is y-monotone); NaN when there is none.
double branch_crossing_x(const Branch& br, double y0) {
    double lo = br.t_lo, hi = br.t_hi;
    double flo = curve_y(br.sign, lo * lo) - y0;
    double fhi = curve_y(br.sign, hi * hi) - y0;
    if (flo == 0.0) return curve_x(br.sign, lo * lo);
    if (fhi == 0.0) return curve_x(br.sign, hi * hi);
    if ((flo < 0.0) == (fhi < 0.0)) return std::numeric_limits<double>::quiet_NaN();
    for (int it = 0; it < 90; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = curve_y(br.sign, mid * mid) - y0;
        if (fm == 0.0) return curve_x(br.sign, mid * mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double t = 0.5 * (lo + hi);
    return curve_x(br.sign, t * t);
}

// Minimum distance from p to the curve: nearest point of a log-spaced sample
// grid, then golden-section refinement of the bracketing interval.
double curve_distance(CurveSign sign, const PlanePoint& p, int samples) {
    const double llo = std::log(kCurveParamMin);
    const double lhi = std::log(kCurveParamMax);
    auto dist2_at = [&](double t) {
        const double u = t * t;
        const double dx = curve_x(sign, u) - p.x;
        const double dy = curve_y(sign, u) - p.y;
        return dx * dx + dy * dy;
    };
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    std::vector<double> ts(samples);
    for (int i = 0; i < samples; ++i) {
        ts[i] = std::exp(llo + (lhi - llo) * i / (samples - 1));
        const double d = dist2_at(ts[i]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    double a = ts[std::max(0, best - 1)];
    double b = ts[std::min(samples - 1, best + 1)];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    for (int it = 0; it < 80; ++it) {
        if (dist2_at(c) < dist2_at(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    return std::sqrt(std::min({best_d, dist2_at(a), dist2_at(b)}));
}

}  // namespace

std::string to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::D20: return "D20";
        case RegionLabel::D11: return "D11";
        case RegionLabel::D02: return "D02";
        case RegionLabel::BoundarySigmaPlus: return "BoundarySigmaPlus";
        case RegionLabel::BoundarySigmaMinus: return "BoundarySigmaMinus";
        case RegionLabel::Cusp: return "Cusp";
        case RegionLabel::Outside: return "Outside";
    }
    return "Outside";
}

PlanePoint sigma(CurveSign sign, double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("sigma: curve parameter must be positive");
    const double u = t * t;
    return {curve_x(sign, u), curve_y(sign, u)};
}

RegionLabel classify_point(const PlanePoint& p, double tol, int samples_per_curve) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return RegionLabel::Outside;
    if (std::hypot(p.x - kCusp.x, p.y - kCusp.y) <= tol) return RegionLabel::Cusp;
    if (curve_distance(CurveSign::Minus, p, samples_per_curve) <= tol)
        return RegionLabel::BoundarySigmaMinus;
    if (curve_distance(CurveSign::Plus, p, samples_per_curve) <= tol)
        return RegionLabel::BoundarySigmaPlus;

    // The cusp wedge opens to the left: a rightward ray from inside must exit
    // through sigma_-.  The smooth wedge opens right: test with a leftward ray.
    int minus_right = 0;
    int plus_left = 0;
    for (const Branch& br : branches()) {
        const double cx = branch_crossing_x(br, p.y);
        if (std::isnan(cx)) continue;
        if (br.sign == CurveSign::Minus && cx > p.x) ++minus_right;
        if (br.sign == CurveSign::Plus && cx < p.x) ++plus_left;
    }
    if (minus_right % 2 == 1) return RegionLabel::D20;
    if (plus_left % 2 == 1) return RegionLabel::D02;
    return RegionLabel::D11;
}

std::vector<CurveSample> emit_curve(CurveSign sign, double t_min, double t_max, int n) {
    if (n < 2) throw std::invalid_argument("emit_curve: need at least 2 samples");
    if (!(t_min > 0.0) || !(t_max > t_min) || !std::isfinite(t_min) || !std::isfinite(t_max))
        throw std::invalid_argument("emit_curve: invalid parameter range");
    std::vector<CurveSample> out;
    out.reserve(n);
    const double llo = std::log(t_min), lhi = std::log(t_max);
    for (int i = 0; i < n; ++i) {
        double t = std::exp(llo + (lhi - llo) * i / (n - 1));
        if (i == 0) t = t_min;
        if (i == n - 1) t = t_max;
        const PlanePoint p = sigma(sign, t);
        out.push_back({t, p.x, p.y});
    }
    return out;
}

std::vector<GridPoint> region_grid(const GridBounds& bounds, int resolution, double tol) {
    if (resolution < 2) throw std::invalid_argument("region_grid: resolution must be >= 2");
    if (!(bounds.x1 > bounds.x0) || !(bounds.y1 > bounds.y0))
        throw std::invalid_argument("region_grid: empty bounds");
    std::vector<GridPoint> out;
    out.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int iy = 0; iy < resolution; ++iy) {
        const double y = bounds.y0 + (bounds.y1 - bounds.y0) * iy / (resolution - 1);
        for (int ix = 0; ix < resolution; ++ix) {
            const double x = bounds.x0 + (bounds.x1 - bounds.x0) * ix / (resolution - 1);
            out.push_back({x, y, classify_point({x, y}, tol)});
        }
    }
    return out;
}

}  // namespace affine
