#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace eads::ellipse {

// Confidence-ellipse outlier boundary over (temperature, humidity) points:
// sample mean and unbiased covariance define a Mahalanobis metric, and the
// chi-squared quantile with two degrees of freedom sets the normal region's
// radius. One global model is fitted over all points.

struct Point2 {
    double t;
    double h;
};

struct EllipseModel {
    double mean_t = 0.0;
    double mean_h = 0.0;
    // Symmetric 2x2 covariance stored as its three distinct entries.
    double cov_tt = 0.0;
    double cov_th = 0.0;
    double cov_hh = 0.0;
    double confidence = 0.90;
};

// Needs at least 3 non-collinear points. Covariance uses the n-1 divisor.
// Throws Error(degenerate_data) when det(cov) <= 1e-12 * trace(cov)^2.
EllipseModel fit(std::span<const Point2> points, double confidence = 0.90);

// (p - mean)^T cov^-1 (p - mean) via the closed-form 2x2 inverse.
double mahalanobis_sq(Point2 p, const EllipseModel& m);

// Chi-squared quantile, 2 dof: -2 ln(1 - confidence).
double threshold(double confidence);

// Tie rule: a squared distance exactly at the threshold is still normal.
inline bool is_outside(double dist_sq, double thresh) noexcept {
    return dist_sq > thresh;
}

// true = anomalous.
bool classify_point(Point2 p, const EllipseModel& m);

// k >= 8 points on {x : mahalanobis_sq(x) == threshold(confidence)},
// angle-uniform via the covariance eigendecomposition.
std::vector<Point2> boundary_polygon(const EllipseModel& m, std::size_t k);

} // namespace eads::ellipse
