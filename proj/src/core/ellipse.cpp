#include "core/ellipse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "core/error.hpp"

namespace eads::ellipse {

namespace {

void check_confidence(double confidence) {
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw_invalid("confidence must lie strictly between 0 and 1");
}

double determinant(const EllipseModel& m) noexcept {
    return m.cov_tt * m.cov_hh - m.cov_th * m.cov_th;
}

} // namespace

EllipseModel fit(std::span<const Point2> points, double confidence) {
    check_confidence(confidence);
    const std::size_t n = points.size();
    if (n < 3)
        throw_invalid("ellipse fit needs at least 3 points, got " +
                      std::to_string(n));

    EllipseModel m;
    m.confidence = confidence;
    for (const Point2& p : points) {
        m.mean_t += p.t;
        m.mean_h += p.h;
    }
    m.mean_t /= static_cast<double>(n);
    m.mean_h /= static_cast<double>(n);

    for (const Point2& p : points) {
        const double dt = p.t - m.mean_t;
        const double dh = p.h - m.mean_h;
        m.cov_tt += dt * dt;
        m.cov_th += dt * dh;
        m.cov_hh += dh * dh;
    }
    const double divisor = static_cast<double>(n - 1);
    m.cov_tt /= divisor;
    m.cov_th /= divisor;
    m.cov_hh /= divisor;

    const double det = determinant(m);
    const double trace = m.cov_tt + m.cov_hh;
    if (det <= 1e-12 * trace * trace)
        throw_degenerate("covariance is numerically singular: det " +
                         std::to_string(det) + " <= 1e-12 * trace^2 with trace " +
                         std::to_string(trace) +
                         " (constant or collinear input points)");
    return m;
}

double mahalanobis_sq(Point2 p, const EllipseModel& m) {
    const double det = determinant(m);
    const double dt = p.t - m.mean_t;
    const double dh = p.h - m.mean_h;
    return (m.cov_hh * dt * dt - 2.0 * m.cov_th * dt * dh + m.cov_tt * dh * dh) /
           det;
}

double threshold(double confidence) {
    check_confidence(confidence);
    return -2.0 * std::log1p(-confidence);
}

bool classify_point(Point2 p, const EllipseModel& m) {
    return is_outside(mahalanobis_sq(p, m), threshold(m.confidence));
}

std::vector<Point2> boundary_polygon(const EllipseModel& m, std::size_t k) {
    if (k < 8)
        throw_invalid("boundary polygon needs at least 8 vertices");

    // Eigendecomposition of the symmetric 2x2 covariance.
    const double a = m.cov_tt, b = m.cov_th, c = m.cov_hh;
    const double half_trace = 0.5 * (a + c);
    const double radius = std::hypot(0.5 * (a - c), b);
    const double lambda1 = half_trace + radius;
    const double lambda2 = half_trace - radius;

    double v1t, v1h;
    if (b != 0.0) {
        v1t = lambda1 - c;
        v1h = b;
        const double norm = std::hypot(v1t, v1h);
        v1t /= norm;
        v1h /= norm;
    } else if (a >= c) {
        v1t = 1.0;
        v1h = 0.0;
    } else {
        v1t = 0.0;
        v1h = 1.0;
    }
    const double v2t = -v1h;
    const double v2h = v1t;

    const double scale1 = std::sqrt(threshold(m.confidence) * lambda1);
    const double scale2 = std::sqrt(threshold(m.confidence) * lambda2);

    std::vector<Point2> polygon;
    polygon.reserve(k);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double angle = step * static_cast<double>(j);
        const double u = scale1 * std::cos(angle);
        const double w = scale2 * std::sin(angle);
        polygon.push_back({m.mean_t + u * v1t + w * v2t,
                           m.mean_h + u * v1h + w * v2h});
    }
    return polygon;
}

} // namespace eads::ellipse
