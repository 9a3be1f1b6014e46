#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "core/ellipse.hpp"
#include "core/error.hpp"

using namespace eads::ellipse;
using eads::Error;
using eads::ErrorCode;

namespace {

EllipseModel identity_model(double confidence = 0.90) {
    EllipseModel m;
    m.mean_t = 0.0;
    m.mean_h = 0.0;
    m.cov_tt = 1.0;
    m.cov_th = 0.0;
    m.cov_hh = 1.0;
    m.confidence = confidence;
    return m;
}

// Draws from N(mean, cov) via the Cholesky factor.
struct GaussianSampler {
    const EllipseModel& m;
    double l11, l21, l22;

    explicit GaussianSampler(const EllipseModel& model) : m(model) {
        l11 = std::sqrt(m.cov_tt);
        l21 = m.cov_th / l11;
        l22 = std::sqrt(m.cov_hh - l21 * l21);
    }

    Point2 operator()(std::mt19937_64& rng) const {
        std::normal_distribution<double> normal(0.0, 1.0);
        const double z1 = normal(rng);
        const double z2 = normal(rng);
        return {m.mean_t + l11 * z1, m.mean_h + l21 * z1 + l22 * z2};
    }
};

} // namespace

TEST_CASE("fit on the unit square corners") {
    const std::vector<Point2> corners{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    const auto m = fit(corners);
    CHECK(m.mean_t == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.mean_h == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(m.cov_tt == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(m.cov_hh == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(std::abs(m.cov_th) <= 1e-14);
    CHECK(m.confidence == 0.90);
}

TEST_CASE("degenerate and undersized fits are rejected") {
    const std::vector<Point2> same{{2, 3}, {2, 3}, {2, 3}, {2, 3}};
    try {
        fit(same);
        FAIL("expected degenerate-data error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_data);
        CHECK(std::string(e.what()).find("singular") != std::string::npos);
    }

    // collinear points have zero determinant too
    const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK_THROWS_AS(fit(line), Error);

    const std::vector<Point2> two{{0, 0}, {1, 1}};
    try {
        fit(two);
        FAIL("expected precondition error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_argument);
    }

    CHECK_THROWS_AS(fit(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}, 1.0), Error);
    CHECK_THROWS_AS(fit(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}, 0.0), Error);
}

TEST_CASE("mahalanobis distance worked values") {
    auto m = identity_model();
    CHECK(mahalanobis_sq({0, 0}, m) == 0.0);
    CHECK(mahalanobis_sq({3, 4}, m) == doctest::Approx(25.0).epsilon(1e-14));

    m.cov_tt = 4.0;
    CHECK(mahalanobis_sq({2, 0}, m) == doctest::Approx(1.0).epsilon(1e-14));

    // off-center model
    m = identity_model();
    m.mean_t = 10.0;
    m.mean_h = -5.0;
    CHECK(mahalanobis_sq({10, -5}, m) == 0.0);
    CHECK(mahalanobis_sq({13, -1}, m) == doctest::Approx(25.0).epsilon(1e-14));
}

TEST_CASE("mahalanobis symmetry about the mean") {
    EllipseModel m;
    m.mean_t = 3.0;
    m.mean_h = -2.0;
    m.cov_tt = 2.5;
    m.cov_th = 0.7;
    m.cov_hh = 1.2;
    std::mt19937_64 rng(31);
    // dyadic offsets keep mean +- d exact, so equality holds bitwise
    std::uniform_int_distribution<int> d(-320, 320);
    for (int i = 0; i < 500; ++i) {
        const double dt = d(rng) / 64.0, dh = d(rng) / 64.0;
        CHECK(mahalanobis_sq({m.mean_t + dt, m.mean_h + dh}, m) ==
              mahalanobis_sq({m.mean_t - dt, m.mean_h - dh}, m));
    }
}

TEST_CASE("chi-squared threshold closed form") {
    CHECK(threshold(0.90) == doctest::Approx(-2.0 * std::log(0.10)).epsilon(1e-12));
    CHECK(std::abs(threshold(0.90) - 4.6052) <= 1e-4);
    CHECK(threshold(0.50) == doctest::Approx(-2.0 * std::log(0.5)).epsilon(1e-12));
    CHECK(std::abs(threshold(0.50) - 1.3863) <= 1e-4);
    // limit behavior at the bottom of the confidence range
    CHECK(threshold(1e-12) > 0.0);
    CHECK(threshold(1e-12) <= 3e-12);

    CHECK_THROWS_AS(threshold(0.0), Error);
    CHECK_THROWS_AS(threshold(1.0), Error);
    CHECK_THROWS_AS(threshold(-0.5), Error);
    CHECK_THROWS_AS(threshold(1.5), Error);
}

TEST_CASE("classification rule and the boundary tie") {
    const auto m = identity_model(0.90);
    CHECK(!classify_point({0, 0}, m));
    // 3^2 = 9 > 4.6052
    CHECK(classify_point({3, 0}, m));
    // just inside
    CHECK(!classify_point({2, 0}, m));

    // exactly at the threshold is still normal; strictly beyond is not
    const double t = threshold(0.90);
    CHECK(!is_outside(t, t));
    CHECK(is_outside(std::nextafter(t, 1e9), t));
    CHECK(!is_outside(std::nextafter(t, 0.0), t));
}

TEST_CASE("boundary polygon lies on the threshold curve") {
    EllipseModel m;
    m.mean_t = 17.0;
    m.mean_h = 43.0;
    m.cov_tt = 3.0;
    m.cov_th = 1.1;
    m.cov_hh = 2.0;
    m.confidence = 0.90;

    const auto polygon = boundary_polygon(m, 64);
    REQUIRE(polygon.size() == 64);
    const double t = threshold(m.confidence);
    for (const auto& p : polygon)
        CHECK(std::abs(mahalanobis_sq(p, m) - t) <= 1e-9);

    CHECK_THROWS_AS(boundary_polygon(m, 7), Error);
}

TEST_CASE("circular model puts k=8 vertices on the axes") {
    const auto m = identity_model(0.90);
    const double r = std::sqrt(threshold(0.90));
    const auto polygon = boundary_polygon(m, 8);
    REQUIRE(polygon.size() == 8);
    // vertices 0, 2, 4, 6 are the axis points of the circle
    CHECK(polygon[0].t == doctest::Approx(r).epsilon(1e-12));
    CHECK(polygon[0].h == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(polygon[2].t == doctest::Approx(0.0).scale(1).epsilon(1e-12));
    CHECK(polygon[2].h == doctest::Approx(r).epsilon(1e-12));
    CHECK(polygon[4].t == doctest::Approx(-r).epsilon(1e-12));
    CHECK(polygon[6].h == doctest::Approx(-r).epsilon(1e-12));
}

TEST_CASE("doubling k refines the polygon without moving shared vertices") {
    EllipseModel m;
    m.mean_t = 1.0;
    m.mean_h = 2.0;
    m.cov_tt = 2.0;
    m.cov_th = 0.6;
    m.cov_hh = 1.5;
    const auto coarse = boundary_polygon(m, 16);
    const auto fine = boundary_polygon(m, 32);
    for (std::size_t j = 0; j < coarse.size(); ++j) {
        CHECK(std::abs(coarse[j].t - fine[2 * j].t) <= 1e-12);
        CHECK(std::abs(coarse[j].h - fine[2 * j].h) <= 1e-12);
    }
}

TEST_CASE("affine consistency: translation shifts the mean, nothing else") {
    std::mt19937_64 rng(37);
    GaussianSampler sampler(identity_model());
    std::vector<Point2> points;
    for (int i = 0; i < 400; ++i) points.push_back(sampler(rng));

    const auto base = fit(points);
    const Point2 shift{117.5, -42.25};
    std::vector<Point2> moved;
    for (const auto& p : points) moved.push_back({p.t + shift.t, p.h + shift.h});
    const auto translated = fit(moved);

    CHECK(translated.mean_t == doctest::Approx(base.mean_t + shift.t).epsilon(1e-9));
    CHECK(translated.mean_h == doctest::Approx(base.mean_h + shift.h).epsilon(1e-9));
    CHECK(std::abs(translated.cov_tt - base.cov_tt) <= 1e-9);
    CHECK(std::abs(translated.cov_th - base.cov_th) <= 1e-9);
    CHECK(std::abs(translated.cov_hh - base.cov_hh) <= 1e-9);

    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(std::abs(mahalanobis_sq(points[i], base) -
                       mahalanobis_sq(moved[i], translated)) <= 1e-9);
        CHECK(classify_point(points[i], base) ==
              classify_point(moved[i], translated));
    }
}

TEST_CASE("fraction inside matches the confidence level") {
    EllipseModel truth;
    truth.mean_t = 17.0;
    truth.mean_h = 43.5;
    truth.cov_tt = 1.5;
    truth.cov_th = -0.4;
    truth.cov_hh = 0.9;

    std::mt19937_64 rng(41);
    GaussianSampler sampler(truth);
    std::vector<Point2> points;
    points.reserve(20000);
    for (int i = 0; i < 20000; ++i) points.push_back(sampler(rng));

    for (double confidence : {0.5, 0.9, 0.99}) {
        const auto m = fit(points, confidence);
        std::size_t inside = 0;
        std::vector<Point2> fresh;
        fresh.reserve(100000);
        for (int i = 0; i < 100000; ++i) fresh.push_back(sampler(rng));
        for (const auto& p : fresh)
            if (!classify_point(p, m)) ++inside;
        const double fraction = static_cast<double>(inside) / fresh.size();
        CHECK(std::abs(fraction - confidence) <= 0.01);
    }
}
