#include <doctest.h>

#include <cmath>

#include "gci/dgp.hpp"
#include "gci/rng.hpp"

using namespace gci;

TEST_CASE("coefficient vector has the requested sparsity and norm") {
    DgpConfig cfg;
    cfg.T = 50;
    cfg.p = 100;
    cfg.seed = 5;
    const auto data = generate(cfg);
    const double expect = 2.0 / std::sqrt(5.0);
    for (int j = 0; j < 5; ++j) CHECK(data.beta(j) == doctest::Approx(expect).epsilon(1e-12));
    for (int j = 5; j < 100; ++j) CHECK(data.beta(j) == 0.0);
    CHECK(data.beta.norm() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("independent errors have unit variance and no autocorrelation") {
    DgpConfig cfg;
    cfg.T = 100000;
    cfg.p = 1;
    cfg.active_count = 1;
    cfg.rho = 0.0;
    cfg.seed = 6;
    const auto data = generate(cfg);
    const Vector& e = data.errors;
    const double mean = e.mean();
    const double var = (e.array() - mean).square().sum() / e.size();
    CHECK(var == doctest::Approx(1.0).epsilon(0.02));
    double lag1 = 0.0;
    for (int t = 1; t < e.size(); ++t) lag1 += (e(t) - mean) * (e(t - 1) - mean);
    lag1 /= (e.size() - 1) * var;
    CHECK(std::abs(lag1) < 0.01);
}

TEST_CASE("highly persistent errors show the configured autocorrelation") {
    DgpConfig cfg;
    cfg.T = 100000;
    cfg.p = 1;
    cfg.active_count = 1;
    cfg.rho = 0.9;
    cfg.seed = 7;
    const auto data = generate(cfg);
    const Vector& e = data.errors;
    const double mean = e.mean();
    const double var = (e.array() - mean).square().sum() / e.size();
    double lag1 = 0.0;
    for (int t = 1; t < e.size(); ++t) lag1 += (e(t) - mean) * (e(t - 1) - mean);
    lag1 /= (e.size() - 1) * var;
    CHECK(lag1 == doctest::Approx(0.9).epsilon(0.012));
}

TEST_CASE("responses decompose as signal plus error and the tail is split off") {
    DgpConfig cfg;
    cfg.T = 40;
    cfg.p = 8;
    cfg.T1 = 3;
    cfg.seed = 8;
    const auto data = generate(cfg);
    CHECK(data.series.t0 == 37);
    CHECK(data.series.t1 == 3);
    CHECK(data.true_tail.size() == 3);
    for (int t = 0; t < 37; ++t) {
        const double expect = data.series.features.row(t).dot(data.beta) + data.errors(t);
        CHECK(data.series.responses(t) == doctest::Approx(expect).epsilon(1e-12));
    }
    for (int i = 0; i < 3; ++i) {
        const int t = 37 + i;
        const double expect = data.series.features.row(t).dot(data.beta) + data.errors(t);
        CHECK(data.true_tail(i) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("generation is deterministic given the seed") {
    DgpConfig cfg;
    cfg.T = 30;
    cfg.p = 4;
    cfg.active_count = 4;
    cfg.rho = 0.5;
    cfg.seed = 99;
    const auto a = generate(cfg);
    const auto b = generate(cfg);
    CHECK(a.series.responses == b.series.responses);
    CHECK(a.series.features == b.series.features);
    CHECK(a.true_tail == b.true_tail);
    cfg.seed = 100;
    CHECK(generate(cfg).series.responses != a.series.responses);
}

TEST_CASE("config validation") {
    DgpConfig cfg;
    cfg.rho = 1.0;
    CHECK_THROWS_AS(generate(cfg), ValidationError);
    cfg.rho = 0.0;
    cfg.active_count = 1000;
    CHECK_THROWS_AS(generate(cfg), ValidationError);
}

TEST_CASE("AR response generator basics") {
    Vector rho1(1);
    rho1 << 0.0;
    const Vector iid = generate_ar_response(rho1, 1000, 1.0, 1);
    const double m = iid.mean();
    CHECK(std::abs(m) < 0.15);

    rho1 << 0.5;
    const Vector y = generate_ar_response(rho1, 100000, std::sqrt(1.0 - 0.25), 2);
    const double var = (y.array() - y.mean()).square().sum() / y.size();
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));

    rho1 << 1.0;
    CHECK_THROWS_AS(generate_ar_response(rho1, 100, 1.0, 3), ValidationError);
}

TEST_CASE("AR(2) stationarity check uses the companion matrix") {
    Vector rho2(2);
    rho2 << 0.5, 0.4;  // stationary
    CHECK_NOTHROW(generate_ar_response(rho2, 50, 1.0, 4));
    rho2 << 0.9, 0.2;  // root outside the unit circle
    CHECK_THROWS_AS(generate_ar_response(rho2, 50, 1.0, 5), ValidationError);
}
