#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "gci/harness.hpp"

using namespace gci;

namespace {

CoverageSettings tiny_settings() {
    CoverageSettings s;
    s.T_list = {30};
    s.rho_list = {0.0};
    s.replications = 5;
    s.p = 5;
    s.H = 40;
    s.estimator = Method::Ridge;
    s.seed = 555;
    return s;
}

}  // namespace

TEST_CASE("scheme factory covers all four schemes") {
    CHECK(make_scheme_set(Scheme::NOB, 12, 11, 3).size() == 4);
    CHECK(make_scheme_set(Scheme::CSO, 12, 11, 3).size() == 12);
    CHECK(make_scheme_set(Scheme::OB, 12, 3, 3).size() == 12);
    const auto split = make_scheme_set(Scheme::SPLIT, 12, 11, 2);
    CHECK(split.scheme == Scheme::SPLIT);
    CHECK(verify_group(split));
}

TEST_CASE("coverage run produces sane rows") {
    const auto rows = run_coverage(tiny_settings());
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].T == 30);
    CHECK(rows[0].replications == 5);
    CHECK(rows[0].coverage >= 0.0);
    CHECK(rows[0].coverage <= 1.0);
    CHECK(rows[0].mean_length >= 0.0);
}

TEST_CASE("single-replication coverage is zero or one") {
    auto s = tiny_settings();
    s.replications = 1;
    const auto rows = run_coverage(s);
    CHECK((rows[0].coverage == 0.0 || rows[0].coverage == 1.0));
}

TEST_CASE("coverage runs are reproducible") {
    const auto a = run_coverage(tiny_settings());
    const auto b = run_coverage(tiny_settings());
    CHECK(a[0].coverage == b[0].coverage);
    CHECK(a[0].mean_length == b[0].mean_length);
}

TEST_CASE("coverage CSV carries the config comment and header") {
    const auto rows = run_coverage(tiny_settings());
    const std::string path = "test_coverage.csv";
    write_coverage_csv(path, rows, "replications=5 seed=555");
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "# replications=5 seed=555");
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("T,rho,empirical_coverage", 0) == 0);
    int rows_seen = 0;
    while (std::getline(in, line)) ++rows_seen;
    CHECK(rows_seen == 1);
    std::remove(path.c_str());
}
