#include "dacad/device_model.hpp"
#include "dacad/errors.hpp"
#include "dacad/ladder_line.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace dacad;

namespace {

const char* kOneEntry = R"({"transistors":[{"name":"a","gm_S":0.05,"cgs_F":1e-12,"cds_F":2e-13,
    "ri_ohm":1.5,"rds_ohm":300,"reference":"test"}]})";

} // namespace

TEST_CASE("load_catalog parses a single entry")
{
    auto c = load_catalog(kOneEntry);
    REQUIRE(c.transistors.size() == 1);
    const auto& t = c.transistors[0];
    CHECK(t.name == "a");
    CHECK(t.gm == 0.05);
    CHECK(t.cgs == 1e-12);
    CHECK(t.cds == 2e-13);
    CHECK(t.ri == 1.5);
    CHECK(t.rds == 300);
    CHECK(t.reference == "test");
    CHECK(c.find("a") == &c.transistors[0]);
    CHECK(c.find("b") == nullptr);
}

TEST_CASE("optional ri and rds default to lossless")
{
    auto c = load_catalog(R"({"transistors":[{"name":"x","gm_S":0.1,"cgs_F":1e-12,"cds_F":1e-13}]})");
    CHECK(c.transistors[0].ri == 0.0);
    CHECK(std::isinf(c.transistors[0].rds));
    CHECK_FALSE(c.transistors[0].has_finite_rds());
}

TEST_CASE("load_catalog error paths")
{
    CHECK_THROWS_AS(load_catalog("{not json"), ParseError);
    CHECK_THROWS_AS(load_catalog(R"({"transistors":[{"name":"a","gm_S":0.05,"cgs_F":-1e-12,"cds_F":1e-13}]})"),
                    SchemaError);
    CHECK_THROWS_AS(load_catalog(R"({"transistors":[{"name":"a","gm_S":0.05,"cds_F":1e-13}]})"), SchemaError);
    CHECK_THROWS_AS(load_catalog(R"({"transistors":[{"name":"a","gm_S":0.05,"cgs_F":1e-12,"cds_F":1e-13,"vth":1}]})"),
                    SchemaError);
    CHECK_THROWS_AS(load_catalog(R"({"transistors":[], "extra": 1})"), SchemaError);
    CHECK_THROWS_AS(load_catalog(R"({"transistors":[{"name":"a","gm_S":"big","cgs_F":1e-12,"cds_F":1e-13}]})"),
                    SchemaError);
    CHECK_THROWS_AS(load_catalog(R"({"transistors":[{"name":"a","gm_S":0.05,"cgs_F":1e-12,"cds_F":1e-13,"ri_ohm":-1}]})"),
                    SchemaError);
    CHECK_THROWS_AS(load_catalog(R"({"transistors":[{"name":"a","gm_S":0.05,"cgs_F":1e-12,"cds_F":1e-13},
                                                   {"name":"a","gm_S":0.05,"cgs_F":1e-12,"cds_F":1e-13}]})"),
                    DuplicateNameError);
}

TEST_CASE("catalog file on disk")
{
    auto c = load_catalog_file(DACAD_TEST_DATA_DIR "/catalog.json");
    CHECK(c.transistors.size() == 3);
    CHECK(c.source_path == DACAD_TEST_DATA_DIR "/catalog.json");
    CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.json"), Error);
}

TEST_CASE("serialize then load reproduces every field")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Catalog c;
        for (int i = 0; i < 3; ++i) {
            TransistorModel t;
            t.name = "t" + std::to_string(trial) + "_" + std::to_string(i);
            t.gm = 1e-3 + u(rng);
            t.cgs = 1e-15 + u(rng) * 1e-11;
            t.cds = 1e-15 + u(rng) * 1e-12;
            t.ri = i == 0 ? 0.0 : u(rng) * 5;
            t.rds = i == 1 ? kLosslessRds : 10 + u(rng) * 1000;
            t.reference = i == 2 ? "" : "ref " + std::to_string(u(rng));
            c.transistors.push_back(t);
        }
        auto back = load_catalog(serialize_catalog(c));
        CHECK(back.transistors == c.transistors);
    }
}

TEST_CASE("effective_gate_capacitance")
{
    CHECK(effective_gate_capacitance(1.79e-12) == 1.79e-12);
    CHECK(effective_gate_capacitance(1.79e-12, 0.358e-12) == doctest::Approx(0.29833333e-12).epsilon(1e-6));
    for (double c : {1e-15, 3.3e-13, 2e-12})
        CHECK(effective_gate_capacitance(c, c) == doctest::Approx(c / 2).epsilon(1e-15));
    CHECK_THROWS_AS(effective_gate_capacitance(0.0), InvalidInput);
    CHECK_THROWS_AS(effective_gate_capacitance(1e-12, 0.0), InvalidInput);
    CHECK_THROWS_AS(effective_gate_capacitance(1e-12, -1e-12), InvalidInput);
}

TEST_CASE("effective_gate_capacitance is monotone in cseries and below cgs")
{
    const double cgs = 1e-12;
    double prev = 0.0;
    for (double cs = 1e-15; cs < 1e-9; cs *= 1.3) {
        const double c = effective_gate_capacitance(cgs, cs);
        CHECK(c > prev);
        CHECK(c < cgs);
        CHECK(c < std::min(cgs, cs));
        prev = c;
    }
}

TEST_CASE("estimate_cgs")
{
    CHECK(estimate_cgs(3.44e-3, 200e-6, 0.18e-6) == doctest::Approx(123.84e-15).epsilon(1e-12));
    CHECK(estimate_cgs(5.0, 0.0, 1e-6) == 0.0);
    CHECK(estimate_cgs(1e-3, 1e-4, 1e-7) == doctest::Approx(1e-14).epsilon(1e-14));
    CHECK_THROWS_AS(estimate_cgs(-1, 1, 1), InvalidInput);
}

TEST_CASE("builtin verification table")
{
    const auto rows = builtin_table1();
    REQUIRE(rows.size() == 9);
    CHECK(rows[6].reference_tag == "[15]");
    CHECK(rows[6].effective_capacitance == 1.79e-12);
    CHECK(rows[6].claimed_limit == 3.55e9);
    CHECK(rows[0].reference_tag == "[4]");
    CHECK(rows[0].effective_capacitance == 20e-15);
    CHECK(rows[0].claimed_limit == 318e9);
    for (const auto& r : rows) {
        const double fc = 1.0 / (M_PI * 50.0 * r.effective_capacitance);
        CHECK(std::abs(fc - r.claimed_limit) / r.claimed_limit <= 0.02);
    }
}
