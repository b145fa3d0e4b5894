#include "doctest.h"

#include <cmath>

#include "fourex/experiments.hpp"
#include "fourex/refined.hpp"
#include "fourex/special_functions.hpp"

using namespace fourex;

TEST_CASE("refined configuration arithmetic") {
    const RefinedConfig r1 = make_refined(default_config(), 1);
    CHECK(r1.fine.boundary_nodes == 25);
    CHECK(r1.fine.basis_order == 24);

    const RefinedConfig r2 = make_refined(default_config(), 2);
    CHECK(r2.fine.boundary_nodes == 49); // 2*(25-1)+1
    CHECK(r2.fine.basis_order == 48);
    CHECK(extension_geometry(6.0, 49).node_count == 576); // 2 * coarse L_delta

    const RefinedConfig r4 = make_refined(default_config(), 4);
    CHECK(r4.fine.boundary_nodes == 97);

    CHECK_THROWS_AS(make_refined(default_config(), 0), std::invalid_argument);
    CHECK_THROWS_AS(make_refined(alternate_config(), 2), std::invalid_argument); // T = 2.3
    CHECK_NOTHROW(make_refined(alternate_config(), 1));
}

TEST_CASE("fine abscissae pin the boundary") {
    const RefinedConfig rc = make_refined(make_config(4.0, 3, 1.0), 2);
    const std::vector<double> t = fine_boundary_abscissae(rc, 32);
    const int mr = rc.fine.boundary_nodes; // 5
    REQUIRE(static_cast<int>(t.size()) == 2 * mr);
    CHECK(t[0] == -1.0);
    CHECK(t[mr - 1] == doctest::Approx(-1.0 + (mr - 1) / 64.0).epsilon(1e-16));
    CHECK(t[mr] == doctest::Approx(60.0 / 64).epsilon(1e-16));
    CHECK(t[2 * mr - 1] == 1.0);
}

TEST_CASE("refined boundary data") {
    SUBCASE("identity function at R = 2 reproduces the frozen fine values") {
        const RefinedConfig rc = make_refined(make_config(4.0, 3, 1.0), 2);
        const std::vector<double> t = fine_boundary_abscissae(rc, 32);
        std::vector<cdouble> values(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) values[i] = t[i];
        const int mr = rc.fine.boundary_nodes;
        const std::vector<cdouble> g = refined_boundary_data(
            std::span<const cdouble>(values).first(mr),
            std::span<const cdouble>(values).subspan(mr), rc);
        REQUIRE(g.size() == 10);
        const double want[5] = {60.0 / 64, 61.0 / 64, 62.0 / 64, 63.0 / 64, 1.0};
        for (int j = 0; j < 5; ++j) CHECK(g[j].real() == doctest::Approx(want[j]).epsilon(1e-16));
        CHECK(g[5].real() == -1.0);
    }
    SUBCASE("R = 1 matches the coarse extraction") {
        const ExtensionConfig cfg = make_config(4.0, 3, 1.0);
        const RefinedConfig rc = make_refined(cfg, 1);
        const int m_half = 32;
        std::vector<cdouble> samples(65);
        for (int l = -m_half; l <= m_half; ++l) {
            samples[l + m_half] = std::sin(2.2 * l / m_half);
        }
        const std::vector<double> t = fine_boundary_abscissae(rc, m_half);
        std::vector<cdouble> fine(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) fine[i] = std::sin(2.2 * t[i]);
        const int mr = rc.fine.boundary_nodes;
        const std::vector<cdouble> g = refined_boundary_data(
            std::span<const cdouble>(fine).first(mr), std::span<const cdouble>(fine).subspan(mr),
            rc);
        const std::vector<cdouble> coarse =
            extract_boundary_data(samples, extension_geometry(4.0, 3), m_half);
        REQUIRE(g.size() == coarse.size());
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(g[i] == coarse[i]);
    }
    SUBCASE("constants pass through") {
        const RefinedConfig rc = make_refined(default_config(), 3);
        const int mr = rc.fine.boundary_nodes;
        const std::vector<cdouble> block(mr, cdouble{0.5, -2.0});
        for (const cdouble& v : refined_boundary_data(block, block, rc)) {
            CHECK(v == cdouble{0.5, -2.0});
        }
    }
    SUBCASE("length mismatch") {
        const RefinedConfig rc = make_refined(default_config(), 2);
        CHECK_THROWS_AS(refined_boundary_data(std::vector<cdouble>(3), std::vector<cdouble>(3), rc),
                        std::invalid_argument);
    }
}

TEST_CASE("fine working nodes land on the coarse ones") {
    const ExtensionConfig cfg = default_config();
    for (const int refine : {2, 4}) {
        const RefinedConfig rc = make_refined(cfg, refine);
        const ExtensionGeometry coarse = extension_geometry(cfg.extension_ratio, cfg.boundary_nodes);
        const ExtensionGeometry fine =
            extension_geometry(rc.fine.extension_ratio, rc.fine.boundary_nodes);
        const int m_half = 100;
        for (int l = m_half + 1; l <= m_half + coarse.half() - cfg.boundary_nodes; ++l) {
            const int fine_index = rc.fine.boundary_nodes + (l - m_half) * refine;
            const int coarse_index = cfg.boundary_nodes + l - m_half;
            CHECK(std::abs(fine.node(fine_index) - coarse.node(coarse_index)) < 1e-13);
        }
    }
}

TEST_CASE("assemble at R = 1 is bit-identical to the base algorithm") {
    const ExtensionConfig cfg = make_config(6.0, 25, 1.0);
    const int m_half = 40;
    std::vector<cdouble> samples(2 * m_half + 1);
    for (int l = -m_half; l <= m_half; ++l) {
        samples[l + m_half] = std::exp(static_cast<double>(l) / m_half);
    }

    auto op = shared_operator(cfg);
    const PeriodicSamples base = extend_periodically(*op, samples, m_half);

    const RefinedConfig rc = make_refined(cfg, 1);
    const std::vector<double> t = fine_boundary_abscissae(rc, m_half);
    std::vector<cdouble> fine(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) fine[i] = std::exp(t[i]);
    const int mr = rc.fine.boundary_nodes;
    auto fine_op = shared_fine_operator(rc);
    const std::vector<cdouble> g = refined_boundary_data(
        std::span<const cdouble>(fine).first(mr), std::span<const cdouble>(fine).subspan(mr), rc);
    const PeriodicSamples refined =
        assemble_refined(samples, compute_extension_values(*fine_op, g), rc, m_half);

    REQUIRE(base.values.size() == refined.values.size());
    CHECK(base.lambda == refined.lambda);
    for (std::size_t i = 0; i < base.values.size(); ++i) {
        CHECK(base.values[i].real() == refined.values[i].real());
        CHECK(base.values[i].imag() == refined.values[i].imag());
    }
}

TEST_CASE("refinement helps an under-resolved boundary oscillation") {
    // omega = 150 at M = 300 sits past the R = 1 resolution threshold
    const ApproxRun r1 = approximate_catalog("exp_iomega", 150.0, 300, default_config(), 1);
    const ApproxRun r2 = approximate_catalog("exp_iomega", 150.0, 300, default_config(), 2);
    CHECK(r2.max_error < r1.max_error);
}

TEST_CASE("assemble validates lengths") {
    const RefinedConfig rc = make_refined(default_config(), 2);
    CHECK_THROWS_AS(assemble_refined(std::vector<cdouble>(10), std::vector<cdouble>(576), rc, 50),
                    std::invalid_argument);
    CHECK_THROWS_AS(assemble_refined(std::vector<cdouble>(101), std::vector<cdouble>(99), rc, 50),
                    std::invalid_argument);
}
