#include <cmath>

#include "doctest.h"
#include "weylcert/centroaffine.hpp"
#include "weylcert/fixtures.hpp"

using namespace weylcert;

namespace {

std::vector<std::vector<double>> chart_grid(const Box& box, int n = 9) {
    return grid_points(box, {n, n}, 0.05);
}

double jet_max_diff(const Jet& a, const Jet& b) {
    Jet d = a;
    d -= b;
    return d.max_abs();
}

// max over grid and components of |b_{kl,j} - b_{jl,k}|
double codazzi_residual(const SurfaceConnection& conn, const CovTensor2& b,
                        const std::vector<std::vector<double>>& grid) {
    double worst = 0.0;
    for (const auto& y : grid) {
        const JetTensor G = christoffel_jets(conn, y.data(), 1);
        const JetTensor bj = tensor_jets(b, y.data(), 1);
        const JetTensor Db = covariant_derivative(bj, G);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    worst = std::max(worst,
                                     std::abs(Db(j, k, l).value() - Db(k, j, l).value()));
    }
    return worst;
}

}  // namespace

TEST_CASE("plane embedding has zero connection and second fundamental form") {
    const Fixture& fx = get_fixture("plane");
    const auto grid = chart_grid(fx.emb.chart);
    CHECK(transversality_margin(fx.emb, grid) == doctest::Approx(1.0).epsilon(1e-14));

    CentroaffineOutput ca = centroaffine_connection(fx.emb);
    for (const auto& y : grid) {
        CHECK(christoffel_jets(ca.conn, y.data(), 1).max_abs_value() < 1e-13);
        CHECK(tensor_jets(ca.b, y.data(), 1).max_abs_value() < 1e-13);
    }
    CHECK(centroaffine_reconstruction_residual(fx.emb, ca, grid) < 1e-13);
}

TEST_CASE("sphere frame solve reproduces the polar-chart closed forms") {
    const Fixture& fx = get_fixture("sphere");
    CentroaffineOutput ca = centroaffine_connection(fx.emb);
    const auto grid = chart_grid(fx.emb.chart);

    for (const auto& y : grid) {
        const double sy = std::sin(y[0]), cy = std::cos(y[0]);
        // b = -<r_j, r_k> = -diag(1, sin^2 y1)
        CHECK(ca.b.comp[0][0](y, 0).value() == doctest::Approx(-1.0).epsilon(1e-11));
        CHECK(std::abs(ca.b.comp[0][1](y, 0).value()) < 1e-11);
        CHECK(ca.b.comp[1][1](y, 0).value() == doctest::Approx(-sy * sy).epsilon(1e-11));
        // nonzero Christoffels: G^2_12 = cot y1, G^1_22 = -sin y1 cos y1
        CHECK(ca.conn.gamma[1][0][1](y, 0).value() == doctest::Approx(cy / sy).epsilon(1e-11));
        CHECK(ca.conn.gamma[0][1][1](y, 0).value() ==
              doctest::Approx(-sy * cy).epsilon(1e-11));
        CHECK(std::abs(ca.conn.gamma[0][0][0](y, 0).value()) < 1e-11);
        CHECK(std::abs(ca.conn.gamma[1][1][1](y, 0).value()) < 1e-11);
        CHECK(std::abs(ca.conn.gamma[0][0][1](y, 0).value()) < 1e-11);
        CHECK(std::abs(ca.conn.gamma[1][0][0](y, 0).value()) < 1e-11);
    }
    CHECK(centroaffine_reconstruction_residual(fx.emb, ca, grid) < 1e-10);

    // Ricci of the solved connection equals -b entrywise
    for (const auto& y : grid) {
        const auto rho = ricci2(ca.conn, y);
        const JetTensor bv = tensor_jets(ca.b, y.data(), 0);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(rho[j * 2 + k] == doctest::Approx(-bv(j, k).value()).epsilon(1e-9));
        CHECK(std::abs(rho[1] - rho[2]) < 1e-10);
    }
}

TEST_CASE("graph surfaces over the punctured plane have constant components") {
    // group chart z = exp(y1 + i y2): G^1_11 = a+1, G^2_12 = 1, G^1_22 = 1/(a-1),
    // b = diag(-a, -a/(a-1)), everything else zero
    struct Want {
        const char* name;
        double a;
    };
    for (const Want w : {Want{"zpow-neg2", -2.0}, Want{"zpow-half", 0.5}}) {
        CAPTURE(w.name);
        const Fixture& fx = get_fixture(w.name);
        CentroaffineOutput ca = centroaffine_connection(fx.emb);
        const auto grid = chart_grid(fx.emb.chart, 5);
        for (const auto& y : grid) {
            CHECK(ca.conn.gamma[0][0][0](y, 0).value() ==
                  doctest::Approx(w.a + 1.0).epsilon(1e-11));
            CHECK(ca.conn.gamma[1][0][1](y, 0).value() == doctest::Approx(1.0).epsilon(1e-11));
            CHECK(ca.conn.gamma[0][1][1](y, 0).value() ==
                  doctest::Approx(1.0 / (w.a - 1.0)).epsilon(1e-11));
            CHECK(std::abs(ca.conn.gamma[1][0][0](y, 0).value()) < 1e-11);
            CHECK(std::abs(ca.conn.gamma[1][1][1](y, 0).value()) < 1e-11);
            CHECK(std::abs(ca.conn.gamma[0][0][1](y, 0).value()) < 1e-11);
            CHECK(ca.b.comp[0][0](y, 0).value() == doctest::Approx(-w.a).epsilon(1e-11));
            CHECK(ca.b.comp[1][1](y, 0).value() ==
                  doctest::Approx(-w.a / (w.a - 1.0)).epsilon(1e-11));
            CHECK(std::abs(ca.b.comp[0][1](y, 0).value()) < 1e-11);
        }
        CHECK(centroaffine_reconstruction_residual(fx.emb, ca, grid) < 1e-10);
    }
}

TEST_CASE("all registered embeddings are transverse and satisfy the frame equation") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const Fixture& fx = get_fixture(name);
        const auto grid = chart_grid(fx.emb.chart);
        CHECK(transversality_margin(fx.emb, grid) > 0.1);
        CentroaffineOutput ca = centroaffine_connection(fx.emb);
        CHECK(centroaffine_reconstruction_residual(fx.emb, ca, grid) < 1e-10);
        // Ricci symmetric, equals -b; Codazzi holds for b
        for (const auto& y : grid_points(fx.emb.chart, {3, 3}, 0.1)) {
            const auto rho = ricci2(ca.conn, y);
            CHECK(std::abs(rho[1] - rho[2]) < 1e-10);
            const JetTensor bv = tensor_jets(ca.b, y.data(), 0);
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(std::abs(rho[j * 2 + k] + bv(j, k).value()) < 1e-9);
        }
        CHECK(codazzi_residual(ca.conn, ca.b, grid_points(fx.emb.chart, {3, 3}, 0.1)) < 1e-9);
    }
}

TEST_CASE("central projection inverts cleanly on the sphere") {
    FlatChart chart = fixture_flat_chart("sphere");
    const auto ugrid = chart_grid(chart.domain);

    for (const auto& u : ugrid) {
        const auto yj = chart.inverse(u.data(), 3);
        // round trip through the forward map
        const double yv[2] = {yj[0].value(), yj[1].value()};
        const auto back = chart.project(yv);
        CHECK(std::abs(back[0] - u[0]) < 1e-12);
        CHECK(std::abs(back[1] - u[1]) < 1e-12);
        // closed-form inverse y1 = atan|u|, y2 = atan2(u2, u1)
        CHECK(yv[0] == doctest::Approx(std::atan(std::hypot(u[0], u[1]))).epsilon(1e-12));
        CHECK(yv[1] == doctest::Approx(std::atan2(u[1], u[0])).epsilon(1e-12));
    }

    // composing the forward components back through the inverse gives the
    // coordinate jets
    const ScalarField u1_on_y = chart.source.r[0] / chart.source.r[2];
    const ScalarField round1 = pull_to_flat(chart, u1_on_y);
    const ScalarField u2_on_y = chart.source.r[1] / chart.source.r[2];
    const ScalarField round2 = pull_to_flat(chart, u2_on_y);
    for (const auto& u : grid_points(chart.domain, {4, 4}, 0.1)) {
        CHECK(jet_max_diff(round1(u, 4), Jet::coordinate(2, 4, 0, u[0])) < 1e-11);
        CHECK(jet_max_diff(round2(u, 4), Jet::coordinate(2, 4, 1, u[1])) < 1e-11);
    }
}

TEST_CASE("sphere flat-chart data matches the closed forms") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    const auto ugrid = chart_grid(s.domain);

    // f(u) = (1 + |u|^2)^{-1/2}
    ScalarField fcl(2, 5, [](const double* u, int k) {
        Jet q = Jet::coordinate(2, k, 0, u[0]) * Jet::coordinate(2, k, 0, u[0]);
        q += Jet::coordinate(2, k, 1, u[1]) * Jet::coordinate(2, k, 1, u[1]);
        return recip(sqrt(q + 1.0));
    });
    for (const auto& u : ugrid) CHECK(jet_max_diff(s.f(u, 4), fcl(u, 4)) < 1e-10);

    // the reparametrized embedding satisfies the frame equation with the
    // graph-form connection
    Embedding3 emb_u;
    emb_u.r = s.r;
    emb_u.chart = s.domain;
    emb_u.base_y = s.basepoint;
    CHECK(centroaffine_reconstruction_residual(emb_u, {s.conn, s.b}, ugrid) < 1e-9);

    // area element a = f^3 equals the frame determinant
    for (const auto& u : ugrid) {
        CHECK(s.alpha.a(u, 0).value() ==
              doctest::Approx(radial_frame_det(emb_u, u.data(), 0).value()).epsilon(1e-10));
    }
    CHECK(area_form_parallel_residual(s.conn, s.alpha, ugrid) < 1e-9);
}

TEST_CASE("flat-chart surfaces satisfy the Hessian equation exactly") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const FlatSurface& s = fixture_flat_surface(name);
        const auto grid = grid_points(s.domain, {5, 5}, 0.05);
        CHECK(hessian_equation_residual(s.f, s.conn, grid) < 1e-9);
        // Ricci of the graph-form connection equals the stored field
        for (const auto& u : grid_points(s.domain, {3, 3}, 0.1)) {
            const auto rho = ricci2(s.conn, u);
            const JetTensor rv = tensor_jets(s.rho, u.data(), 0);
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(std::abs(rho[j * 2 + k] - rv(j, k).value()) < 1e-9);
        }
    }
}

TEST_CASE("conformal factor recovery matches the direct construction") {
    for (const char* name : {"sphere", "two-sheeted-hyperboloid", "zpow-neg2"}) {
        CAPTURE(name);
        const FlatSurface& s = fixture_flat_surface(name);
        const auto grid = grid_points(s.domain, {5, 5}, 0.05);
        const double base_value = s.f(s.basepoint, 0).value();
        RecoveredF rec = recover_f(s.conn, s.basepoint, base_value, grid);
        CHECK(rec.off_trace_residual < 1e-9);
        CHECK(rec.dxi_residual < 1e-9);
        for (const auto& u : grid)
            CHECK(rec.f(u, 0).value() == doctest::Approx(s.f(u, 0).value()).epsilon(1e-7));
        CHECK(hessian_equation_residual(rec.f, s.conn, grid) < 1e-7);
    }

    // plane: zero connection recovers f = 1
    const FlatSurface& p = fixture_flat_surface("plane");
    const auto pgrid = grid_points(p.domain, {5, 5}, 0.05);
    RecoveredF rec = recover_f(p.conn, p.basepoint, 1.0, pgrid);
    for (const auto& u : pgrid)
        CHECK(rec.f(u, 1).value() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("flat-chart classification matches the registry expectations") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const Fixture& fx = get_fixture(name);
        const FlatSurface& s = fixture_flat_surface(name);
        const auto grid = grid_points(s.domain, {5, 5}, 0.05);
        ClassifyResult cls = classify_connection(s.conn, grid, 1e-8);
        CHECK(cls.verdict == fx.expected_class);
        if (cls.verdict == ConnClass::kParallelRicci) {
            CHECK(cls.sig_pos == fx.expected_rho_signature[0]);
            CHECK(cls.sig_neg == fx.expected_rho_signature[1]);
            CHECK(cls.sig_zero == fx.expected_rho_signature[2]);
        }
        FlatnessResult pf = is_projectively_flat(s.conn, grid, 1e-8);
        CHECK(pf.projectively_flat);
    }
}

TEST_CASE("flat-chart evaluation is deterministic") {
    const FlatSurface& s = fixture_flat_surface("ellipsoid");
    const std::vector<double> u{1.07, 0.11};
    const Jet a = s.f(u, 4);
    const Jet b = s.f(u, 4);
    for (int i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

    // a freshly built chart reproduces the same bits
    const Fixture& fx = get_fixture("ellipsoid");
    FlatChart chart = make_flat_chart(fx.emb, fx.flat_domain, fx.flat_base, fx.inverse_guess);
    FlatSurface fresh = flatten(chart);
    const Jet c = fresh.f(u, 4);
    for (int i = 0; i < a.size(); ++i) CHECK(a[i] == c[i]);
}
