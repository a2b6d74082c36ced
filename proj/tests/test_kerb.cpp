#include <cmath>
#include <sstream>

#include "doctest.h"
#include "weylcert/fixtures.hpp"
#include "weylcert/kerb.hpp"

using namespace weylcert;

namespace {

CovTensor2 zero_tensor() {
    CovTensor2 t;
    t.sym = Sym2::kSymmetric;
    for (auto& row : t.comp)
        for (auto& c : row) c = ScalarField::constant(2, 0.0);
    return t;
}

std::array<double, 3> as_vec(const KerBElement& e) { return {e.theta, e.xi[0], e.xi[1]}; }

std::vector<std::array<double, 3>> embedding_values(const FlatSurface& s,
                                                    const std::vector<std::vector<double>>& grid) {
    std::vector<std::array<double, 3>> out;
    for (const auto& u : grid)
        out.push_back({s.r[0](u, 0).value(), s.r[1](u, 0).value(), s.r[2](u, 0).value()});
    return out;
}

}  // namespace

TEST_CASE("symmetrized covariant derivative on the flat chart") {
    SurfaceConnection flat = SurfaceConnection::flat();
    const std::vector<double> y{0.3, -0.7};

    OneForm2 lin;  // xi = y1 dy1
    lin.comp[0] = ScalarField::coordinate(2, 0);
    lin.comp[1] = ScalarField::constant(2, 0.0);
    CovTensor2 t = b_apply(flat, lin);
    CHECK(t.comp[0][0](y, 0).value() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(t.comp[0][1](y, 0).value()) < 1e-14);
    CHECK(std::abs(t.comp[1][1](y, 0).value()) < 1e-14);

    OneForm2 con;  // constant components
    con.comp[0] = ScalarField::constant(2, 1.4);
    con.comp[1] = ScalarField::constant(2, -0.2);
    t = b_apply(flat, con);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(std::abs(t.comp[j][k](y, 0).value()) < 1e-14);

    OneForm2 rot;  // xi1 = -y2, xi2 = y1
    rot.comp[0] = -1.0 * ScalarField::coordinate(2, 1);
    rot.comp[1] = ScalarField::coordinate(2, 0);
    t = b_apply(flat, rot);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(std::abs(t.comp[j][k](y, 0).value()) < 1e-14);
}

TEST_CASE("symmetrized covariant derivative agrees with the tensor route") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    OneForm2 xi;
    xi.comp[0] = ScalarField::coordinate(2, 1) * 0.7 + 0.3;
    xi.comp[1] = ScalarField::coordinate(2, 0) * ScalarField::coordinate(2, 0) - 0.1;
    CovTensor2 t = b_apply(s.conn, xi);

    for (const auto& u : grid_points(s.domain, {3, 3}, 0.1)) {
        const JetTensor G = christoffel_jets(s.conn, u.data(), 1);
        const JetTensor X = oneform_jets(xi, u.data(), 1);
        const JetTensor DX = covariant_derivative(X, G);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(t.comp[j][k](u, 0).value() ==
                      doctest::Approx(DX(j, k).value() + DX(k, j).value()).epsilon(1e-11));
    }
}

TEST_CASE("flat transport matches the hand-solved linear system") {
    SurfaceConnection flat = SurfaceConnection::flat();
    CovTensor2 rho = zero_tensor();

    // theta constant; dxi_k = Theta_{jk} dy^j integrates to
    // xi1 = xi1_0 - theta (y2 - p2), xi2 = xi2_0 + theta (y1 - p1)
    TransportState s0;
    s0.theta = 0.8;
    s0.xi = {-0.3, 0.45};
    s0.position = {0.1, -0.2};
    const std::vector<std::array<double, 2>> path{{0.1, -0.2}, {0.6, 0.3}, {-0.25, 0.5}};
    TransportState s1 = transport(flat, rho, path, s0);

    const double dy1 = -0.25 - 0.1, dy2 = 0.5 - (-0.2);
    CHECK(s1.theta == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(s1.xi[0] == doctest::Approx(-0.3 - 0.8 * dy2).epsilon(1e-10));
    CHECK(s1.xi[1] == doctest::Approx(0.45 + 0.8 * dy1).epsilon(1e-10));

    // zero state stays zero
    TransportState z;
    z.position = {0.1, -0.2};
    TransportState z1 = transport(flat, rho, path, z);
    CHECK(z1.theta == 0.0);
    CHECK(z1.xi[0] == 0.0);
    CHECK(z1.xi[1] == 0.0);

    // starting point must match
    TransportState bad;
    bad.position = {0.0, 0.0};
    CHECK_THROWS(transport(flat, rho, path, bad));
}

TEST_CASE("transport is linear and path independent on the sphere") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    const std::array<double, 2> p{0.7, -0.2}, q{1.2, 0.2};

    TransportState a, b;
    a.theta = 1.0;
    a.xi = {0.2, -0.5};
    a.position = p;
    b.theta = -0.4;
    b.xi = {0.9, 0.33};
    b.position = p;

    const std::vector<std::array<double, 2>> straight{p, q};
    TransportState ra = transport(s.conn, s.rho, straight, a);
    TransportState rb = transport(s.conn, s.rho, straight, b);

    TransportState comb;
    comb.theta = 2.0 * a.theta - 0.7 * b.theta;
    comb.xi = {2.0 * a.xi[0] - 0.7 * b.xi[0], 2.0 * a.xi[1] - 0.7 * b.xi[1]};
    comb.position = p;
    TransportState rc = transport(s.conn, s.rho, straight, comb);
    CHECK(rc.theta == doctest::Approx(2.0 * ra.theta - 0.7 * rb.theta).epsilon(1e-10));
    CHECK(rc.xi[0] == doctest::Approx(2.0 * ra.xi[0] - 0.7 * rb.xi[0]).epsilon(1e-10));
    CHECK(rc.xi[1] == doctest::Approx(2.0 * ra.xi[1] - 0.7 * rb.xi[1]).epsilon(1e-10));

    // L-shaped route through the corner is homotopic to the straight one
    const std::vector<std::array<double, 2>> bent{p, {p[0], q[1]}, q};
    TransportState rbent = transport(s.conn, s.rho, bent, a);
    CHECK(rbent.theta == doctest::Approx(ra.theta).epsilon(1e-8));
    CHECK(rbent.xi[0] == doctest::Approx(ra.xi[0]).epsilon(1e-8));
    CHECK(rbent.xi[1] == doctest::Approx(ra.xi[1]).epsilon(1e-8));

    CHECK(transport_loop_defect(s.conn, s.rho, Box{{0.7, -0.2}, {1.2, 0.2}}) < 1e-9);
}

TEST_CASE("immersion on the plane fixture has the affine closed form") {
    const FlatSurface& p = fixture_flat_surface("plane");
    // f = 1: zero connection, zero Ricci, area element 1; base (0,0)
    const auto grid = grid_points(p.domain, {4, 4}, 0.05);
    for (const auto& u : grid) {
        KerBElement F = immersion_F(p.conn, p.rho, p.alpha, p.basepoint, u);
        CHECK(F.theta == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(F.xi[0] == doctest::Approx(u[1]).epsilon(1e-9));
        CHECK(F.xi[1] == doctest::Approx(-u[0]).epsilon(1e-9));
    }

    // basepoint maps to (a(base), 0, 0)
    KerBElement Fb = immersion_F(p.conn, p.rho, p.alpha, p.basepoint, p.basepoint);
    CHECK(Fb.theta == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(Fb.xi[0]) < 1e-12);
    CHECK(std::abs(Fb.xi[1]) < 1e-12);

    // differential of F along a parallel field is constant (flat case)
    const double h = 1e-3;
    std::array<double, 3> d1, d2;
    for (int axis = 0; axis < 2; ++axis) {
        auto dF = [&](std::vector<double> y) {
            std::vector<double> yp = y, ym = y;
            yp[axis] += h;
            ym[axis] -= h;
            const auto Fp = as_vec(immersion_F(p.conn, p.rho, p.alpha, p.basepoint, yp));
            const auto Fm = as_vec(immersion_F(p.conn, p.rho, p.alpha, p.basepoint, ym));
            return std::array<double, 3>{(Fp[0] - Fm[0]) / (2 * h), (Fp[1] - Fm[1]) / (2 * h),
                                         (Fp[2] - Fm[2]) / (2 * h)};
        };
        d1 = dF({0.1, -0.2});
        d2 = dF({-0.3, 0.25});
        for (int i = 0; i < 3; ++i) CHECK(d1[i] == doctest::Approx(d2[i]).epsilon(1e-8));
    }
}

TEST_CASE("differential of the immersion transports the contracted area form") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    const std::vector<double> y{0.95, 0.05};
    const double h = 1e-3;

    for (int axis = 0; axis < 2; ++axis) {
        std::vector<double> yp = y, ym = y;
        yp[axis] += h;
        ym[axis] -= h;
        const auto Fp = as_vec(immersion_F(s.conn, s.rho, s.alpha, s.basepoint, yp));
        const auto Fm = as_vec(immersion_F(s.conn, s.rho, s.alpha, s.basepoint, ym));

        // eta with eta_y = -alpha_y(e_axis, .), (D eta)_y = 0
        const double a = s.alpha.a(y, 0).value();
        TransportState eta;
        eta.theta = 0.0;
        eta.xi = (axis == 0) ? std::array<double, 2>{0.0, -a} : std::array<double, 2>{a, 0.0};
        eta.position = {y[0], y[1]};
        const std::vector<std::array<double, 2>> path{{y[0], y[1]},
                                                      {s.basepoint[0], s.basepoint[1]}};
        TransportState at_base = transport(s.conn, s.rho, path, eta);

        CHECK((Fp[0] - Fm[0]) / (2 * h) == doctest::Approx(at_base.theta).epsilon(2e-5));
        CHECK((Fp[1] - Fm[1]) / (2 * h) == doctest::Approx(at_base.xi[0]).epsilon(2e-5));
        CHECK((Fp[2] - Fm[2]) / (2 * h) == doctest::Approx(at_base.xi[1]).epsilon(2e-5));
    }
}

TEST_CASE("solution space is three-dimensional on certified fixtures") {
    for (const char* name : {"plane", "sphere", "hyperbolic-cylinder"}) {
        CAPTURE(name);
        const FlatSurface& s = fixture_flat_surface(name);
        const auto grid = grid_points(s.domain, {3, 3}, 0.1);
        CHECK(kerb_dimension(s.conn, s.rho, grid, 1e-8) == 3);
    }
}

TEST_CASE("immersion reproduces the embedding up to one linear map") {
    for (const char* name : {"plane", "sphere"}) {
        CAPTURE(name);
        const FlatSurface& s = fixture_flat_surface(name);
        const auto grid = grid_points(s.domain, {5, 5}, 0.05);
        const auto fs = immersion_samples(s.conn, s.rho, s.alpha, s.basepoint, grid);
        const auto rs = embedding_values(s, grid);
        EmbeddingMatch m = embedding_match(fs, rs);
        CHECK(m.residual < 1e-7);
        CHECK(std::abs(m.map.determinant()) > 1e-3);
    }

    // negative control: samples from different surfaces do not match
    const FlatSurface& sph = fixture_flat_surface("sphere");
    const FlatSurface& hyp = fixture_flat_surface("two-sheeted-hyperboloid");
    const auto gs = grid_points(sph.domain, {5, 5}, 0.05);
    const auto gh = grid_points(hyp.domain, {5, 5}, 0.05);
    const auto fs = immersion_samples(sph.conn, sph.rho, sph.alpha, sph.basepoint, gs);
    const auto rs = embedding_values(hyp, gh);
    EmbeddingMatch m = embedding_match(fs, rs);
    CHECK(m.residual > 1e-2);
}

TEST_CASE("fitted quadric signatures match the classification table") {
    struct Want {
        const char* name;
        int pos, neg, zero;
    };
    const Want table[] = {
        {"plane", 1, 0, 2},
        {"sphere", 3, 0, 0},
        {"ellipsoid", 3, 0, 0},
        {"one-sheeted-hyperboloid", 2, 1, 0},
        {"two-sheeted-hyperboloid", 1, 2, 0},
        {"elliptic-cylinder", 2, 0, 1},
        {"hyperbolic-cylinder", 1, 1, 1},
    };
    for (const Want& w : table) {
        CAPTURE(w.name);
        const FlatSurface& s = fixture_flat_surface(w.name);
        const auto grid = grid_points(s.domain, {5, 5}, 0.05);
        const auto fs = immersion_samples(s.conn, s.rho, s.alpha, s.basepoint, grid);
        QuadricFit fit = quadric_fit(fs);
        CHECK(fit.residual < 1e-6);
        CHECK(fit.sig_pos == w.pos);
        CHECK(fit.sig_neg == w.neg);
        CHECK(fit.sig_zero == w.zero);
    }
}

TEST_CASE("immersion sample dump is a parseable csv") {
    const FlatSurface& p = fixture_flat_surface("plane");
    const auto grid = grid_points(p.domain, {2, 2}, 0.1);
    const auto fs = immersion_samples(p.conn, p.rho, p.alpha, p.basepoint, grid);
    std::ostringstream os;
    write_immersion_csv(os, fs);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "y1,y2,F1,F2,F3");
    int rows = 0;
    while (std::getline(is, line)) {
        double v[5];
        CHECK(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3],
                          &v[4]) == 5);
        ++rows;
    }
    CHECK(rows == static_cast<int>(fs.size()));
}
