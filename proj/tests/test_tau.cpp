#include <cmath>

#include "doctest.h"
#include "weylcert/centroaffine.hpp"
#include "weylcert/classify.hpp"
#include "weylcert/fixtures.hpp"
#include "weylcert/kerb.hpp"
#include "weylcert/tau.hpp"

using namespace weylcert;

namespace {

ScalarField zero() { return ScalarField::constant(2, 0.0); }

CovTensor2 zero_rho() {
    CovTensor2 t;
    t.sym = Sym2::kSymmetric;
    for (auto& row : t.comp)
        for (auto& c : row) c = zero();
    return t;
}

CovTensor2 sym_tensor(const ScalarField& t11, const ScalarField& t12, const ScalarField& t22) {
    CovTensor2 t;
    t.sym = Sym2::kSymmetric;
    t.comp[0][0] = t11;
    t.comp[0][1] = t12;
    t.comp[1][0] = t12;
    t.comp[1][1] = t22;
    return t;
}

// fixed low-degree polynomial data for the identity checks
CovTensor2 poly_tensor() {
    const ScalarField u1 = ScalarField::coordinate(2, 0), u2 = ScalarField::coordinate(2, 1);
    return sym_tensor(u1 * u2 * 0.3 + u2 * u2 * u1 * 0.2 + 0.4, u1 * u1 * 0.5 - u2 * 0.7,
                      u1 * 0.2 - u1 * u1 * u2 * 0.6 + 1.1);
}

OneForm2 poly_oneform() {
    const ScalarField u1 = ScalarField::coordinate(2, 0), u2 = ScalarField::coordinate(2, 1);
    OneForm2 xi;
    xi.comp[0] = u1 * u2 * 0.5 - u2 * 0.8 + 0.3;
    xi.comp[1] = u1 * u1 * 0.4 + u2 * 0.9 - 0.6;
    return xi;
}

}  // namespace

TEST_CASE("second-order operator on monomials over the flat chart") {
    SurfaceConnection flat = SurfaceConnection::flat();
    CovTensor2 rho = zero_rho();
    const ScalarField u1 = ScalarField::coordinate(2, 0), u2 = ScalarField::coordinate(2, 1);
    const std::vector<double> y{0.37, -0.21};

    CHECK(L_apply(flat, rho, sym_tensor(u2 * u2, zero(), zero()), y).a1212 ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(L_apply(flat, rho, sym_tensor(zero(), zero(), u1 * u1), y).a1212 ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(L_apply(flat, rho, sym_tensor(zero(), u1 * u2, zero()), y).a1212 ==
          doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("operator only sees the symmetric part") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    const ScalarField u1 = ScalarField::coordinate(2, 0), u2 = ScalarField::coordinate(2, 1);

    CovTensor2 gen;
    gen.sym = Sym2::kGeneral;
    gen.comp[0][0] = u2 * u2 * 0.3 + 0.1;
    gen.comp[0][1] = u1 * 0.7 - u2 * u2 * 0.4;
    gen.comp[1][0] = u1 * u1 * 0.9 + u2 * 0.2;
    gen.comp[1][1] = u1 * u2 * 0.8 - 0.5;
    const ScalarField off = (gen.comp[0][1] + gen.comp[1][0]) * 0.5;
    CovTensor2 symm = sym_tensor(gen.comp[0][0], off, gen.comp[1][1]);

    for (const auto& u : grid_points(s.domain, {3, 3}, 0.1))
        CHECK(L_apply(s.conn, s.rho, gen, u).a1212 ==
              doctest::Approx(L_apply(s.conn, s.rho, symm, u).a1212).epsilon(1e-11));
}

TEST_CASE("shift by a symmetrized derivative is invisible") {
    OneForm2 xi = poly_oneform();
    for (const char* name : {"sphere", "zpow-neg2"}) {
        CAPTURE(name);
        const FlatSurface& s = fixture_flat_surface(name);
        const TauField tau = solve_tau(s.conn, s.f, s.alpha, +1, s.domain, s.basepoint);
        const TauField shifted = gauge_shift(s.conn, tau, xi);
        const CovTensor2 bxi = b_apply(s.conn, xi);
        for (const auto& u : grid_points(s.domain, {3, 3}, 0.1)) {
            CHECK(std::abs(L_apply(s.conn, s.rho, bxi, u).a1212) < 1e-8);
            CHECK(L_apply(s.conn, s.rho, shifted, u).a1212 ==
                  doctest::Approx(L_apply(s.conn, s.rho, tau, u).a1212).epsilon(1e-8));
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    CHECK(shifted.comp[j][k](u, 0).value() ==
                          doctest::Approx(tau.comp[j][k](u, 0).value() + bxi.comp[j][k](u, 0).value())
                              .epsilon(1e-12));
        }

        // zero shift is the identity
        OneForm2 nil;
        nil.comp[0] = zero();
        nil.comp[1] = zero();
        const TauField same = gauge_shift(s.conn, tau, nil);
        const std::vector<double> mid{0.5 * (s.domain.lo[0] + s.domain.hi[0]),
                                      0.5 * (s.domain.lo[1] + s.domain.hi[1])};
        CHECK(same.comp[1][1](mid, 0).value() ==
              doctest::Approx(tau.comp[1][1](mid, 0).value()).epsilon(1e-14));
    }
}

TEST_CASE("scalar reduction on monomials over the flat chart") {
    SurfaceConnection flat = SurfaceConnection::flat();
    CovTensor2 rho = zero_rho();
    const ScalarField u1 = ScalarField::coordinate(2, 0), u2 = ScalarField::coordinate(2, 1);
    const std::vector<double> y{0.42, 0.13};

    CHECK(std::abs(F_apply(flat, rho, sym_tensor(ScalarField::constant(2, 3.0),
                                                 ScalarField::constant(2, -1.0),
                                                 ScalarField::constant(2, 0.5)),
                           y)) < 1e-13);
    CHECK(F_apply(flat, rho, sym_tensor(u1 * u1, zero(), zero()), y) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(F_apply(flat, rho, sym_tensor(zero(), zero(), u2 * u2), y) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK(F_apply(flat, rho, sym_tensor(zero(), u1 * u2, zero()), y) ==
          doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("two-form operator and scalar reduction correspond through the area element") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    const CovTensor2 T = poly_tensor();  // contravariant components

    // tau_jk = alpha_jl alpha_km T^lm: tau_11 = a^2 T^22, tau_12 = -a^2 T^12, tau_22 = a^2 T^11
    const ScalarField a2 = s.alpha.a * s.alpha.a;
    const CovTensor2 tau =
        sym_tensor(a2 * T.comp[1][1], a2 * T.comp[0][1] * -1.0, a2 * T.comp[0][0]);

    for (const auto& u : grid_points(s.domain, {3, 3}, 0.1)) {
        const double av = s.alpha.a(u, 0).value();
        CHECK(L_apply(s.conn, s.rho, tau, u).a1212 ==
              doctest::Approx(F_apply(s.conn, s.rho, T, u) * av * av).epsilon(1e-8));
    }
}

TEST_CASE("flat-chart solve integrates the constant case exactly") {
    SurfaceConnection flat = SurfaceConnection::flat();
    const ScalarField one = ScalarField::constant(2, 1.0);
    AreaForm alpha;
    alpha.a = one;
    alpha.basepoint = {0.0, 0.0};
    alpha.base_value = 1.0;
    const Box dom{{-0.5, -0.5}, {0.5, 0.5}};

    TauField tau = solve_tau(flat, one, alpha, +1, dom, {0.0, 0.0});
    for (const auto& u : grid_points(dom, {4, 4}, 0.0)) {
        const Jet t22 = tau.comp[1][1](u, 3);
        CHECK(t22.value() == doctest::Approx(0.5 * u[0] * u[0]).epsilon(1e-11));
        CHECK(t22.deriv({0}) == doctest::Approx(u[0]).epsilon(1e-11));
        CHECK(t22.deriv({0, 0}) == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(std::abs(t22.deriv({1})) < 1e-11);
        CHECK(std::abs(t22.deriv({0, 1})) < 1e-11);
        CHECK(std::abs(t22.deriv({1, 1})) < 1e-11);
        CHECK(std::abs(tau.comp[0][0](u, 0).value()) < 1e-14);
        CHECK(std::abs(tau.comp[0][1](u, 0).value()) < 1e-14);
    }

    // epsilon enters linearly
    TauField neg = solve_tau(flat, one, alpha, -1, dom, {0.0, 0.0});
    const std::vector<double> probe{0.3, -0.2};
    CHECK(neg.comp[1][1](probe, 0).value() ==
          doctest::Approx(-tau.comp[1][1](probe, 0).value()).epsilon(1e-14));
}

TEST_CASE("flat-chart solve satisfies the defining equation on fixtures") {
    for (const char* name : {"sphere", "two-sheeted-hyperboloid", "zpow-neg2"}) {
        CAPTURE(name);
        const FlatSurface& s = fixture_flat_surface(name);
        for (int eps : {+1, -1}) {
            CAPTURE(eps);
            const TauField tau = solve_tau(s.conn, s.f, s.alpha, eps, s.domain, s.basepoint);
            double worst = 0.0;
            for (const auto& u : grid_points(s.domain, {9, 9}, 0.05)) {
                const double av = s.alpha.a(u, 0).value();
                worst = std::max(worst, std::abs(L_apply(s.conn, s.rho, tau, u).a1212 -
                                                 eps * av * av));
            }
            CHECK(worst < 1e-6);
        }
    }
}

TEST_CASE("flat-chart solve rejects inconsistent inputs") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    CHECK_THROWS(solve_tau(s.conn, s.f, s.alpha, 0, s.domain, s.basepoint));

    AreaForm bad;  // not parallel: component f^2 instead of const f^3
    bad.a = s.f * s.f;
    bad.basepoint = s.basepoint;
    bad.base_value = 1.0;
    CHECK_THROWS(solve_tau(s.conn, s.f, bad, +1, s.domain, s.basepoint));
}

TEST_CASE("conformal transformation rules for both operators") {
    const FlatSurface& s = fixture_flat_surface("sphere");

    // D~ = D + 2 xi (.) Id with xi = -d log f is the flat chart connection
    OneForm2 xi;
    xi.comp[0] = derivative(s.f, 0) / s.f * -1.0;
    xi.comp[1] = derivative(s.f, 1) / s.f * -1.0;
    SurfaceConnection tilde = projective_modify(s.conn, xi);
    const CovTensor2 rho_tilde = ricci_field(tilde);

    const CovTensor2 tau = poly_tensor();
    const CovTensor2 T = poly_tensor();
    const ScalarField f2 = s.f * s.f;
    const ScalarField f4 = f2 * f2;

    CovTensor2 tau_scaled = tau;  // f^-2 tau
    CovTensor2 T_scaled = T;      // f^4 T
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            tau_scaled.comp[j][k] = tau.comp[j][k] / f2;
            T_scaled.comp[j][k] = f4 * T.comp[j][k];
        }

    for (const auto& u : grid_points(s.domain, {3, 3}, 0.1)) {
        CHECK(std::abs(rho_tilde.comp[0][0](u, 0).value()) < 1e-9);
        CHECK(std::abs(rho_tilde.comp[1][1](u, 0).value()) < 1e-9);
        const double f2v = f2(u, 0).value();
        const double f4v = f4(u, 0).value();
        CHECK(L_apply(tilde, rho_tilde, tau_scaled, u).a1212 ==
              doctest::Approx(L_apply(s.conn, s.rho, tau, u).a1212 / f2v).epsilon(1e-8));
        CHECK(F_apply(tilde, rho_tilde, T_scaled, u) ==
              doctest::Approx(f4v * F_apply(s.conn, s.rho, T, u)).epsilon(1e-8));
    }
}

TEST_CASE("translation-invariant source on the power surface") {
    // group chart of the a = -2 surface: constant connection components,
    // rho = diag(-2, 2/3); T constant with <rho, T> = 1 has distributional
    // terms vanish, so the reduction is identically one
    const Fixture& fx = get_fixture("zpow-neg2");
    const CentroaffineOutput out = centroaffine_connection(fx.emb);
    const CovTensor2 rho = ricci_field(out.conn);

    CovTensor2 T = sym_tensor(zero(), zero(), ScalarField::constant(2, 1.5));

    for (const auto& y : grid_points(fx.emb.chart, {3, 3}, 0.1)) {
        double pair = 0.0;
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                pair += rho.comp[j][k](y, 0).value() * T.comp[j][k](y, 0).value();
        CHECK(pair == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(F_apply(out.conn, rho, T, y) == doctest::Approx(1.0).epsilon(1e-9));
    }
}
