#include <cmath>

#include "doctest.h"
#include "weylcert/fixtures.hpp"
#include "weylcert/metric_factory.hpp"
#include "weylcert/tau.hpp"
#include "weylcert/verify.hpp"

using namespace weylcert;

namespace {

VerificationReport run_battery(const std::string& fixture, int n, int eps,
                               const InnerProductV& gv, VerifyOptions opt = {}) {
    const FlatSurface& s = fixture_flat_surface(fixture);
    const TauField tau = solve_tau(s.conn, s.f, s.alpha, eps, s.domain, s.basepoint);
    const MetricChart g = build_g(s.conn, s.rho, tau, gv, n, s.domain);
    return verify_class(g, provenance_from(s, eps), opt);
}

const char* kBatteryChecks[] = {
    "metric_signature",         "curvature_symmetries",
    "first_bianchi",            "weyl_trace_free",
    "weyl_parallel",            "weyl_rank_one",
    "weyl_nonzero",             "epsilon_sign",
    "rank_one_residual",        "omega_matrix_rank",
    "omega_area_form",          "scalar_curvature",
    "ricci_codazzi",            "curvature_decomposition",
    "ricci_projection",         "vertical_plane",
    "plane_null",               "plane_curvature_contractions",
    "perp_curvature_contractions", "plane_parallel",
    "conformal_ricci_flat",     "local_symmetry_equivalence",
    "ricci_recurrence_equivalence",
};

}  // namespace

TEST_CASE("battery passes on the sphere fixture and reports every check once") {
    VerifyOptions opt;
    opt.y_samples = 3;
    const VerificationReport rep = run_battery("sphere", 4, 1, InnerProductV(), opt);

    for (const char* name : kBatteryChecks) {
        const CheckResult* c = rep.find(name);
        REQUIRE_MESSAGE(c != nullptr, name);
        CHECK_MESSAGE(c->status == CheckStatus::kPass, name, ": ", c->residual);
    }
    CHECK(rep.checks.size() == sizeof(kBatteryChecks) / sizeof(kBatteryChecks[0]));
    CHECK(rep.pass());
    CHECK_FALSE(rep.indeterminate());
    CHECK(rep.exit_code() == 0);
    CHECK(rep.runtime_seconds > 0.0);

    // locally symmetric case: both sides flat
    CHECK(rep.find("local_symmetry_equivalence")->residual <= 1e-7);
    CHECK(rep.find("ricci_recurrence_equivalence")->residual == 0.0);
}

TEST_CASE("battery passes with the opposite sign and a flat extra direction") {
    VerifyOptions opt;
    opt.y_samples = 3;
    opt.fiber_samples = 2;
    opt.plane_stride = 5;
    const VerificationReport rep =
        run_battery("ellipsoid", 5, -1, InnerProductV::diag({1.0}), opt);
    CHECK(rep.pass());
    CHECK(rep.find("epsilon_sign")->residual == 0.0);
}

TEST_CASE("battery on a generic connection reports the broken symmetry honestly") {
    VerifyOptions opt;
    opt.y_samples = 3;
    const VerificationReport rep = run_battery("zpow-neg2", 4, 1, InnerProductV(), opt);

    // still a rank-one parallel-Weyl metric
    CHECK(rep.find("weyl_parallel")->status == CheckStatus::kPass);
    CHECK(rep.find("weyl_rank_one")->status == CheckStatus::kPass);
    CHECK(rep.find("scalar_curvature")->status == CheckStatus::kPass);

    // but decisively not locally symmetric, on both the surface and the metric
    const CheckResult* ls = rep.find("local_symmetry_equivalence");
    REQUIRE(ls != nullptr);
    CHECK(ls->status == CheckStatus::kPass);
    CHECK(ls->note.find("not locally symmetric") != std::string::npos);

    const CheckResult* rr = rep.find("ricci_recurrence_equivalence");
    CHECK(rr->status == CheckStatus::kPass);
    CHECK(rr->residual == 0.0);

    CHECK(rep.pass());
}

TEST_CASE("tolerance overrides flip a passing check to a failure") {
    VerifyOptions opt;
    opt.y_samples = 2;
    opt.fiber_samples = 2;
    opt.tol["curvature_decomposition"] = 0.0;
    const VerificationReport rep = run_battery("sphere", 4, 1, InnerProductV(), opt);
    CHECK_FALSE(rep.pass());
    CHECK(rep.exit_code() == 1);
    CHECK(rep.find("curvature_decomposition")->status == CheckStatus::kFail);
}

TEST_CASE("report bookkeeping: duplicates, exit codes, rendering") {
    VerificationReport r;
    r.add("alpha", 1e-10, 1e-8);
    CHECK_THROWS_AS(r.add("alpha", 0.0, 1.0), std::logic_error);
    CHECK(r.exit_code() == 0);

    r.add_indeterminate("beta", 3e-7, "band");
    CHECK(r.indeterminate());
    CHECK(r.exit_code() == 2);

    r.add("gamma", 2.0, 1.0);
    CHECK_FALSE(r.pass());
    CHECK_FALSE(r.indeterminate());
    CHECK(r.exit_code() == 1);

    const std::string text = report_text(r);
    CHECK(text.find("alpha") != std::string::npos);
    CHECK(text.find("INDETERMINATE") != std::string::npos);
    CHECK(text.find("overall") != std::string::npos);

    const std::string js = report_json(r, false);
    CHECK(js.find("\"schema\"") != std::string::npos);
    CHECK(js.find("weylcert-report-v1") != std::string::npos);
    CHECK(js.find("\"exit_code\": 1") != std::string::npos);
    CHECK(js.find("timestamp") == std::string::npos);
    CHECK(report_json(r, true).find("timestamp_unix_ms") != std::string::npos);
}

TEST_CASE("identical runs render byte-identical reports") {
    VerifyOptions opt;
    opt.y_samples = 2;
    opt.fiber_samples = 2;
    VerificationReport a = run_battery("sphere", 4, 1, InnerProductV(), opt);
    VerificationReport b = run_battery("sphere", 4, 1, InnerProductV(), opt);
    a.runtime_seconds = b.runtime_seconds = 0.0;  // wall time is not content
    CHECK(report_json(a, false) == report_json(b, false));
}

TEST_CASE("battery validates its inputs") {
    const FlatSurface& s = fixture_flat_surface("sphere");
    const TauField tau = solve_tau(s.conn, s.f, s.alpha, 1, s.domain, s.basepoint);
    const MetricChart g = build_g(s.conn, s.rho, tau, InnerProductV(), 4, s.domain);

    MetricProvenance p = provenance_from(s, 1);
    p.epsilon = 3;
    CHECK_THROWS_AS(verify_class(g, p), std::invalid_argument);

    MetricProvenance q = provenance_from(s, 1);
    q.f = ScalarField();
    CHECK_THROWS_AS(verify_class(g, q), std::invalid_argument);
}
