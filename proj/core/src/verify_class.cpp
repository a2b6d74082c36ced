#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "weylcert/metric_factory.hpp"
#include "weylcert/verify.hpp"

namespace weylcert {

namespace {

double tolv(const VerifyOptions& o, const char* name, double def) {
    const auto it = o.tol.find(name);
    return it == o.tol.end() ? def : it->second;
}

std::string note2(const char* a, double va, const char* b, double vb) {
    char buf[120];
    std::snprintf(buf, sizeof(buf), "%s = %.3e, %s = %.3e", a, va, b, vb);
    return buf;
}

// pointwise maxima the battery accumulates over the sample grid
struct Accum {
    double sym = 0, bianchi = 0, trace = 0;
    double wmax = 0, dwmax = 0, drmax = 0;
    double smax = 0, codazzi = 0, decomp = 0, proj = 0;
    double gap = 0, sv1min = 1e300, rk1res = 0, omega_dev = 0;
    int rank_bad = 0, eps_bad = 0, omrank_bad = 0;
    double vertical = 0, nullr = 0, rzo = 0, rvv = 0, parallel = 0;
    double rho_scale = 0, drho_scale = 0, minor_raw = 0;
    double conf_ricci = 0;
    int points = 0, plane_points = 0;
};

}  // namespace

MetricProvenance provenance_from(const FlatSurface& s, int epsilon) {
    MetricProvenance p;
    p.conn = s.conn;
    p.rho = s.rho;
    p.alpha = s.alpha;
    p.f = s.f;
    p.ydom = s.domain;
    p.basepoint = s.basepoint;
    p.epsilon = epsilon;
    return p;
}

VerificationReport verify_class(const MetricChart& g, const MetricProvenance& prov,
                                const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = g.n;
    if (n < 4) throw std::invalid_argument("verify_class: dimension below four");
    if (!prov.f.valid() || !prov.alpha.a.valid())
        throw std::invalid_argument("verify_class: incomplete provenance");
    if (prov.epsilon != 1 && prov.epsilon != -1)
        throw std::invalid_argument("verify_class: epsilon must be +-1");

    std::vector<int> counts(n, opt.fiber_samples);
    counts[0] = counts[1] = opt.y_samples;
    const auto pts = grid_points(g.box, counts, opt.margin);
    long fiber_total = 1;
    for (int a = 2; a < n; ++a) fiber_total *= opt.fiber_samples;

    // surface side, measured once
    const Box ybox{{g.box.lo[0], g.box.lo[1]}, {g.box.hi[0], g.box.hi[1]}};
    const auto ygrid = grid_points(ybox, {opt.y_samples, opt.y_samples}, opt.margin);
    const ClassifyResult cls = classify_connection(prov.conn, ygrid, 1e-8);

    struct YData {
        double rho[2][2];
        double area;
    };
    std::vector<YData> ycache(ygrid.size());
    for (std::size_t i = 0; i < ygrid.size(); ++i) {
        const JetTensor rj = tensor_jets(prov.rho, ygrid[i].data(), 0);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) ycache[i].rho[j][k] = rj(j, k).value();
        ycache[i].area = prov.alpha.a(ygrid[i], 0).value();
    }

    MetricChart companion;
    if (opt.conformal_companion) companion = conformal_rescale(g, prov.f);

    Accum ac;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::vector<double>& x = pts[i];
        const CurvaturePoint cp = curvature_at(g, x);
        ++ac.points;

        ac.sym = std::max(ac.sym, cp.symmetry_residual());
        ac.bianchi = std::max(ac.bianchi, cp.bianchi_residual());
        ac.trace = std::max(ac.trace, cp.weyl_trace_residual());
        ac.wmax = std::max(ac.wmax, cp.max_weyl());
        ac.dwmax = std::max(ac.dwmax, cp.max_dweyl());
        ac.drmax = std::max(ac.drmax, cp.max_driem());
        ac.smax = std::max(ac.smax, std::abs(cp.scal));

        for (int e = 0; e < n; ++e)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    ac.codazzi = std::max(ac.codazzi,
                                          std::abs(cp.drho(e, j, k) - cp.drho(j, e, k)));

        const double cw = 1.0 / (n - 2.0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int mm = 0; mm < n; ++mm) {
                        const double wedge = cp.g(j, l) * cp.ricci(k, mm) -
                                             cp.g(j, mm) * cp.ricci(k, l) -
                                             cp.g(k, l) * cp.ricci(j, mm) +
                                             cp.g(k, mm) * cp.ricci(j, l);
                        ac.decomp = std::max(
                            ac.decomp, std::abs(cp.r(j, k, l, mm) - cp.w(j, k, l, mm) -
                                                cw * wedge));
                    }

        const YData& yd = ycache[i / fiber_total];
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const double want = (j < 2 && k < 2) ? (n - 2.0) * yd.rho[j][k] : 0.0;
                ac.proj = std::max(ac.proj, std::abs(cp.ricci(j, k) - want));
            }

        // Ricci recurrence data on the metric side
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ac.rho_scale = std::max(ac.rho_scale, std::abs(cp.ricci(j, k)));
                for (int e = 0; e < n; ++e)
                    ac.drho_scale = std::max(ac.drho_scale, std::abs(cp.drho(e, j, k)));
            }
        for (int e = 0; e < n; ++e)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l)
                        for (int mm = 0; mm < n; ++mm)
                            ac.minor_raw =
                                std::max(ac.minor_raw,
                                         std::abs(cp.ricci(j, k) * cp.drho(e, l, mm) -
                                                  cp.ricci(l, mm) * cp.drho(e, j, k)));

        const WeylRank wr = weyl_rank(cp);
        if (wr.rank != 1) {
            ++ac.rank_bad;
        } else {
            ac.gap = std::max(ac.gap, wr.svs(1) / wr.svs(0));
            ac.sv1min = std::min(ac.sv1min, wr.svs(0));
            if (wr.epsilon != prov.epsilon) ++ac.eps_bad;
            if (wr.omega_rank != 2) ++ac.omrank_bad;
            ac.rk1res = std::max(ac.rk1res, wr.residual);

            const double a = yd.area;
            double dev = std::abs(wr.omega(0, 1) - a);
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q)
                    if (!(p == 0 && q == 1)) dev = std::max(dev, std::abs(wr.omega(p, q)));
            ac.omega_dev = std::max(ac.omega_dev, dev / std::max(1.0, std::abs(a)));

            if (static_cast<int>(i) % opt.plane_stride == 0) {
                ++ac.plane_points;
                const DistributionP dp = distribution_P(cp, wr.omega);
                for (int col = 0; col < 2; ++col)
                    for (int row = 0; row < n; ++row)
                        if (row != 2 && row != 3)
                            ac.vertical = std::max(ac.vertical, std::abs(dp.basis(row, col)));
                ac.nullr = std::max(ac.nullr, dp.null_residual);
                ac.rzo = std::max(ac.rzo, dp.rzo_residual);
                ac.rvv = std::max(ac.rvv, dp.rvv_residual);
                ac.parallel = std::max(ac.parallel, dp.parallel_residual);
            }
        }

        if (opt.conformal_companion && static_cast<int>(i) % opt.plane_stride == 0) {
            const CurvaturePoint cc = curvature_at(companion, x);
            ac.conf_ricci = std::max(ac.conf_ricci, cc.ricci.cwiseAbs().maxCoeff());
        }
    }

    VerificationReport rep;
    const SignatureCheck sc = check_signature(g, pts);
    rep.add("metric_signature", sc.matches ? 0.0 : 1.0, 0.5,
            note2("eigenvalue margin", sc.margin, "points", double(ac.points)));

    rep.add("curvature_symmetries", ac.sym, tolv(opt, "curvature_symmetries", 1e-9));
    rep.add("first_bianchi", ac.bianchi, tolv(opt, "first_bianchi", 1e-9));
    rep.add("weyl_trace_free", ac.trace, tolv(opt, "weyl_trace_free", 1e-9));

    rep.add("weyl_parallel", ac.dwmax / std::max(ac.wmax, 1e-300),
            tolv(opt, "weyl_parallel", 1e-7), note2("max dW", ac.dwmax, "max W", ac.wmax));

    {
        double r = ac.gap;
        std::string note;
        if (ac.rank_bad > 0) {
            r = 1.0;
            note = note2("points with rank != 1", ac.rank_bad, "of", double(ac.points));
        }
        rep.add("weyl_rank_one", r, tolv(opt, "weyl_rank_one", 1e-8), note);
    }
    {
        const double floor = tolv(opt, "weyl_nonzero", 1e-4);
        const double sv1 = ac.sv1min == 1e300 ? 0.0 : ac.sv1min;
        rep.add("weyl_nonzero", std::max(0.0, floor - sv1), 0.0,
                note2("min sv1", sv1, "required floor", floor));
    }
    rep.add("epsilon_sign", ac.points ? double(ac.eps_bad) / ac.points : 1.0, 0.0,
            note2("mismatched points", ac.eps_bad, "epsilon", prov.epsilon));
    rep.add("rank_one_residual", ac.rk1res / std::max(1.0, ac.wmax),
            tolv(opt, "rank_one_residual", 1e-7));
    rep.add("omega_matrix_rank", ac.points ? double(ac.omrank_bad) / ac.points : 1.0, 0.0);
    rep.add("omega_area_form", ac.omega_dev, tolv(opt, "omega_area_form", 1e-5));

    rep.add("scalar_curvature", ac.smax, tolv(opt, "scalar_curvature", 1e-8));
    rep.add("ricci_codazzi", ac.codazzi, tolv(opt, "ricci_codazzi", 1e-7));
    rep.add("curvature_decomposition", ac.decomp, tolv(opt, "curvature_decomposition", 1e-7));
    rep.add("ricci_projection", ac.proj, tolv(opt, "ricci_projection", 1e-7));

    rep.add("vertical_plane", ac.vertical, tolv(opt, "vertical_plane", 1e-6),
            note2("plane checks at", ac.plane_points, "points of", double(ac.points)));
    rep.add("plane_null", ac.nullr, tolv(opt, "plane_null", 1e-8));
    rep.add("plane_curvature_contractions", ac.rzo,
            tolv(opt, "plane_curvature_contractions", 1e-8));
    rep.add("perp_curvature_contractions", ac.rvv,
            tolv(opt, "perp_curvature_contractions", 1e-8));
    rep.add("plane_parallel", ac.parallel, tolv(opt, "plane_parallel", 1e-8));

    if (opt.conformal_companion)
        rep.add("conformal_ricci_flat", ac.conf_ricci, tolv(opt, "conformal_ricci_flat", 1e-7));

    // local symmetry: measure both sides, compare only when the surface side
    // is decisively flat or decisively nonflat
    {
        const double scale_d = std::max(1.0, cls.max_rho);
        const std::string note = note2("metric max dR", ac.drmax, "surface max Drho",
                                       cls.max_drho);
        if (cls.max_drho <= 1e-8 * scale_d) {
            rep.add("local_symmetry_equivalence", ac.drmax,
                    tolv(opt, "local_symmetry_equivalence", 1e-7), note);
        } else if (cls.max_drho >= 1e-5 * scale_d) {
            rep.add("local_symmetry_equivalence", std::max(0.0, 1e-2 - ac.drmax), 0.0,
                    note + " (surface not locally symmetric)");
        } else {
            rep.add_indeterminate("local_symmetry_equivalence", cls.max_drho, note);
        }
    }

    // Ricci recurrence: normalized dependence minors on both sides
    {
        const double minor_d = cls.max_minor / std::max(1.0, cls.max_rho * cls.max_drho);
        const double minor_g = ac.minor_raw / std::max(1.0, ac.rho_scale * ac.drho_scale);
        const auto verdict = [](double v) { return v <= 1e-8 ? 1 : (v >= 1e-5 ? -1 : 0); };
        const int vd = verdict(minor_d), vg = verdict(minor_g);
        const std::string note = note2("surface minors", minor_d, "metric minors", minor_g);
        if (vd == 0 || vg == 0)
            rep.add_indeterminate("ricci_recurrence_equivalence", std::max(minor_d, minor_g),
                                  note);
        else
            rep.add("ricci_recurrence_equivalence", vd == vg ? 0.0 : 1.0, 0.5, note);
    }

    rep.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace weylcert
