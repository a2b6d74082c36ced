#include "weylcert/fixtures.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace weylcert {

namespace {

ScalarField coord(int axis) { return ScalarField::coordinate(2, axis); }

std::array<double, 2> polar_angles(double u1, double u2) {
    return {std::hypot(u1, u2), std::atan2(u2, u1)};
}

std::vector<Fixture> build_registry() {
    std::vector<Fixture> out;
    const ScalarField y1 = coord(0), y2 = coord(1);
    const ScalarField sin1 = apply(sin, y1), cos1 = apply(cos, y1);
    const ScalarField sin2 = apply(sin, y2), cos2 = apply(cos, y2);
    const ScalarField sinh1 = apply(sinh, y1), cosh1 = apply(cosh, y1);

    {
        Fixture fx;
        fx.name = "plane";
        fx.summary = "affine plane x3 = 1; flat connection, zero Ricci";
        fx.emb.r = {y1, y2, ScalarField::constant(2, 1.0)};
        fx.emb.chart = Box{{-0.6, -0.6}, {0.6, 0.6}};
        fx.emb.base_y = {0.0, 0.0};
        fx.flat_domain = Box{{-0.5, -0.5}, {0.5, 0.5}};
        fx.flat_base = {0.0, 0.0};
        fx.inverse_guess = [](const double* u) { return std::array<double, 2>{u[0], u[1]}; };
        fx.expected_class = ConnClass::kFlat;
        fx.expected_rho_signature = {0, 0, 2};
        fx.quadric_case = 'a';
        out.push_back(std::move(fx));
    }
    {
        Fixture fx;
        fx.name = "sphere";
        fx.summary = "unit sphere, polar chart; Ricci parallel positive definite";
        fx.emb.r = {sin1 * cos2, sin1 * sin2, cos1};
        fx.emb.chart = Box{{0.5, -0.4}, {1.0, 0.4}};
        fx.emb.base_y = {0.75, 0.0};
        fx.flat_domain = Box{{0.65, -0.25}, {1.25, 0.25}};
        fx.flat_base = {0.95, 0.0};
        fx.inverse_guess = [](const double* u) {
            const auto [rad, ang] = polar_angles(u[0], u[1]);
            return std::array<double, 2>{std::atan(rad), ang};
        };
        fx.expected_class = ConnClass::kParallelRicci;
        fx.expected_rho_signature = {2, 0, 0};
        fx.quadric_case = 'd';
        out.push_back(std::move(fx));
    }
    {
        Fixture fx;
        fx.name = "ellipsoid";
        fx.summary = "ellipsoid x.diag(1,2,3).x = 1; Ricci parallel positive definite";
        const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
        fx.emb.r = {sin1 * cos2, sin1 * sin2 * (1.0 / s2), cos1 * (1.0 / s3)};
        fx.emb.chart = Box{{0.38, -0.48}, {0.72, 0.48}};
        fx.emb.base_y = {0.55, 0.0};
        fx.flat_domain = Box{{0.8, -0.25}, {1.3, 0.25}};
        fx.flat_base = {1.05, 0.0};
        fx.inverse_guess = [s2, s3](const double* u) {
            const double t = std::sqrt(u[0] * u[0] + 2.0 * u[1] * u[1]) / s3;
            return std::array<double, 2>{std::atan(t), std::atan2(u[1] * s2, u[0])};
        };
        fx.expected_class = ConnClass::kParallelRicci;
        fx.expected_rho_signature = {2, 0, 0};
        fx.quadric_case = 'd';
        out.push_back(std::move(fx));
    }
    {
        Fixture fx;
        fx.name = "one-sheeted-hyperboloid";
        fx.summary = "x1^2 + x2^2 - x3^2 = 1, upper patch; Ricci parallel indefinite";
        fx.emb.r = {cosh1 * cos2, cosh1 * sin2, sinh1};
        fx.emb.chart = Box{{0.62, -0.22}, {1.0, 0.22}};
        fx.emb.base_y = {0.8, 0.0};
        fx.flat_domain = Box{{1.35, -0.25}, {1.7, 0.25}};
        fx.flat_base = {1.525, 0.0};
        fx.inverse_guess = [](const double* u) {
            const auto [rad, ang] = polar_angles(u[0], u[1]);
            return std::array<double, 2>{std::atanh(1.0 / rad), ang};
        };
        fx.expected_class = ConnClass::kParallelRicci;
        fx.expected_rho_signature = {1, 1, 0};
        fx.quadric_case = 'd';
        out.push_back(std::move(fx));
    }
    {
        Fixture fx;
        fx.name = "two-sheeted-hyperboloid";
        fx.summary = "x3^2 - x1^2 - x2^2 = 1, sheet x3 >= 1; Ricci parallel negative definite";
        fx.emb.r = {sinh1 * cos2, sinh1 * sin2, cosh1};
        fx.emb.chart = Box{{0.5, -0.42}, {1.02, 0.42}};
        fx.emb.base_y = {0.75, 0.0};
        fx.flat_domain = Box{{0.5, -0.2}, {0.72, 0.2}};
        fx.flat_base = {0.61, 0.0};
        fx.inverse_guess = [](const double* u) {
            const auto [rad, ang] = polar_angles(u[0], u[1]);
            return std::array<double, 2>{std::atanh(std::min(rad, 0.99)), ang};
        };
        fx.expected_class = ConnClass::kParallelRicci;
        fx.expected_rho_signature = {0, 2, 0};
        fx.quadric_case = 'd';
        out.push_back(std::move(fx));
    }
    {
        Fixture fx;
        fx.name = "elliptic-cylinder";
        fx.summary = "x1^2 + x2^2 = 1; Ricci parallel, rank 1 positive semidefinite";
        fx.emb.r = {apply(cos, y1), apply(sin, y1), y2};
        fx.emb.chart = Box{{-0.4, 0.83}, {0.4, 1.5}};
        fx.emb.base_y = {0.0, 1.1};
        fx.flat_domain = Box{{0.7, -0.25}, {1.1, 0.25}};
        fx.flat_base = {0.9, 0.0};
        fx.inverse_guess = [](const double* u) {
            const auto [rad, ang] = polar_angles(u[0], u[1]);
            return std::array<double, 2>{ang, 1.0 / rad};
        };
        fx.expected_class = ConnClass::kParallelRicci;
        fx.expected_rho_signature = {1, 0, 1};
        fx.quadric_case = 'b';
        out.push_back(std::move(fx));
    }
    {
        Fixture fx;
        fx.name = "hyperbolic-cylinder";
        fx.summary = "x1^2 - x2^2 = 1; Ricci parallel, rank 1 negative semidefinite";
        fx.emb.r = {cosh1, sinh1, y2};
        fx.emb.chart = Box{{-0.35, 0.8}, {0.35, 1.45}};
        fx.emb.base_y = {0.0, 1.1};
        fx.flat_domain = Box{{0.75, -0.2}, {1.2, 0.2}};
        fx.flat_base = {0.975, 0.0};
        fx.inverse_guess = [](const double* u) {
            const double y2v = 1.0 / std::sqrt(u[0] * u[0] - u[1] * u[1]);
            return std::array<double, 2>{std::atanh(u[1] / u[0]), y2v};
        };
        fx.expected_class = ConnClass::kParallelRicci;
        fx.expected_rho_signature = {0, 1, 1};
        fx.quadric_case = 'c';
        out.push_back(std::move(fx));
    }

    // |z|^a graphs over C minus 0, group chart z = exp(y1 + i y2).  The
    // connection has constant components here; Ricci is not recurrent.
    const auto zpow = [&](const char* name, double a, Box udom, std::vector<double> ubase) {
        Fixture fx;
        fx.name = name;
        fx.summary = "graph x3 = |z|^a over the punctured complex line";
        fx.emb.r = {apply(exp, y1) * cos2, apply(exp, y1) * sin2, apply(exp, y1 * a)};
        fx.flat_domain = std::move(udom);
        fx.flat_base = std::move(ubase);
        const double proj_pow = 1.0 - a;  // |u| = |z|^{1-a}
        fx.inverse_guess = [proj_pow](const double* u) {
            const auto [rad, ang] = polar_angles(u[0], u[1]);
            return std::array<double, 2>{std::log(rad) / proj_pow, ang};
        };
        fx.expected_class = ConnClass::kGeneric;
        fx.expected_rho_signature = {1, 1, 0};
        return fx;
    };
    {
        Fixture fx = zpow("zpow-neg2", -2.0, Box{{0.8, -0.2}, {1.3, 0.2}}, {1.05, 0.0});
        fx.emb.chart = Box{{-0.15, -0.3}, {0.15, 0.3}};
        fx.emb.base_y = {0.0, 0.0};
        out.push_back(std::move(fx));
    }
    {
        Fixture fx = zpow("zpow-half", 0.5, Box{{0.9, -0.15}, {1.1, 0.15}}, {1.0, 0.0});
        fx.emb.chart = Box{{-0.3, -0.25}, {0.3, 0.25}};
        fx.emb.base_y = {0.0, 0.0};
        out.push_back(std::move(fx));
    }
    return out;
}

const std::vector<Fixture>& registry() {
    static const std::vector<Fixture> reg = build_registry();
    return reg;
}

struct Bundle {
    FlatChart chart;
    FlatSurface surface;
};

Bundle& bundle_for(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<Bundle>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[name];
    if (!slot) {
        const Fixture& fx = get_fixture(name);
        auto b = std::make_unique<Bundle>();
        b->chart = make_flat_chart(fx.emb, fx.flat_domain, fx.flat_base, fx.inverse_guess);
        b->surface = flatten(b->chart);
        slot = std::move(b);
    }
    return *slot;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& fx : registry()) n.push_back(fx.name);
        return n;
    }();
    return names;
}

const Fixture& get_fixture(const std::string& name) {
    for (const auto& fx : registry())
        if (fx.name == name) return fx;
    throw std::invalid_argument("unknown fixture: " + name);
}

FlatChart fixture_flat_chart(const std::string& name) { return bundle_for(name).chart; }

const FlatSurface& fixture_flat_surface(const std::string& name) { return bundle_for(name).surface; }

}  // namespace weylcert
