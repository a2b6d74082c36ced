#pragma once

#include <string>

#include "weylcert/classify.hpp"
#include "weylcert/flat_chart.hpp"

namespace weylcert {

// A registered surface: original chart, flat-chart working rectangle, a seed
// for the inverse projection, and the expected classification data.
struct Fixture {
    std::string name;
    std::string summary;
    Embedding3 emb;
    Box flat_domain;
    std::vector<double> flat_base;
    std::function<std::array<double, 2>(const double*)> inverse_guess;
    ConnClass expected_class = ConnClass::kGeneric;
    std::array<int, 3> expected_rho_signature{0, 0, 0};  // (pos, neg, zero)
    char quadric_case = '-';                             // 'a'..'d' where applicable
};

const std::vector<std::string>& fixture_names();
const Fixture& get_fixture(const std::string& name);  // throws on unknown name

// Built once per name and shared, so field caches accumulate across callers.
FlatChart fixture_flat_chart(const std::string& name);
const FlatSurface& fixture_flat_surface(const std::string& name);

}  // namespace weylcert
