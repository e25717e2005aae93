#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "torsupp/arrangement.hpp"
#include "torsupp/torus.hpp"
#include "torsupp/zeta.hpp"

namespace torsupp {

// ---------------------------------------------------------------------------
// Dense-edge support: one component {prod_{i in W} t_i = 1} per dense edge.
// ---------------------------------------------------------------------------

inline SupportSet arrangement_support(const Arrangement& arrangement) {
    const std::size_t r = arrangement.size();
    std::vector<TranslatedSubtorus> components;
    for (const Edge& edge : dense_edges(arrangement)) {
        IntVector indicator(r, Int(0));
        for (std::size_t i : edge.indices)
            indicator[i] = 1;
        components.push_back(TranslatedSubtorus{r, std::move(indicator), Rational(0)});
    }
    return make_support(r, std::move(components));
}

// ---------------------------------------------------------------------------
// Cross-validation of the dense-edge and resolution routes for n = 2.
// ---------------------------------------------------------------------------

struct ConsistencyResult {
    bool consistent = false;
    SupportSet only_dense_route;      // components missing from the resolution route
    SupportSet only_resolution_route; // components missing from the dense route
};

inline ConsistencyResult support_consistency_check(const Arrangement& arrangement) {
    if (arrangement.ambient != 2)
        throw input_error("consistency check requires a line arrangement in C^2");
    const SupportSet dense_route = arrangement_support(arrangement);
    const SupportSet resolution_route =
        support_from_resolution(line_arrangement_resolution(arrangement));
    ConsistencyResult result;
    result.consistent = dense_route == resolution_route;
    result.only_dense_route.dimension = arrangement.size();
    result.only_resolution_route.dimension = arrangement.size();
    std::set_difference(dense_route.components.begin(), dense_route.components.end(),
                        resolution_route.components.begin(),
                        resolution_route.components.end(),
                        std::back_inserter(result.only_dense_route.components));
    std::set_difference(resolution_route.components.begin(),
                        resolution_route.components.end(),
                        dense_route.components.begin(), dense_route.components.end(),
                        std::back_inserter(result.only_resolution_route.components));
    return result;
}

// ---------------------------------------------------------------------------
// Simplicity reports for torsion rank-one local systems.
// ---------------------------------------------------------------------------

struct SimplicityVerdicts {
    bool rj_star_simple = false;
    bool j_shriek_simple = false;
    bool dmodule_jstar_simple = false;
    bool dmodule_jshriek_simple = false;
    bool ic_equality = false; // j_! (L[n]) = Rj_* (L[n]) = IC extension

    friend bool operator==(const SimplicityVerdicts&, const SimplicityVerdicts&) = default;
};

struct SimplicityReport {
    TorsionPoint alpha;
    bool in_support = false;
    std::vector<std::vector<std::size_t>> edge_witnesses; // dense-edge index sets, 0-based
    std::vector<ResolutionWitness> divisor_witnesses;
    SimplicityVerdicts verdicts;
    std::vector<std::string> notes;
};

namespace detail {

inline SimplicityVerdicts verdicts_from_membership(bool in_support) {
    SimplicityVerdicts verdicts;
    verdicts.rj_star_simple = !in_support;
    verdicts.j_shriek_simple = !in_support;
    verdicts.dmodule_jstar_simple = !in_support;
    verdicts.dmodule_jshriek_simple = !in_support;
    verdicts.ic_equality = !in_support;
    return verdicts;
}

inline std::vector<std::string> report_notes() {
    return {
        "Rj_*(L[n]) is semi-simple iff it is simple iff L lies outside the support; "
        "the same holds for j_!(L[n]).",
        "In the simple case j_!(L[n]) = Rj_*(L[n]) = IC_X(L[n]), the intermediate "
        "extension.",
        "The D-module verdicts restate the topological ones through the "
        "Riemann-Hilbert correspondence for regular holonomic modules.",
    };
}

} // namespace detail

// Dense-edge route: a witness is a dense edge whose monodromy product is 1.
inline SimplicityReport simplicity_report(const Arrangement& arrangement,
                                          const TorsionPoint& alpha) {
    if (alpha.angles.size() != arrangement.size())
        throw input_error("torsion point has wrong dimension");
    SimplicityReport report;
    report.alpha = alpha;
    for (const Edge& edge : dense_edges(arrangement)) {
        Rational angle_sum = 0;
        for (std::size_t i : edge.indices)
            angle_sum += alpha.angles[i];
        if (is_integer(angle_sum))
            report.edge_witnesses.push_back(edge.indices);
    }
    report.in_support = !report.edge_witnesses.empty();
    report.verdicts = detail::verdicts_from_membership(report.in_support);
    report.notes = detail::report_notes();
    return report;
}

// Resolution route: a witness is a divisor whose zeta factor vanishes at
// Exp(alpha) and survives cancellation.
inline SimplicityReport simplicity_report(const ResolutionData& data,
                                          const TorsionPoint& alpha) {
    if (alpha.angles.size() != data.dimension)
        throw input_error("torsion point has wrong dimension");
    SimplicityReport report;
    report.alpha = alpha;
    if (auto certificate = witness(data, alpha))
        report.divisor_witnesses.push_back(std::move(*certificate));
    report.in_support = !report.divisor_witnesses.empty();
    report.verdicts = detail::verdicts_from_membership(report.in_support);
    report.notes = detail::report_notes();
    return report;
}

// Supports of local systems are stable under inverting the local system.
inline bool dual_stability_check(const SupportSet& support) {
    return invert_set(support) == support;
}

} // namespace torsupp
