#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torsupp/torus.hpp"

namespace torsupp {

// ---------------------------------------------------------------------------
// Combinatorial shadow of a log resolution: divisors with multiplicity
// vectors and Euler characteristics of their open parts, grouped by the
// stratum their image point lies in.
// ---------------------------------------------------------------------------

struct DivisorRecord {
    std::string label;
    IntVector orders; // a_j: order of vanishing of each f_i, entries >= 0, not all zero
    Int euler;        // chi of the open part of the divisor

    friend bool operator==(const DivisorRecord&, const DivisorRecord&) = default;
};

struct Stratum {
    std::string name;
    std::vector<DivisorRecord> divisors;

    friend bool operator==(const Stratum&, const Stratum&) = default;
};

struct ResolutionData {
    std::size_t dimension = 0;         // number of functions r
    std::vector<bool> noninvertible;   // length r
    std::vector<Stratum> strata;

    friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

inline void validate_resolution(const ResolutionData& data) {
    if (data.dimension == 0)
        throw input_error("resolution data needs at least one function");
    if (data.noninvertible.size() != data.dimension)
        throw input_error("noninvertible flag list has wrong length");
    if (data.strata.empty())
        throw input_error("resolution data needs at least one stratum");
    std::set<std::string> names;
    for (const Stratum& stratum : data.strata) {
        if (!names.insert(stratum.name).second)
            throw input_error("duplicate stratum name: " + stratum.name);
        std::set<std::string> labels;
        for (const DivisorRecord& divisor : stratum.divisors) {
            if (!labels.insert(divisor.label).second)
                throw input_error("duplicate divisor label in stratum " + stratum.name +
                                  ": " + divisor.label);
            validate_factor_exponents(divisor.orders, data.dimension);
        }
    }
}

// Z^mon at the stratum: product of (t^{a_j} - 1)^{-chi_j}, canonical.
inline FactoredTorusFunction local_zeta(const Stratum& stratum, std::size_t dimension) {
    std::vector<MonomialFactor> raw;
    raw.reserve(stratum.divisors.size());
    for (const DivisorRecord& divisor : stratum.divisors)
        raw.push_back(MonomialFactor{divisor.orders, -divisor.euler});
    return canonicalize(dimension, raw);
}

// Union over strata of the polar + zero locus of the local zeta function.
inline SupportSet support_from_resolution(const ResolutionData& data) {
    validate_resolution(data);
    std::vector<TranslatedSubtorus> components;
    for (const Stratum& stratum : data.strata) {
        const SupportSet local = pz(local_zeta(stratum, data.dimension));
        components.insert(components.end(), local.components.begin(), local.components.end());
    }
    return make_support(data.dimension, std::move(components));
}

// ---------------------------------------------------------------------------
// Specialization: replace (f_1,...,f_r) by the p monomial products given by
// the rows of M.
// ---------------------------------------------------------------------------

// Non-degenerate: the induced torus map is surjective (rank M = p) and every
// non-invertible f_i keeps positive total exponent (column sum nonzero).
inline bool check_nondegenerate(const SpecializationMatrix& m,
                                const std::vector<bool>& noninvertible) {
    if (noninvertible.size() != m.target_dimension())
        throw input_error("noninvertible flag list does not match matrix width");
    if (rank(RatMatrix::from_int_rows(m.rows)) != m.source_dimension())
        return false;
    for (std::size_t i = 0; i < noninvertible.size(); ++i) {
        if (!noninvertible[i])
            continue;
        Int column_sum = 0;
        for (const IntVector& row : m.rows)
            column_sum += row[i];
        if (column_sum == 0)
            return false;
    }
    return true;
}

// Order of f_k^M along E_j is (M a_j)_k; chi values are untouched.
inline ResolutionData specialize_resolution(const ResolutionData& data,
                                            const SpecializationMatrix& m) {
    validate_resolution(data);
    if (m.target_dimension() != data.dimension)
        throw input_error("specialization matrix width does not match resolution data");
    if (!check_nondegenerate(m, data.noninvertible))
        throw input_error("degenerate specialization matrix");
    ResolutionData result;
    result.dimension = m.source_dimension();
    result.noninvertible.resize(result.dimension);
    for (std::size_t k = 0; k < m.rows.size(); ++k) {
        bool flag = false;
        for (std::size_t i = 0; i < data.dimension; ++i)
            if (m.rows[k][i] > 0 && data.noninvertible[i])
                flag = true;
        result.noninvertible[k] = flag;
    }
    for (const Stratum& stratum : data.strata) {
        Stratum image{stratum.name, {}};
        image.divisors.reserve(stratum.divisors.size());
        for (const DivisorRecord& divisor : stratum.divisors) {
            IntVector orders = matrix_apply(m, divisor.orders);
            if (is_zero(orders))
                throw internal_error("specialization annihilates a divisor multiplicity");
            image.divisors.push_back(DivisorRecord{divisor.label, std::move(orders),
                                                   divisor.euler});
        }
        result.strata.push_back(std::move(image));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Witness: a divisor certifying membership of a torsion point in the support.
// ---------------------------------------------------------------------------

struct ResolutionWitness {
    std::string stratum;
    DivisorRecord divisor;

    friend bool operator==(const ResolutionWitness&, const ResolutionWitness&) = default;
};

// First (strata scanned in name order, divisors in listed order) divisor
// whose binomial vanishes at Exp(alpha) and survives cancellation in the
// canonical local zeta function.
inline std::optional<ResolutionWitness> witness(const ResolutionData& data,
                                                const TorsionPoint& point) {
    validate_resolution(data);
    if (point.angles.size() != data.dimension)
        throw input_error("torsion point has wrong dimension");
    std::vector<const Stratum*> ordered;
    ordered.reserve(data.strata.size());
    for (const Stratum& stratum : data.strata)
        ordered.push_back(&stratum);
    std::sort(ordered.begin(), ordered.end(),
              [](const Stratum* a, const Stratum* b) { return a->name < b->name; });
    for (const Stratum* stratum : ordered) {
        const FactoredTorusFunction zeta = local_zeta(*stratum, data.dimension);
        for (const DivisorRecord& divisor : stratum->divisors) {
            if (!is_integer(dot(divisor.orders, point.angles)))
                continue;
            const auto survives = std::find_if(
                zeta.factors.begin(), zeta.factors.end(),
                [&](const MonomialFactor& f) { return f.exponents == divisor.orders; });
            if (survives != zeta.factors.end())
                return ResolutionWitness{stratum->name, divisor};
        }
    }
    return std::nullopt;
}

} // namespace torsupp
