#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "torsupp/linalg.hpp"
#include "torsupp/rational.hpp"

namespace torsupp {

// ---------------------------------------------------------------------------
// Factored functions on the torus: products of (t^a - 1)^e.
// ---------------------------------------------------------------------------

struct MonomialFactor {
    IntVector exponents; // a, entries >= 0, not all zero
    Int power;           // e

    friend bool operator==(const MonomialFactor&, const MonomialFactor&) = default;
};

struct FactoredTorusFunction {
    std::size_t dimension = 0; // number of torus variables r
    std::vector<MonomialFactor> factors;

    bool is_one() const { return factors.empty(); }

    friend bool operator==(const FactoredTorusFunction&, const FactoredTorusFunction&) = default;
};

inline void validate_factor_exponents(const IntVector& a, std::size_t dimension) {
    if (a.size() != dimension)
        throw input_error("factor exponent vector has wrong length");
    bool all_zero = true;
    for (const Int& e : a) {
        if (e < 0)
            throw input_error("factor exponent vector has a negative entry");
        if (e != 0)
            all_zero = false;
    }
    if (all_zero)
        throw input_error("factor exponent vector is zero");
}

// Merge equal exponent vectors, drop zero powers, sort lexicographically.
inline FactoredTorusFunction canonicalize(std::size_t dimension,
                                          const std::vector<MonomialFactor>& raw) {
    std::map<IntVector, Int> merged;
    for (const MonomialFactor& factor : raw) {
        validate_factor_exponents(factor.exponents, dimension);
        merged[factor.exponents] += factor.power;
    }
    FactoredTorusFunction result;
    result.dimension = dimension;
    for (auto& [exponents, power] : merged)
        if (power != 0)
            result.factors.push_back(MonomialFactor{exponents, power});
    return result;
}

inline FactoredTorusFunction multiply(const FactoredTorusFunction& f,
                                      const FactoredTorusFunction& g) {
    if (f.dimension != g.dimension)
        throw input_error("cannot multiply torus functions of different dimensions");
    std::vector<MonomialFactor> combined = f.factors;
    combined.insert(combined.end(), g.factors.begin(), g.factors.end());
    return canonicalize(f.dimension, combined);
}

inline FactoredTorusFunction invert(const FactoredTorusFunction& f) {
    FactoredTorusFunction result = f;
    for (MonomialFactor& factor : result.factors)
        factor.power = -factor.power;
    return result;
}

// Substitute t_i = s^{m_i}: each (t^a - 1)^e becomes (s^{<m,a>} - 1)^e.
inline FactoredTorusFunction specialize(const FactoredTorusFunction& f, const IntVector& m) {
    if (m.size() != f.dimension)
        throw input_error("specialization vector has wrong length");
    for (const Int& entry : m)
        if (entry <= 0)
            throw input_error("specialization vector entries must be positive");
    std::vector<MonomialFactor> raw;
    raw.reserve(f.factors.size());
    for (const MonomialFactor& factor : f.factors)
        raw.push_back(MonomialFactor{IntVector{dot(m, factor.exponents)}, factor.power});
    return canonicalize(1, raw);
}

// ---------------------------------------------------------------------------
// Torsion-translated codimension-one subtori and canonical unions.
// ---------------------------------------------------------------------------

// The set {t in (C*)^r : t^a = e^{2 pi i q}}.
struct TranslatedSubtorus {
    std::size_t dimension = 0;
    IntVector exponents;  // primitive: gcd 1, first nonzero entry positive
    Rational translation; // q in [0,1)

    friend bool operator==(const TranslatedSubtorus&, const TranslatedSubtorus&) = default;

    friend bool operator<(const TranslatedSubtorus& lhs, const TranslatedSubtorus& rhs) {
        if (lhs.exponents != rhs.exponents)
            return lhs.exponents < rhs.exponents;
        return lhs.translation < rhs.translation;
    }
};

struct SupportSet {
    std::size_t dimension = 0;
    std::vector<TranslatedSubtorus> components; // sorted by (a, q), no duplicates

    bool empty() const { return components.empty(); }

    friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

// Checked constructor for already-canonical data (e.g. parsed JSON).
inline TranslatedSubtorus make_subtorus(std::size_t dimension, const IntVector& exponents,
                                        const Rational& translation) {
    if (exponents.size() != dimension)
        throw input_error("subtorus exponent vector has wrong length");
    const PrimitivePart prim = primitive_part(exponents); // rejects the zero vector
    if (prim.gcd != 1 || prim.flipped)
        throw input_error("subtorus exponent vector is not primitive");
    if (translation < 0 || translation >= 1)
        throw input_error("subtorus translation must lie in [0,1)");
    return TranslatedSubtorus{dimension, exponents, translation};
}

inline SupportSet make_support(std::size_t dimension,
                               std::vector<TranslatedSubtorus> components) {
    for (const TranslatedSubtorus& c : components)
        if (c.exponents.size() != dimension)
            throw internal_error("support component dimension mismatch");
    std::sort(components.begin(), components.end());
    components.erase(std::unique(components.begin(), components.end()), components.end());
    return SupportSet{dimension, std::move(components)};
}

// Canonical components of {t : t^b = e^{2 pi i q}} for arbitrary nonzero b.
// With b = sigma * d * b' (b' primitive, sigma the sign flip), the solutions
// in w = t^{b'} are the d-th roots of e^{2 pi i sigma q}.
inline std::vector<TranslatedSubtorus>
decompose_binomial(std::size_t dimension, const IntVector& b, const Rational& q) {
    if (b.size() != dimension)
        throw input_error("binomial exponent vector has wrong length");
    const PrimitivePart prim = primitive_part(b);
    const Rational base = mod1(prim.flipped ? Rational(-q) : q);
    std::vector<TranslatedSubtorus> components;
    for (Int k = 0; k < prim.gcd; ++k)
        components.push_back(TranslatedSubtorus{
            dimension, prim.vector, mod1((base + Rational(k)) / Rational(prim.gcd))});
    std::sort(components.begin(), components.end());
    return components;
}

// Components of the zero set of t^a - 1.
inline std::vector<TranslatedSubtorus> decompose_factor(std::size_t dimension,
                                                        const IntVector& a) {
    return decompose_binomial(dimension, a, Rational(0));
}

// Polar + zero locus of a canonical factored function.
inline SupportSet pz(const FactoredTorusFunction& f) {
    std::vector<TranslatedSubtorus> components;
    for (const MonomialFactor& factor : f.factors) {
        auto pieces = decompose_factor(f.dimension, factor.exponents);
        components.insert(components.end(), pieces.begin(), pieces.end());
    }
    return make_support(f.dimension, std::move(components));
}

// Zero locus only: factors with positive exponent.
inline SupportSet zero_locus(const FactoredTorusFunction& f) {
    std::vector<TranslatedSubtorus> components;
    for (const MonomialFactor& factor : f.factors) {
        if (factor.power <= 0)
            continue;
        auto pieces = decompose_factor(f.dimension, factor.exponents);
        components.insert(components.end(), pieces.begin(), pieces.end());
    }
    return make_support(f.dimension, std::move(components));
}

// ---------------------------------------------------------------------------
// Torsion points lambda = Exp(alpha) = (e^{2 pi i alpha_1}, ...).
// ---------------------------------------------------------------------------

struct TorsionPoint {
    std::vector<Rational> angles; // each in [0,1)

    friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
};

inline TorsionPoint make_torsion_point(std::vector<Rational> angles) {
    for (Rational& a : angles)
        a = mod1(a);
    return TorsionPoint{std::move(angles)};
}

inline bool component_contains(const TranslatedSubtorus& c, const TorsionPoint& p) {
    if (p.angles.size() != c.dimension)
        throw input_error("torsion point has wrong dimension");
    return is_integer(dot(c.exponents, p.angles) - c.translation);
}

inline bool member(const SupportSet& s, const TorsionPoint& p) {
    if (p.angles.size() != s.dimension)
        throw input_error("torsion point has wrong dimension");
    for (const TranslatedSubtorus& c : s.components)
        if (component_contains(c, p))
            return true;
    return false;
}

// Numeric membership for non-torsion angles; never used in the decision path.
inline bool member_approx(const SupportSet& s, const std::vector<double>& angles,
                          double tolerance = 1e-9) {
    if (angles.size() != s.dimension)
        throw input_error("point has wrong dimension");
    for (const TranslatedSubtorus& c : s.components) {
        double phase = -static_cast<double>(c.translation);
        for (std::size_t i = 0; i < angles.size(); ++i)
            phase += static_cast<double>(c.exponents[i]) * angles[i];
        if (std::abs(phase - std::round(phase)) < tolerance)
            return true;
    }
    return false;
}

// Sum of factor exponents vanishing at Exp(alpha): > 0 zero, < 0 pole.
inline Int vanishing_order(const FactoredTorusFunction& f, const TorsionPoint& p) {
    if (p.angles.size() != f.dimension)
        throw input_error("torsion point has wrong dimension");
    Int order = 0;
    for (const MonomialFactor& factor : f.factors)
        if (is_integer(dot(factor.exponents, p.angles)))
            order += factor.power;
    return order;
}

// ---------------------------------------------------------------------------
// Specialization matrices acting on supports and torsion points.
// ---------------------------------------------------------------------------

struct SpecializationMatrix {
    std::vector<IntVector> rows; // p rows of length r, natural entries

    std::size_t source_dimension() const { return rows.size(); } // p
    std::size_t target_dimension() const { return rows.empty() ? 0 : rows.front().size(); } // r
};

inline SpecializationMatrix make_specialization_matrix(std::vector<IntVector> rows) {
    if (rows.empty())
        throw input_error("specialization matrix has no rows");
    const std::size_t cols = rows.front().size();
    if (cols == 0)
        throw input_error("specialization matrix has no columns");
    for (const IntVector& row : rows) {
        if (row.size() != cols)
            throw input_error("ragged specialization matrix");
        for (const Int& entry : row)
            if (entry < 0)
                throw input_error("specialization matrix entries must be natural numbers");
    }
    return SpecializationMatrix{std::move(rows)};
}

inline IntVector matrix_apply(const SpecializationMatrix& m, const IntVector& v) {
    IntVector image;
    image.reserve(m.rows.size());
    for (const IntVector& row : m.rows)
        image.push_back(dot(row, v));
    return image;
}

// The induced map tau_M: (C*)^p -> (C*)^r with (tau_M lambda)^a = lambda^{M a},
// i.e. angle'_i = sum_k m_{ki} alpha_k.
inline TorsionPoint torus_map(const SpecializationMatrix& m, const TorsionPoint& p) {
    if (p.angles.size() != m.source_dimension())
        throw input_error("torsion point has wrong dimension");
    std::vector<Rational> image(m.target_dimension(), Rational(0));
    for (std::size_t k = 0; k < m.rows.size(); ++k)
        for (std::size_t i = 0; i < image.size(); ++i)
            image[i] += Rational(m.rows[k][i]) * p.angles[k];
    return make_torsion_point(std::move(image));
}

// tau_M^{-1} of a support: each {t^a = e^{2 pi i q}} pulls back to
// {lambda : lambda^{M a} = e^{2 pi i q}}, decomposed into primitive components.
inline SupportSet pullback_support(const SupportSet& s, const SpecializationMatrix& m) {
    if (s.dimension != m.target_dimension())
        throw input_error("support and specialization matrix dimensions differ");
    const std::size_t p = m.source_dimension();
    std::vector<TranslatedSubtorus> components;
    for (const TranslatedSubtorus& c : s.components) {
        const IntVector image = matrix_apply(m, c.exponents);
        if (is_zero(image))
            throw internal_error("specialization annihilates a support component");
        auto pieces = decompose_binomial(p, image, c.translation);
        components.insert(components.end(), pieces.begin(), pieces.end());
    }
    return make_support(p, std::move(components));
}

// Image of a support under inverting every local system: q -> -q mod 1.
inline SupportSet invert_set(const SupportSet& s) {
    std::vector<TranslatedSubtorus> components;
    components.reserve(s.components.size());
    for (const TranslatedSubtorus& c : s.components)
        components.push_back(TranslatedSubtorus{c.dimension, c.exponents,
                                                mod1(Rational(-c.translation))});
    return make_support(s.dimension, std::move(components));
}

} // namespace torsupp
