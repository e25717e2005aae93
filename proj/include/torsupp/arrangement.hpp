#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "torsupp/linalg.hpp"
#include "torsupp/zeta.hpp"

namespace torsupp {

// ---------------------------------------------------------------------------
// Rational hyperplane arrangements in C^n.
// ---------------------------------------------------------------------------

// Canonical form of the equation <normal, x> + constant = 0 with normal
// primitive (gcd 1, first nonzero entry positive).
struct Hyperplane {
    IntVector normal;
    Rational constant;

    LinearEquation equation() const { return LinearEquation{normal, constant}; }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// form = (c0, c1, ..., cn) meaning c0 + sum c_i x_i = 0.
inline Hyperplane hyperplane_from_form(const std::vector<Rational>& form) {
    if (form.size() < 2)
        throw input_error("hyperplane form needs a constant and at least one coefficient");
    Int scale = 1;
    for (std::size_t i = 1; i < form.size(); ++i)
        scale = lcm(scale, denominator(form[i]));
    IntVector cleared;
    cleared.reserve(form.size() - 1);
    for (std::size_t i = 1; i < form.size(); ++i)
        cleared.push_back(numerator(form[i]) * (scale / denominator(form[i])));
    if (is_zero(cleared))
        throw input_error("hyperplane form has zero normal vector");
    const PrimitivePart prim = primitive_part(cleared);
    const Rational factor = make_rational(prim.flipped ? Int(-scale) : scale, prim.gcd);
    return Hyperplane{prim.vector, form[0] * factor};
}

struct Arrangement {
    std::size_t ambient = 0;             // n
    std::vector<Hyperplane> hyperplanes; // index i corresponds to torus coordinate t_{i+1}

    std::size_t size() const { return hyperplanes.size(); } // r
};

inline Arrangement make_arrangement(std::size_t ambient,
                                    const std::vector<std::vector<Rational>>& forms) {
    if (ambient == 0)
        throw input_error("ambient dimension must be positive");
    if (forms.empty())
        throw input_error("arrangement needs at least one hyperplane");
    Arrangement arrangement;
    arrangement.ambient = ambient;
    for (const auto& form : forms) {
        if (form.size() != ambient + 1)
            throw input_error("hyperplane form has wrong length");
        Hyperplane h = hyperplane_from_form(form);
        for (const Hyperplane& seen : arrangement.hyperplanes)
            if (seen == h)
                throw input_error("duplicate hyperplane");
        arrangement.hyperplanes.push_back(std::move(h));
    }
    return arrangement;
}

// ---------------------------------------------------------------------------
// Matroid connectivity of a list of nonzero integer vectors.
// ---------------------------------------------------------------------------

namespace detail {

// Incremental exact row reduction for independence testing.
class RowSpan {
  public:
    // Adds v to the span; returns true when v was independent of the span.
    bool try_add(const IntVector& v) {
        std::vector<Rational> row(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            row[i] = Rational(v[i]);
        reduce(row);
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] == 0)
                continue;
            const Rational lead = row[i];
            for (Rational& entry : row)
                entry /= lead;
            rows_.emplace(i, std::move(row));
            return true;
        }
        return false;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    void reduce(std::vector<Rational>& row) const {
        for (const auto& [pivot, basis_row] : rows_) {
            if (row[pivot] == 0)
                continue;
            const Rational factor = row[pivot];
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] -= factor * basis_row[j];
        }
    }

    std::map<std::size_t, std::vector<Rational>> rows_; // pivot column -> unit row
};

inline std::size_t rank_of(const std::vector<IntVector>& vectors,
                           const std::vector<std::size_t>& subset) {
    RowSpan span;
    for (std::size_t index : subset)
        span.try_add(vectors[index]);
    return span.rank();
}

class UnionFind {
  public:
    explicit UnionFind(std::size_t size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<std::size_t> parent_;
};

// Finest partition into parts with additive rank, found by exhaustive
// bipartition search; exponential, used as fallback and test oracle.
inline void bruteforce_components(const std::vector<IntVector>& vectors,
                                  const std::vector<std::size_t>& subset,
                                  std::vector<std::vector<std::size_t>>& out) {
    const std::size_t m = subset.size();
    if (m <= 1) {
        out.push_back(subset);
        return;
    }
    const std::size_t total = rank_of(vectors, subset);
    // Masks 0 .. 2^(m-1)-2: element 0 is pinned to the left part, and the
    // all-ones mask is excluded so the right part is never empty.
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << (m - 1)); ++mask) {
        std::vector<std::size_t> left, right;
        left.push_back(subset[0]);
        for (std::size_t j = 1; j < m; ++j)
            ((mask >> (j - 1)) & 1 ? left : right).push_back(subset[j]);
        if (rank_of(vectors, left) + rank_of(vectors, right) == total) {
            bruteforce_components(vectors, left, out);
            bruteforce_components(vectors, right, out);
            return;
        }
    }
    out.push_back(subset);
}

} // namespace detail

// Connected components of the linear matroid on the vectors, as sorted index
// lists ordered by smallest member. Computed from the fundamental circuits of
// one greedy basis; rank additivity of the result is verified, with an
// exhaustive fallback (size <= 20) should verification ever fail.
inline std::vector<std::vector<std::size_t>>
matroid_components(const std::vector<IntVector>& vectors) {
    for (const IntVector& v : vectors)
        if (is_zero(v))
            throw input_error("matroid vectors must be nonzero");
    const std::size_t m = vectors.size();
    if (m == 0)
        return {};

    detail::RowSpan span;
    std::vector<std::size_t> basis;
    std::vector<bool> in_basis(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        if (span.try_add(vectors[i])) {
            basis.push_back(i);
            in_basis[i] = true;
        }
    }

    detail::UnionFind components(m);
    std::vector<IntVector> basis_vectors;
    basis_vectors.reserve(basis.size());
    for (std::size_t b : basis)
        basis_vectors.push_back(vectors[b]);
    for (std::size_t e = 0; e < m; ++e) {
        if (in_basis[e])
            continue;
        const auto coefficients = solve_in_span(basis_vectors, vectors[e]);
        if (!coefficients)
            throw internal_error("non-basis vector outside basis span");
        for (std::size_t j = 0; j < basis.size(); ++j)
            if ((*coefficients)[j] != 0)
                components.unite(e, basis[j]);
    }

    std::map<std::size_t, std::vector<std::size_t>> grouped;
    for (std::size_t i = 0; i < m; ++i)
        grouped[components.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> partition;
    partition.reserve(grouped.size());
    for (auto& [root, part] : grouped)
        partition.push_back(std::move(part));
    std::sort(partition.begin(), partition.end());

    std::size_t rank_sum = 0;
    for (const auto& part : partition)
        rank_sum += detail::rank_of(vectors, part);
    if (rank_sum != span.rank()) {
        if (m > 20)
            throw internal_error("matroid component verification failed on a large input");
        std::vector<std::size_t> all(m);
        std::iota(all.begin(), all.end(), std::size_t{0});
        std::vector<std::vector<std::size_t>> fallback;
        detail::bruteforce_components(vectors, all, fallback);
        std::sort(fallback.begin(), fallback.end());
        return fallback;
    }
    return partition;
}

// A localized arrangement is irreducible when its matroid of normals is
// connected; a single hyperplane counts as irreducible.
inline bool is_irreducible(const std::vector<IntVector>& normals) {
    if (normals.empty())
        throw input_error("localized arrangement is empty");
    return matroid_components(normals).size() == 1;
}

// Exhaustive oracle: reducible iff some bipartition has additive rank.
inline bool is_irreducible_bruteforce(const std::vector<IntVector>& normals) {
    if (normals.empty())
        throw input_error("localized arrangement is empty");
    if (normals.size() > 20)
        throw input_error("brute-force irreducibility limited to 20 hyperplanes");
    const std::size_t m = normals.size();
    if (m == 1)
        return true;
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const std::size_t total = detail::rank_of(normals, all);
    for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << (m - 1)); ++mask) {
        std::vector<std::size_t> left, right;
        left.push_back(0);
        for (std::size_t j = 1; j < m; ++j)
            ((mask >> (j - 1)) & 1 ? left : right).push_back(j);
        if (detail::rank_of(normals, left) + detail::rank_of(normals, right) == total)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Intersection lattice and dense edges.
// ---------------------------------------------------------------------------

struct Edge {
    std::vector<std::size_t> indices; // closed: exactly the hyperplanes containing the edge
    AffineSubspace subspace;
    std::size_t codim = 0;
    bool dense = false;
};

struct IntersectionLattice {
    std::vector<Edge> edges; // sorted by (codim, indices)
};

// All nonempty intersections of subfamilies, each stored once under its
// closed index set, with dense flags from matroid connectivity of the
// localized normals.
inline IntersectionLattice intersection_lattice(const Arrangement& arrangement) {
    const std::size_t n = arrangement.ambient;
    const std::size_t r = arrangement.size();
    std::vector<LinearEquation> equations;
    equations.reserve(r);
    for (const Hyperplane& h : arrangement.hyperplanes)
        equations.push_back(h.equation());

    const auto closure_of = [&](const AffineSubspace& subspace) {
        std::vector<std::size_t> closed;
        for (std::size_t k = 0; k < r; ++k)
            if (subspace.satisfies(equations[k]))
                closed.push_back(k);
        return closed;
    };

    std::map<std::vector<std::size_t>, AffineSubspace> known;
    std::vector<std::vector<std::size_t>> frontier;
    for (std::size_t i = 0; i < r; ++i) {
        auto subspace = affine_intersection(n, {equations[i]});
        if (!subspace)
            throw internal_error("single hyperplane has empty solution set");
        auto closed = closure_of(*subspace);
        if (known.emplace(closed, std::move(*subspace)).second)
            frontier.push_back(std::move(closed));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& indices : frontier) {
            for (std::size_t j = 0; j < r; ++j) {
                if (std::binary_search(indices.begin(), indices.end(), j))
                    continue;
                std::vector<LinearEquation> system;
                system.reserve(indices.size() + 1);
                for (std::size_t i : indices)
                    system.push_back(equations[i]);
                system.push_back(equations[j]);
                auto subspace = affine_intersection(n, system);
                if (!subspace)
                    continue;
                auto closed = closure_of(*subspace);
                if (known.emplace(closed, std::move(*subspace)).second)
                    next.push_back(std::move(closed));
            }
        }
        frontier = std::move(next);
    }

    IntersectionLattice lattice;
    lattice.edges.reserve(known.size());
    for (auto& [indices, subspace] : known) {
        Edge edge;
        edge.indices = indices;
        edge.codim = n - subspace.dim();
        std::vector<IntVector> normals;
        normals.reserve(indices.size());
        for (std::size_t i : indices)
            normals.push_back(arrangement.hyperplanes[i].normal);
        edge.dense = is_irreducible(normals);
        edge.subspace = std::move(subspace);
        lattice.edges.push_back(std::move(edge));
    }
    std::sort(lattice.edges.begin(), lattice.edges.end(),
              [](const Edge& a, const Edge& b) {
                  if (a.codim != b.codim)
                      return a.codim < b.codim;
                  return a.indices < b.indices;
              });
    return lattice;
}

inline std::vector<Edge> dense_edges(const Arrangement& arrangement) {
    std::vector<Edge> result;
    for (Edge& edge : intersection_lattice(arrangement).edges)
        if (edge.dense)
            result.push_back(std::move(edge));
    return result;
}

// ---------------------------------------------------------------------------
// Automatic resolution data for line arrangements in C^2, stratum by stratum:
// at a generic point of a line the germ is smooth (divisor = the line germ,
// chi = 1); at a point where m >= 2 lines meet, one blow-up suffices (divisor
// = exceptional P^1 meeting m strict transforms, chi = 2 - m), with order of
// vanishing of f_i equal to the incidence count.
// ---------------------------------------------------------------------------

inline ResolutionData line_arrangement_resolution(const Arrangement& arrangement) {
    if (arrangement.ambient != 2)
        throw input_error("automatic resolution requires a line arrangement in C^2");
    const std::size_t r = arrangement.size();
    const IntersectionLattice lattice = intersection_lattice(arrangement);

    ResolutionData data;
    data.dimension = r;
    data.noninvertible.assign(r, true);
    for (std::size_t i = 0; i < r; ++i) {
        IntVector unit(r, Int(0));
        unit[i] = 1;
        data.strata.push_back(Stratum{
            "line-" + std::to_string(i + 1),
            {DivisorRecord{"L" + std::to_string(i + 1), std::move(unit), Int(1)}}});
    }
    std::size_t point_counter = 0;
    for (const Edge& edge : lattice.edges) {
        if (edge.codim != 2)
            continue;
        ++point_counter;
        IntVector incidence(r, Int(0));
        for (std::size_t i : edge.indices)
            incidence[i] = 1;
        const Int chi = 2 - Int(edge.indices.size());
        data.strata.push_back(Stratum{
            "point-" + std::to_string(point_counter),
            {DivisorRecord{"E" + std::to_string(point_counter), std::move(incidence), chi}}});
    }
    return data;
}

} // namespace torsupp
