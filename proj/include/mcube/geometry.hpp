#pragma once

#include <utility>
#include <vector>

#include "mcube/hamming.hpp"
#include "mcube/linalg.hpp"
#include "mcube/mconst.hpp"

namespace mcube {

// base + span(directions); directions kept linearly independent.
struct AffineSubspace {
    RatVector base;
    std::vector<RatVector> directions;
};

struct Projection {
    RatVector foot;
    Rational dist_squared;
};

// A sphere through every point of a set, with its center expressed as an
// affine combination of the points (coefficients sum to 1).
struct SphereWitness {
    RatVector center;
    Rational radius_squared;
    RatVector center_coefficients;
};

struct Circumcenter {
    RatVector coefficients;
    RatVector center;
};

struct CircumcenterResult {
    MConstResult mconst;
    SphereWitness sphere;
};

struct PotentialSplit {
    Rational barycentric_dist_squared;
    Rational half_energy;
};

// The cube center h = (1/2, ..., 1/2).
inline RatVector cube_center(std::size_t n) {
    RatVector h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = Rational(1, 2);
    return h;
}

// The inclusion of a cube subset into R^n sends the metric to squared
// Euclidean distance: d1(x,y) = |x-y|_2^2 for every pair, checked exactly.
inline bool s_embedding_check(const HammingPointSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const Rational d1(hamming_distance(x.point(i), x.point(j)));
            const RatVector diff = x.point(i).to_vector() - x.point(j).to_vector();
            if (d1 != norm_squared(diff)) return false;
        }
    return true;
}

// Parallel-axis identity for mass-one weights: both sides of
//   sum_i a_i |u_i - u|^2 = |sum_i a_i u_i - u|^2 + (1/2) sum_ij a_i a_j |u_i - u_j|^2
// are evaluated independently and compared exactly.
inline bool parallel_axis_identity(const std::vector<RatVector>& points, const RatVector& weights,
                                   const RatVector& u) {
    if (points.empty() || points.size() != weights.size())
        throw DimensionMismatchError("parallel_axis_identity: weight/point count mismatch");
    for (const auto& p : points)
        if (p.size() != u.size())
            throw DimensionMismatchError("parallel_axis_identity: vector dimension mismatch");
    if (sum(weights) != Rational(1))
        throw InvalidArgumentError("parallel_axis_identity: weights must sum to 1");

    Rational lhs;
    for (std::size_t i = 0; i < points.size(); ++i)
        lhs += weights[i] * norm_squared(points[i] - u);

    RatVector barycenter(u.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        barycenter = barycenter + weights[i] * points[i];
    Rational spread;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            spread += weights[i] * weights[j] * norm_squared(points[i] - points[j]);
    const Rational rhs = norm_squared(barycenter - u) + Rational(1, 2) * spread;

    return lhs == rhs;
}

// Splits the potential d_mu(x_i) into |barycenter - x_i|^2 and I(mu)/2;
// the two terms always sum back to the potential.
inline PotentialSplit potential_decomposition(const HammingPointSet& x, const Measure& mu,
                                              std::size_t i) {
    if (mu.size() != x.size())
        throw DimensionMismatchError("potential_decomposition: measure size mismatch");
    if (i >= x.size()) throw InvalidArgumentError("potential_decomposition: index out of range");
    RatVector barycenter(x.dimension());
    for (std::size_t k = 0; k < x.size(); ++k)
        barycenter = barycenter + mu.weight(k) * x.point(k).to_vector();
    const Rational dist_sq = norm_squared(barycenter - x.point(i).to_vector());
    const Rational half_energy = energy(distance_matrix(x), mu) / Rational(2);
    return {dist_sq, half_energy};
}

// Smallest affine subspace containing the points: base x_0 and a greedy
// maximal independent subset of the differences x_i - x_0.
inline AffineSubspace affine_hull(const HammingPointSet& x) {
    const RatVector base = x.point(0).to_vector();
    std::vector<RatVector> directions;
    detail::EchelonBasis echelon;
    for (std::size_t i = 1; i < x.size(); ++i) {
        RatVector diff = x.point(i).to_vector() - base;
        if (echelon.try_insert(diff)) directions.push_back(std::move(diff));
    }
    return {base, std::move(directions)};
}

namespace detail {

// Least-squares coefficients of p - base over the directions, via the exact
// normal equations G^T G t = G^T (p - base).
inline RatVector projection_coefficients(const RatVector& p, const AffineSubspace& z) {
    const std::size_t k = z.directions.size();
    RatMatrix gram(k, k);
    RatVector rhs(k);
    const RatVector shifted = p - z.base;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(z.directions[i], z.directions[j]);
        rhs[i] = dot(z.directions[i], shifted);
    }
    const SolveResult res = solve(gram, rhs);
    const auto* unique = std::get_if<SolveUnique>(&res);
    if (unique == nullptr)
        throw InvalidArgumentError("projection: directions are linearly dependent");
    return unique->solution;
}

}  // namespace detail

// Orthogonal projection of p onto z. The residual is verified orthogonal to
// every direction, exactly.
inline Projection project_onto_affine(const RatVector& p, const AffineSubspace& z) {
    if (p.size() != z.base.size())
        throw DimensionMismatchError("projection: ambient dimension mismatch");
    RatVector foot = z.base;
    if (!z.directions.empty()) {
        const RatVector t = detail::projection_coefficients(p, z);
        for (std::size_t i = 0; i < z.directions.size(); ++i)
            foot = foot + t[i] * z.directions[i];
    }
    const RatVector residual = p - foot;
    for (const RatVector& dir : z.directions)
        if (!dot(residual, dir).is_zero())
            throw Error("projection residual is not orthogonal to the hull");
    return {std::move(foot), norm_squared(residual)};
}

// M(X) = n/2 - 2 d(h, Z_X)^2: project the cube center onto the affine hull.
// The maximal measure expresses the projection foot in affine coordinates
// over the greedy affine basis (zeros elsewhere).
inline MConstResult mconst_geometric(const HammingPointSet& x) {
    const std::size_t n = x.dimension();
    const std::vector<std::size_t> idx = extract_affine_basis(x);
    const RatVector y0 = x.point(idx[0]).to_vector();
    AffineSubspace hull{y0, {}};
    for (std::size_t j = 1; j < idx.size(); ++j)
        hull.directions.push_back(x.point(idx[j]).to_vector() - y0);

    const RatVector h = cube_center(n);
    const Projection proj = project_onto_affine(h, hull);
    const Rational value = Rational(static_cast<long>(n), 2) - Rational(2) * proj.dist_squared;

    RatVector weights(x.size());
    Rational head(1);
    if (!hull.directions.empty()) {
        const RatVector t = detail::projection_coefficients(h, hull);
        for (std::size_t j = 1; j < idx.size(); ++j) {
            weights[idx[j]] = t[j - 1];
            head -= t[j - 1];
        }
    }
    weights[idx[0]] = head;
    return detail::checked_result(distance_matrix(x), value, Measure(std::move(weights)),
                                  Route::Geometric);
}

// Unique point of span(v_1..v_k) equidistant from the origin and every v_i:
//   center = sum_i gamma_i v_i,  gamma = (A^T A)^{-1} (|v_1|^2, ..., |v_k|^2)/2.
inline Circumcenter circumcenter_basis(const std::vector<RatVector>& v) {
    if (v.empty()) throw InvalidArgumentError("circumcenter: empty basis");
    const std::size_t k = v.size();
    RatMatrix gram(k, k);
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(v[i], v[j]);
        rhs[i] = norm_squared(v[i]) / Rational(2);
    }
    const SolveResult res = solve(gram, rhs);
    const auto* unique = std::get_if<SolveUnique>(&res);
    if (unique == nullptr) throw InvalidArgumentError("circumcenter: vectors are dependent");
    const RatVector& gamma = unique->solution;
    RatVector center(v[0].size());
    for (std::size_t i = 0; i < k; ++i) center = center + gamma[i] * v[i];
    const Rational r_sq = norm_squared(center);
    for (std::size_t i = 0; i < k; ++i)
        if (norm_squared(center - v[i]) != r_sq)
            throw Error("circumcenter is not equidistant from the basis");
    return {gamma, std::move(center)};
}

// M(X) = 2 |c|^2 where c is the circumcenter of a translated affine basis;
// every point of X (not only the basis) must lie on the resulting sphere.
inline CircumcenterResult mconst_circumcenter(const HammingPointSet& x) {
    const std::vector<std::size_t> idx = extract_affine_basis(x);
    const RatVector y0 = x.point(idx[0]).to_vector();
    std::vector<RatVector> translated;
    translated.reserve(idx.size() - 1);
    for (std::size_t j = 1; j < idx.size(); ++j)
        translated.push_back(x.point(idx[j]).to_vector() - y0);

    const Circumcenter cc = circumcenter_basis(translated);
    const Rational radius_squared = norm_squared(cc.center);
    const Rational value = Rational(2) * radius_squared;
    const RatVector center = y0 + cc.center;

    for (const HammingPoint& p : x)
        if (norm_squared(center - p.to_vector()) != radius_squared)
            throw Error("point set does not lie on the circumcenter sphere");

    RatVector weights(x.size());
    Rational head(1);
    for (std::size_t j = 1; j < idx.size(); ++j) {
        weights[idx[j]] = cc.coefficients[j - 1];
        head -= cc.coefficients[j - 1];
    }
    weights[idx[0]] = head;
    Measure mu(weights);

    MConstResult result =
        detail::checked_result(distance_matrix(x), value, std::move(mu), Route::Circumcenter);
    SphereWitness sphere{center, radius_squared, weights};
    return {std::move(result), std::move(sphere)};
}

// For a maximal measure, the barycenter is the center of a sphere through
// every point, of squared radius M(X)/2.
inline SphereWitness sphere_center_from_measure(const HammingPointSet& x, const Measure& mu) {
    const DistMatrix d = distance_matrix(x);
    if (mu.size() != x.size())
        throw DimensionMismatchError("sphere_center_from_measure: measure size mismatch");
    const RatVector pot = d.matrix() * mu.weights();
    for (std::size_t i = 0; i < pot.size(); ++i)
        if (pot[i] != pot[0]) throw NotMaximalError("measure potential is not constant");
    if (energy(d, mu) != pot[0]) throw NotMaximalError("measure energy differs from potential");
    const Rational m_value = pot[0];

    RatVector center(x.dimension());
    for (std::size_t i = 0; i < x.size(); ++i)
        center = center + mu.weight(i) * x.point(i).to_vector();
    const Rational radius_squared = m_value / Rational(2);
    for (const HammingPoint& p : x)
        if (norm_squared(center - p.to_vector()) != radius_squared)
            throw Error("maximal-measure sphere misses a point");
    return {std::move(center), radius_squared, mu.weights()};
}

// Energy of any mass-one measure over cube points via the barycenter:
// I(mu) = n/2 - 2 |sum_i a_i x_i - h|^2. An independent route to the energy.
inline Rational energy_via_barycenter(const HammingPointSet& x, const Measure& mu) {
    if (mu.size() != x.size())
        throw DimensionMismatchError("energy_via_barycenter: measure size mismatch");
    RatVector barycenter(x.dimension());
    for (std::size_t i = 0; i < x.size(); ++i)
        barycenter = barycenter + mu.weight(i) * x.point(i).to_vector();
    const Rational dist_sq = norm_squared(barycenter - cube_center(x.dimension()));
    return Rational(static_cast<long>(x.dimension()), 2) - Rational(2) * dist_sq;
}

}  // namespace mcube
