#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "mcube/hamming.hpp"
#include "mcube/linalg.hpp"

namespace mcube {

// Certified verdict on 1-negative type. When negativity or strictness fails,
// `witness` is a nonzero sum-zero vector with witness^T D witness >= 0,
// verified exactly before the verdict is returned.
struct NegTypeVerdict {
    bool is_negative_type;
    bool is_strict;
    std::optional<RatVector> witness;
};

namespace detail {

// Q = B^T D B where B has columns e_i - e_m (i < m): the distance form
// restricted to the sum-zero subspace in the deterministic basis.
inline RatMatrix sum_zero_form(const DistMatrix& d) {
    const std::size_t m = d.size();
    RatMatrix q(m - 1, m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j + 1 < m; ++j)
            q(i, j) = d.entry(i, j) - d.entry(i, m - 1) - d.entry(m - 1, j);
    return q;
}

// Lifts coefficients over {e_i - e_m} back to a sum-zero vector on the points.
inline RatVector lift_sum_zero(const RatVector& v, std::size_t m) {
    RatVector xi(m);
    Rational tail;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        xi[i] = v[i];
        tail -= v[i];
    }
    xi[m - 1] = tail;
    return xi;
}

}  // namespace detail

// Decides 1-negative type and strict 1-negative type of D, exactly.
// The form is negative semidefinite on sum-zero vectors iff -Q is PSD;
// strictness additionally needs Q nonsingular.
inline NegTypeVerdict check_negative_type(const DistMatrix& d) {
    const std::size_t m = d.size();
    const RatMatrix q = detail::sum_zero_form(d);

    RatMatrix neg_q(m - 1, m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j + 1 < m; ++j) neg_q(i, j) = -q(i, j);

    auto checked_witness = [&](RatVector xi) {
        if (xi.is_zero()) throw Error("negative-type witness is zero");
        if (!sum(xi).is_zero()) throw Error("negative-type witness does not sum to zero");
        if (dot(d.matrix() * xi, xi).sign() < 0)
            throw Error("negative-type witness fails its certificate inequality");
        return xi;
    };

    const PsdAnalysis psd = analyze_positive_semidefinite(neg_q);
    if (!psd.semidefinite) {
        // v^T (-Q) v < 0, so the lifted vector has xi^T D xi > 0.
        RatVector xi = detail::lift_sum_zero(*psd.counterexample, m);
        return {false, false, checked_witness(std::move(xi))};
    }

    const SolveResult kernel = solve(q, RatVector(m - 1));
    if (std::holds_alternative<SolveUnique>(kernel)) return {true, true, std::nullopt};

    // Q singular: strictness fails; a kernel vector certifies xi^T D xi = 0.
    const auto& particular = std::get<SolveParticular>(kernel);
    RatVector xi = detail::lift_sum_zero(particular.null_basis.front(), m);
    return {true, false, checked_witness(std::move(xi))};
}

// True iff the rows x_i - x_0 (i >= 1) have full rank m-1.
inline bool affinely_independent(const HammingPointSet& x) {
    const std::size_t m = x.size();
    if (m - 1 > x.dimension()) return false;
    RatMatrix rows(m - 1, x.dimension());
    const RatVector base = x.point(0).to_vector();
    for (std::size_t i = 1; i < m; ++i) {
        const RatVector diff = x.point(i).to_vector() - base;
        for (std::size_t j = 0; j < x.dimension(); ++j) rows(i - 1, j) = diff[j];
    }
    return rank(rows) == m - 1;
}

// Self-check: strict 1-negative type, affine independence, and det(D) != 0
// are equivalent for cube subsets. Returns true iff all three predicates
// agree on x (all true or all false).
inline bool strictness_criteria_agree(const HammingPointSet& x) {
    const DistMatrix d = distance_matrix(x);
    const NegTypeVerdict verdict = check_negative_type(d);
    const bool affine = affinely_independent(x);
    const bool nonsingular = !determinant(d.matrix()).is_zero();
    return verdict.is_strict == affine && affine == nonsingular;
}

// Companion consistency check: when D is nonsingular, strictness must also
// match the characterization "D nonsingular and <D^{-1}1,1> != 0".
inline bool inverse_sum_strictness_consistent(const HammingPointSet& x) {
    const DistMatrix d = distance_matrix(x);
    const NegTypeVerdict verdict = check_negative_type(d);
    const SolveResult res = solve(d.matrix(), RatVector::ones(d.size()));
    if (const auto* unique = std::get_if<SolveUnique>(&res)) {
        const bool characterization = !sum(unique->solution).is_zero();
        return characterization == verdict.is_strict;
    }
    return !verdict.is_strict;  // singular D can never be strict
}

}  // namespace mcube
