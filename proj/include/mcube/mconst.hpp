#pragma once

#include <cassert>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "mcube/hamming.hpp"
#include "mcube/linalg.hpp"
#include "mcube/negtype.hpp"

namespace mcube {

// Signed weight vector of total mass exactly one (the set F_1).
class Measure {
public:
    explicit Measure(RatVector weights) : w_(std::move(weights)) {
        if (sum(w_) != Rational(1)) throw InvalidArgumentError("measure mass must be exactly 1");
    }

    static Measure uniform(std::size_t m) {
        RatVector w(m);
        for (std::size_t i = 0; i < m; ++i) w[i] = Rational(1, static_cast<long>(m));
        return Measure(std::move(w));
    }

    static Measure point_mass(std::size_t m, std::size_t i) {
        return Measure(RatVector::unit(m, i));
    }

    std::size_t size() const { return w_.size(); }
    const Rational& weight(std::size_t i) const { return w_[i]; }
    const RatVector& weights() const { return w_; }

private:
    RatVector w_;
};

enum class Route { InverseSum, SolveB, Geometric, Circumcenter };

inline const char* route_name(Route r) {
    switch (r) {
        case Route::InverseSum: return "inverseSum";
        case Route::SolveB: return "solveB";
        case Route::Geometric: return "geometric";
        case Route::Circumcenter: return "circumcenter";
    }
    return "?";
}

struct MConstResult {
    Rational value;
    Measure measure;
    Route route;
};

// I(mu) = <D mu, mu>, the exact quadratic energy.
inline Rational energy(const DistMatrix& d, const Measure& mu) {
    if (mu.size() != d.size()) throw DimensionMismatchError("energy: dimension mismatch");
    return dot(d.matrix() * mu.weights(), mu.weights());
}

// d_mu(x_i) = (D mu)_i, the potential of mu at the i-th point.
inline Rational potential(const DistMatrix& d, const Measure& mu, std::size_t i) {
    if (mu.size() != d.size()) throw DimensionMismatchError("potential: dimension mismatch");
    if (i >= d.size()) throw InvalidArgumentError("potential: index out of range");
    Rational s;
    for (std::size_t j = 0; j < d.size(); ++j) s += d.entry(i, j) * mu.weight(j);
    return s;
}

// A mass-one measure is maximal iff its potential is the same at every point
// and equals its energy; then that common value is M(X).
inline bool verify_maximality(const DistMatrix& d, const MConstResult& r) {
    if (r.measure.size() != d.size()) return false;
    const RatVector pot = d.matrix() * r.measure.weights();
    for (std::size_t i = 0; i < pot.size(); ++i)
        if (pot[i] != r.value) return false;
    return energy(d, r.measure) == r.value;
}

namespace detail {

inline MConstResult checked_result(const DistMatrix& d, Rational value, Measure mu, Route route) {
    MConstResult r{std::move(value), std::move(mu), route};
    if (r.value.sign() <= 0) throw DegenerateError("M-constant must be strictly positive");
    if (!verify_maximality(d, r))
        throw Error("constructed measure fails the maximality certificate");
    return r;
}

}  // namespace detail

// M(X) = 1 / <D^{-1} 1, 1> with maximal measure D^{-1}1 normalized; requires
// strict 1-negative type, i.e. invertible D.
inline MConstResult mconst_inverse_route(const DistMatrix& d) {
    const std::size_t m = d.size();
    RatMatrix inv(m, m);
    try {
        inv = inverse(d.matrix());
    } catch (const SingularMatrixError&) {
        throw NotStrictError("distance matrix is singular; inverse route undefined");
    }
    const RatVector row_sums = inv * RatVector::ones(m);
    const Rational inv_sum = sum(row_sums);
    if (inv_sum.sign() <= 0)
        throw DegenerateError("inverse-entry sum is not positive; input not of negative type");
    const Rational value = inv_sum.reciprocal();
    return detail::checked_result(d, value, Measure(value * row_sums), Route::InverseSum);
}

struct InfiniteM {};   // Db = 1 solvable but <b,1> = 0: the supremum is infinite
struct NoSolution {};  // Db = 1 inconsistent: input was not of 1-negative type

using SolveBOutcome = std::variant<MConstResult, InfiniteM, NoSolution>;

// Solves Db = 1 (any particular solution; D may be singular) and reads off
// M(X) = 1/<b,1> with maximal measure b/<b,1>.
inline SolveBOutcome mconst_solveb_route(const DistMatrix& d) {
    assert(check_negative_type(d).is_negative_type);
    const SolveResult res = solve(d.matrix(), RatVector::ones(d.size()));
    if (std::holds_alternative<SolveInconsistent>(res)) return NoSolution{};
    const RatVector& b = std::holds_alternative<SolveUnique>(res)
                             ? std::get<SolveUnique>(res).solution
                             : std::get<SolveParticular>(res).solution;
    const Rational mass = sum(b);
    if (mass.is_zero()) return InfiniteM{};
    if (mass.sign() < 0)
        throw DegenerateError("<b,1> is negative; input not of 1-negative type");
    const Rational value = mass.reciprocal();
    return detail::checked_result(d, value, Measure(value * b), Route::SolveB);
}

// Exact M(X) for cube subsets; wraps the Db = 1 route and rejects the
// variants that cannot occur for subsets of a Hamming cube.
inline Rational mconst_exact_value(const DistMatrix& d) {
    const SolveBOutcome out = mconst_solveb_route(d);
    if (const auto* r = std::get_if<MConstResult>(&out)) return r->value;
    throw DegenerateError("M-constant is infinite or undefined for this input");
}

// <b,1> is the same for every solution of Db = 1; equivalently every kernel
// basis vector is orthogonal to 1. Verified exactly.
inline bool verify_b_invariance(const DistMatrix& d) {
    const SolveResult res = solve(d.matrix(), RatVector::ones(d.size()));
    if (const auto* particular = std::get_if<SolveParticular>(&res)) {
        for (const RatVector& v : particular->null_basis)
            if (!sum(v).is_zero()) return false;
    }
    return true;  // unique or no solution: nothing to vary
}

namespace detail {

// Rows kept leading-one normalized with strictly increasing pivots; supports
// an incremental independence test (greedy affine basis, affine hulls).
class EchelonBasis {
public:
    bool try_insert(RatVector v) {
        reduce(v);
        std::size_t pivot = v.size();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == v.size()) return false;
        const Rational inv = v[pivot].reciprocal();
        rows_.emplace(pivot, inv * v);
        return true;
    }

    void reduce(RatVector& v) const {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            const Rational f = v[pivot];
            for (std::size_t j = pivot; j < v.size(); ++j) v[j] -= f * row[j];
        }
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::map<std::size_t, RatVector> rows_;
};

}  // namespace detail

// Indices of a maximal affinely independent subset, greedy in index order:
// index 0 always, then each index that raises the affine rank.
inline std::vector<std::size_t> extract_affine_basis(const HammingPointSet& x) {
    std::vector<std::size_t> idx{0};
    detail::EchelonBasis basis;
    const RatVector base = x.point(0).to_vector();
    for (std::size_t i = 1; i < x.size(); ++i)
        if (basis.try_insert(x.point(i).to_vector() - base)) idx.push_back(i);
    return idx;
}

// M(X) via the inverse route on a maximal affinely independent subset Y;
// the maximal measure is extended by zeros and re-certified on all of X.
inline MConstResult mconst_reduced(const HammingPointSet& x) {
    const DistMatrix d = distance_matrix(x);
    const std::vector<std::size_t> idx = extract_affine_basis(x);

    std::vector<HammingPoint> sub;
    sub.reserve(idx.size());
    for (std::size_t i : idx) sub.push_back(x.point(i));
    const HammingPointSet y(std::move(sub));
    const MConstResult on_basis = mconst_inverse_route(distance_matrix(y));

    RatVector extended(x.size());
    for (std::size_t k = 0; k < idx.size(); ++k) extended[idx[k]] = on_basis.measure.weight(k);
    return detail::checked_result(d, on_basis.value, Measure(std::move(extended)),
                                  Route::InverseSum);
}

// Every bound the M-constant must satisfy on a cube subset:
//   2/n <= <D^{-1}1,1> <= 2            (affinely independent X)
//   (1/m^2) <D1,1> <= M(X) <= n/2
//   ((m-1)/m) d_min <= (1/m^2) <D1,1>
//   M(X) <= (m/4) diam(X)
inline bool check_bounds(const HammingPointSet& x) {
    const DistMatrix d = distance_matrix(x);
    const std::size_t n = x.dimension();
    const std::size_t m = x.size();

    const SolveBOutcome out = mconst_solveb_route(d);
    const auto* result = std::get_if<MConstResult>(&out);
    if (result == nullptr) return false;
    const Rational& value = result->value;

    if (value > Rational(static_cast<long>(n), 2)) return false;

    const RatVector ones = RatVector::ones(m);
    const Rational total = dot(d.matrix() * ones, ones);
    const Rational uniform_energy = total / Rational(static_cast<long>(m * m));
    if (value < uniform_energy) return false;
    const Rational d0 = d.min_nonzero();
    if (uniform_energy < Rational(static_cast<long>(m - 1), static_cast<long>(m)) * d0)
        return false;

    if (value > Rational(static_cast<long>(m), 4) * d.diameter()) return false;

    if (affinely_independent(x)) {
        const Rational inv_sum = value.reciprocal();  // <D^{-1}1,1> = 1/M(X)
        if (inv_sum < Rational(2, static_cast<long>(n)) || inv_sum > Rational(2)) return false;
    }
    return true;
}

}  // namespace mcube
