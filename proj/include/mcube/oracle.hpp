#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mcube/hamming.hpp"
#include "mcube/mconst.hpp"
#include "mcube/rng.hpp"

namespace mcube {

// Floating-point verification result for sup I(mu) over the mass-one
// hyperplane. Verification-only: nothing here feeds back into exact paths.
struct OracleResult {
    double approx_m = 0.0;
    std::vector<double> measure;
    std::size_t iterations = 0;
    bool converged = false;
    double gradient_residual = 0.0;  // |P(2 D mu)| at termination
};

inline constexpr std::size_t kOracleDefaultMaxIters = 200000;
inline constexpr double kOracleDefaultTol = 1e-9;

namespace detail {

inline std::vector<double> to_double_matrix(const DistMatrix& d) {
    const std::size_t m = d.size();
    std::vector<double> a(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a[i * m + j] = d.entry(i, j).to_double();
    return a;
}

}  // namespace detail

// Projected gradient ascent for I(mu) = mu^T D mu over {sum mu = 1}:
// mu <- mu + eta P(2 D mu), where P subtracts the mean and the fixed step
// eta = 1/(2 max row sum) keeps the concave objective monotone increasing.
// Starts from the uniform measure plus a seeded small sum-zero perturbation.
inline OracleResult maximize_energy(const DistMatrix& d, std::uint64_t seed,
                                    std::size_t max_iters = kOracleDefaultMaxIters,
                                    double tol = kOracleDefaultTol,
                                    std::vector<double>* energy_trace = nullptr) {
    const std::size_t m = d.size();
    const std::vector<double> a = detail::to_double_matrix(d);

    std::mt19937_64 gen(rng::derive(seed, m, 0x0eac1e));
    std::vector<double> mu(m, 1.0 / static_cast<double>(m));
    {
        std::vector<double> noise(m);
        double mean = 0.0;
        for (double& x : noise) {
            x = rng::uniform_signed_unit(gen);
            mean += x;
        }
        mean /= static_cast<double>(m);
        for (std::size_t i = 0; i < m; ++i) mu[i] += 0.01 * (noise[i] - mean);
    }

    const double eta = 1.0 / (2.0 * d.max_row_sum().to_double());

    auto energy_at = [&](const std::vector<double>& v) {
        double e = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < m; ++j) row += a[i * m + j] * v[j];
            e += row * v[i];
        }
        return e;
    };

    std::vector<double> grad(m);
    auto projected_gradient = [&]() {
        double mean = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < m; ++j) row += a[i * m + j] * mu[j];
            grad[i] = 2.0 * row;
            mean += grad[i];
        }
        mean /= static_cast<double>(m);
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            grad[i] -= mean;
            norm_sq += grad[i] * grad[i];
        }
        return std::sqrt(norm_sq);
    };

    if (energy_trace != nullptr) {
        energy_trace->clear();
        energy_trace->push_back(energy_at(mu));
    }

    OracleResult result;
    double residual = projected_gradient();
    std::size_t it = 0;
    while (residual > tol && it < max_iters) {
        for (std::size_t i = 0; i < m; ++i) mu[i] += eta * grad[i];
        ++it;
        if (energy_trace != nullptr) energy_trace->push_back(energy_at(mu));
        residual = projected_gradient();
    }

    result.approx_m = energy_at(mu);
    result.measure = std::move(mu);
    result.iterations = it;
    result.converged = residual <= tol;
    result.gradient_residual = residual;
    return result;
}

// Compares the oracle against the exact Db = 1 route: the values must agree
// within tol and the oracle measure's potential must be near-constant
// (max - min within 10 tol).
inline bool cross_validate(const HammingPointSet& x, double tol, std::uint64_t seed = 1,
                           std::size_t max_iters = kOracleDefaultMaxIters) {
    const DistMatrix d = distance_matrix(x);
    const SolveBOutcome out = mconst_solveb_route(d);
    const auto* exact = std::get_if<MConstResult>(&out);
    if (exact == nullptr) return false;

    const OracleResult oracle = maximize_energy(d, seed, max_iters);
    if (!oracle.converged) return false;
    if (std::abs(oracle.approx_m - exact->value.to_double()) > tol) return false;

    const std::vector<double> a = detail::to_double_matrix(d);
    const std::size_t m = d.size();
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j) row += a[i * m + j] * oracle.measure[j];
        if (i == 0) {
            lo = hi = row;
        } else {
            lo = std::min(lo, row);
            hi = std::max(hi, row);
        }
    }
    return hi - lo <= 10.0 * tol;
}

}  // namespace mcube
