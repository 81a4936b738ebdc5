#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "mcube/geometry.hpp"
#include "mcube/hamming.hpp"
#include "mcube/mconst.hpp"
#include "mcube/negtype.hpp"
#include "mcube/oracle.hpp"
#include "mcube/rng.hpp"

namespace mcube {

struct SweepOptions {
    std::size_t n_max = 6;
    std::size_t m_max = 10;
    std::size_t count = 20;
    std::uint64_t seed = 1;
    bool with_oracle = true;
    double oracle_tol = 1e-6;
};

struct SweepReport {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;  // deterministic order
};

namespace detail {

inline Rational small_rational(std::mt19937_64& gen) {
    const long num = static_cast<long>(rng::uniform_below(gen, 19)) - 9;  // -9..9
    const long den = static_cast<long>(rng::uniform_below(gen, 9)) + 1;   // 1..9
    return Rational(num, den);
}

inline RatVector small_rational_vector(std::mt19937_64& gen, std::size_t size) {
    RatVector v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = small_rational(gen);
    return v;
}

// Random signed mass-one weights: m-1 free entries, last balances to 1.
inline Measure random_measure(std::mt19937_64& gen, std::size_t m) {
    RatVector w(m);
    Rational tail(1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        w[i] = small_rational(gen);
        tail -= w[i];
    }
    w[m - 1] = tail;
    return Measure(std::move(w));
}

}  // namespace detail

// Runs every cross-route and identity check on one point set, recording each
// result. `gen` drives the randomized identity spot checks.
inline void sweep_instance(const HammingPointSet& x, std::mt19937_64& gen,
                           const SweepOptions& opt, std::uint64_t oracle_seed, SweepReport& rep,
                           const std::string& label) {
    auto check = [&](const char* name, bool ok) {
        ++rep.checks;
        if (ok) {
            ++rep.passed;
        } else {
            ++rep.failed;
            rep.failures.push_back(label + ": " + name);
        }
    };

    const DistMatrix d = distance_matrix(x);
    const NegTypeVerdict verdict = check_negative_type(d);
    check("negative-type", verdict.is_negative_type);
    check("strictness-criteria", strictness_criteria_agree(x));
    check("inverse-sum-consistency", inverse_sum_strictness_consistent(x));
    check("s-embedding", s_embedding_check(x));

    const SolveBOutcome solveb = mconst_solveb_route(d);
    const auto* exact = std::get_if<MConstResult>(&solveb);
    check("solveb-defined", exact != nullptr);
    if (exact == nullptr) return;

    const MConstResult geometric = mconst_geometric(x);
    const CircumcenterResult circum = mconst_circumcenter(x);
    const MConstResult reduced = mconst_reduced(x);
    bool agree = exact->value == geometric.value && exact->value == circum.mconst.value &&
                 exact->value == reduced.value;
    if (verdict.is_strict) agree = agree && exact->value == mconst_inverse_route(d).value;
    check("route-agreement", agree);

    check("maximality-solveb", verify_maximality(d, *exact));
    check("maximality-geometric", verify_maximality(d, geometric));
    check("maximality-circumcenter", verify_maximality(d, circum.mconst));
    check("maximality-reduced", verify_maximality(d, reduced));

    check("bounds", check_bounds(x));
    check("b-invariance", verify_b_invariance(d));

    // All sphere-center constructions must land on the same point.
    const SphereWitness from_measure = sphere_center_from_measure(x, exact->measure);
    const Projection foot = project_onto_affine(cube_center(x.dimension()), affine_hull(x));
    check("sphere-consistency", from_measure.center == circum.sphere.center &&
                                    from_measure.center == foot.foot &&
                                    from_measure.radius_squared == circum.sphere.radius_squared);

    // Randomized identity spot checks.
    {
        const std::size_t pts = 1 + rng::uniform_below(gen, 5);
        const std::size_t dim = 1 + rng::uniform_below(gen, 5);
        std::vector<RatVector> us;
        for (std::size_t i = 0; i < pts; ++i)
            us.push_back(detail::small_rational_vector(gen, dim));
        RatVector alpha(pts);
        Rational tail(1);
        for (std::size_t i = 0; i + 1 < pts; ++i) {
            alpha[i] = detail::small_rational(gen);
            tail -= alpha[i];
        }
        alpha[pts - 1] = tail;
        const RatVector u = detail::small_rational_vector(gen, dim);
        check("parallel-axis", parallel_axis_identity(us, alpha, u));
    }
    {
        const Measure mu = detail::random_measure(gen, x.size());
        const std::size_t i = rng::uniform_below(gen, x.size());
        const PotentialSplit split = potential_decomposition(x, mu, i);
        check("potential-decomposition",
              split.barycentric_dist_squared + split.half_energy == potential(d, mu, i));
        check("barycenter-energy", energy_via_barycenter(x, mu) == energy(d, mu));
    }

    if (opt.with_oracle) check("oracle", cross_validate(x, opt.oracle_tol, oracle_seed));
}

// Deterministic randomized verification sweep: `count` instances per (n, m)
// cell with 1 <= n <= n_max and 2 <= m <= min(m_max, 2^n). Each instance
// derives its generator from (seed, n, m, index), so the result does not
// depend on evaluation order.
inline SweepReport run_sweep(const SweepOptions& opt) {
    SweepReport rep;
    for (std::size_t n = 1; n <= opt.n_max; ++n) {
        const std::size_t cube = n < 63 ? (std::size_t{1} << n) : SIZE_MAX;
        const std::size_t m_hi = std::min(opt.m_max, cube);
        for (std::size_t m = 2; m <= m_hi; ++m) {
            for (std::size_t index = 0; index < opt.count; ++index) {
                const std::uint64_t inst_seed = rng::derive(opt.seed, n, m, index);
                const HammingPointSet x = random_subset(n, m, inst_seed);
                std::mt19937_64 gen(rng::derive(inst_seed, 0xabcdef));
                ++rep.instances;
                const std::string label = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                          " index=" + std::to_string(index);
                sweep_instance(x, gen, opt, inst_seed, rep, label);
            }
        }
    }
    return rep;
}

}  // namespace mcube
