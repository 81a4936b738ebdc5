#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "mcube/geometry.hpp"
#include "mcube/hamming.hpp"
#include "mcube/mconst.hpp"
#include "mcube/negtype.hpp"
#include "mcube/oracle.hpp"

namespace mcube {

struct AnalysisOptions {
    bool with_oracle = true;
    std::uint64_t oracle_seed = 1;
    std::size_t oracle_max_iters = kOracleDefaultMaxIters;
    double oracle_value_tol = 1e-6;
};

// Everything the CLI reports about one point set: the negative-type verdict,
// determinant and inverse-entry sum, M(X) by every applicable route, the
// sphere witness, the float oracle, and the bound checks.
struct AnalysisReport {
    std::size_t n = 0;
    std::size_t m = 0;
    NegTypeVerdict verdict{false, false, std::nullopt};
    bool affine_independent = false;
    Rational det_d;
    std::optional<Rational> dinv_sum;        // absent when D is singular
    std::optional<Rational> route_inverse;   // absent when D is singular
    Rational route_solveb;
    Rational route_geometric;
    Rational route_circumcenter;
    Rational route_reduced;
    bool routes_agree = false;
    std::optional<SphereWitness> sphere;
    std::optional<OracleResult> oracle;
    bool oracle_ok = true;  // |approxM - exact| within tolerance and converged
    bool bounds_ok = false;

    // Tree-identity fields, present only for tree analyses.
    std::optional<Rational> det_expected;
    bool det_ok = true;
    std::optional<Rational> dinv_sum_expected;
    bool dinv_sum_ok = true;

    // Full agreement: drives exit code 0 vs 2.
    bool consistent() const {
        return routes_agree && bounds_ok && verdict.is_negative_type &&
               verdict.is_strict == affine_independent &&
               dinv_sum.has_value() == affine_independent &&
               det_d.is_zero() != affine_independent && oracle_ok && det_ok && dinv_sum_ok;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["input"] = {{"n", n}, {"m", m}};
        nlohmann::ordered_json neg;
        neg["isNegativeType"] = verdict.is_negative_type;
        neg["isStrict"] = verdict.is_strict;
        if (verdict.witness.has_value()) {
            nlohmann::ordered_json w = nlohmann::ordered_json::array();
            for (const Rational& c : *verdict.witness) w.push_back(c.to_string());
            neg["witness"] = std::move(w);
        } else {
            neg["witness"] = nullptr;
        }
        j["negativeType"] = std::move(neg);
        j["affinelyIndependent"] = affine_independent;
        j["detD"] = det_d.to_string();
        j["dinvSum"] = dinv_sum.has_value() ? dinv_sum->to_string() : "singular";
        nlohmann::ordered_json routes;
        routes["inverseSum"] =
            route_inverse.has_value() ? route_inverse->to_string() : "singular";
        routes["solveB"] = route_solveb.to_string();
        routes["geometric"] = route_geometric.to_string();
        routes["circumcenter"] = route_circumcenter.to_string();
        routes["reduced"] = route_reduced.to_string();
        j["mconst"] = std::move(routes);
        j["routesAgree"] = routes_agree;
        if (sphere.has_value()) {
            nlohmann::ordered_json s;
            nlohmann::ordered_json center = nlohmann::ordered_json::array();
            for (const Rational& c : sphere->center) center.push_back(c.to_string());
            s["center"] = std::move(center);
            s["radiusSquared"] = sphere->radius_squared.to_string();
            j["sphere"] = std::move(s);
        } else {
            j["sphere"] = nullptr;
        }
        if (oracle.has_value()) {
            j["oracle"] = {{"approxM", oracle->approx_m}, {"converged", oracle->converged}};
        } else {
            j["oracle"] = nullptr;
        }
        j["boundsOk"] = bounds_ok;
        if (det_expected.has_value()) {
            j["detExpected"] = det_expected->to_string();
            j["detOk"] = det_ok;
            j["dinvSumExpected"] = dinv_sum_expected->to_string();
            j["dinvSumOk"] = dinv_sum_ok;
        }
        return j;
    }
};

// Runs every applicable exact route plus the float oracle on one point set.
inline AnalysisReport analyze(const HammingPointSet& x, const AnalysisOptions& opt = {}) {
    AnalysisReport rep;
    rep.n = x.dimension();
    rep.m = x.size();

    const DistMatrix d = distance_matrix(x);
    rep.verdict = check_negative_type(d);
    rep.affine_independent = affinely_independent(x);
    rep.det_d = determinant(d.matrix());

    const SolveBOutcome solveb = mconst_solveb_route(d);
    const auto* exact = std::get_if<MConstResult>(&solveb);
    if (exact == nullptr)
        throw DegenerateError("M-constant infinite or undefined; not a cube subset");
    rep.route_solveb = exact->value;

    if (!rep.det_d.is_zero()) {
        const MConstResult inv = mconst_inverse_route(d);
        rep.route_inverse = inv.value;
        rep.dinv_sum = inv.value.reciprocal();
    }

    rep.route_geometric = mconst_geometric(x).value;
    CircumcenterResult cc = mconst_circumcenter(x);
    rep.route_circumcenter = cc.mconst.value;
    rep.sphere = std::move(cc.sphere);
    rep.route_reduced = mconst_reduced(x).value;

    rep.routes_agree = rep.route_solveb == rep.route_geometric &&
                       rep.route_solveb == rep.route_circumcenter &&
                       rep.route_solveb == rep.route_reduced &&
                       (!rep.route_inverse.has_value() || rep.route_solveb == *rep.route_inverse);

    rep.bounds_ok = check_bounds(x);

    if (opt.with_oracle) {
        rep.oracle = maximize_energy(d, opt.oracle_seed, opt.oracle_max_iters);
        rep.oracle_ok =
            rep.oracle->converged &&
            std::abs(rep.oracle->approx_m - rep.route_solveb.to_double()) <= opt.oracle_value_tol;
    }
    return rep;
}

// Tree analysis: embed into the cube, analyze, and check the two exact tree
// identities det(D) = (-1)^k k 2^{k-1} (Graham-Pollak) and <D^{-1}1,1> = 2/k.
inline AnalysisReport analyze_tree(const UnweightedTree& t, const AnalysisOptions& opt = {}) {
    const HammingPointSet x = tree_to_cube(t);
    AnalysisReport rep = analyze(x, opt);

    const std::size_t k = t.edges().size();
    Rational det_expected(mpz_class(static_cast<unsigned long>(k)) << (k - 1), mpz_class(1));
    if (k % 2 == 1) det_expected = -det_expected;
    rep.det_expected = det_expected;
    rep.det_ok = rep.det_d == det_expected;

    const Rational dinv_expected(2, static_cast<long>(k));
    rep.dinv_sum_expected = dinv_expected;
    rep.dinv_sum_ok = rep.dinv_sum.has_value() && *rep.dinv_sum == dinv_expected;
    return rep;
}

}  // namespace mcube
