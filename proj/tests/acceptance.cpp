// Acceptance suite: runs each release criterion end to end and prints one
// pass/fail line per criterion. Exit code = number of failed criteria.
//
// The criteria pin the library's headline claims: the worked fixtures, the
// full-cube values M(H_n) = n/2, the tree determinant and inverse-sum
// identities, bit-exact agreement of all four routes on 500 random subsets,
// float-oracle cross-validation, the randomized identity suites, and the
// <b,1> invariance on singular systems. Tolerances and instance counts are
// fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "mcube/analysis.hpp"
#include "mcube/geometry.hpp"
#include "mcube/hamming.hpp"
#include "mcube/mconst.hpp"
#include "mcube/negtype.hpp"
#include "mcube/oracle.hpp"
#include "mcube/rng.hpp"

using namespace mcube;

namespace {

constexpr std::uint64_t kSuiteSeed = 20240718;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

HammingPoint pt(const std::string& bits) { return HammingPoint::parse(bits); }

Rational route_value(const DistMatrix& d) { return mconst_exact_value(d); }

std::vector<Rational> all_route_values(const HammingPointSet& x, const DistMatrix& d,
                                       bool include_inverse) {
    std::vector<Rational> values;
    values.push_back(route_value(d));
    values.push_back(mconst_geometric(x).value);
    values.push_back(mconst_circumcenter(x).mconst.value);
    values.push_back(mconst_reduced(x).value);
    if (include_inverse) values.push_back(mconst_inverse_route(d).value);
    return values;
}

// ---- criterion 1: the two-set fixture with printed inverses ----
Outcome criterion1() {
    Outcome out;
    const HammingPointSet x1({pt("000"), pt("111")});
    const DistMatrix d1 = distance_matrix(x1);
    out.require(inverse(d1.matrix()) ==
                    RatMatrix::from_rows({{0, Rational(1, 3)}, {Rational(1, 3), 0}}),
                "2x2 inverse mismatch");

    const HammingPointSet x2({pt("000"), pt("111"), pt("100")});
    const DistMatrix d2 = distance_matrix(x2);
    const RatMatrix expected_inv =
        RatMatrix::from_rows({{Rational(-1, 3), Rational(1, 6), Rational(1, 2)},
                              {Rational(1, 6), Rational(-1, 12), Rational(1, 4)},
                              {Rational(1, 2), Rational(1, 4), Rational(-3, 4)}});
    out.require(inverse(d2.matrix()) == expected_inv, "3x3 inverse mismatch");

    for (const auto* d : {&d1, &d2}) {
        const RatMatrix inv = inverse(d->matrix());
        Rational total;
        for (std::size_t i = 0; i < inv.rows(); ++i)
            for (std::size_t j = 0; j < inv.cols(); ++j) total += inv(i, j);
        out.require(total == Rational(2, 3), "inverse-entry sum is not 2/3");
    }
    for (const auto* x : {&x1, &x2})
        for (const Rational& v : all_route_values(*x, distance_matrix(*x), true))
            out.require(v == Rational(3, 2), "a route value differs from 3/2");
    return out;
}

// ---- criterion 2: the coplanar fixture with singular D ----
Outcome criterion2() {
    Outcome out;
    const HammingPointSet x1({pt("000"), pt("100"), pt("010")});
    const DistMatrix d1 = distance_matrix(x1);
    const auto b = solve(d1.matrix(), RatVector::ones(3));
    out.require(std::holds_alternative<SolveUnique>(b), "D_{X1} should be invertible");
    out.require(sum(std::get<SolveUnique>(b).solution) == Rational(1),
                "<D^{-1}1,1> is not 1");

    const HammingPointSet x2({pt("000"), pt("100"), pt("010"), pt("110")});
    const DistMatrix d2 = distance_matrix(x2);
    out.require(determinant(d2.matrix()) == Rational(0), "det(D_{X2}) should vanish");
    out.require(route_value(d2) == Rational(1), "Db=1 route value is not 1");
    out.require(mconst_geometric(x2).value == Rational(1), "geometric value is not 1");
    const CircumcenterResult cc = mconst_circumcenter(x2);
    out.require(cc.mconst.value == Rational(1), "circumcenter value is not 1");
    out.require(cc.sphere.radius_squared == Rational(1, 2), "radius^2 is not 1/2");
    return out;
}

// ---- criterion 3: M(H_n) = n/2 for n = 1..6 ----
Outcome criterion3(double& n6_seconds) {
    Outcome out;
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const HammingPointSet cube = full_cube(n);
        const DistMatrix d = distance_matrix(cube);
        const Rational expected(static_cast<long>(n), 2);
        out.require(route_value(d) == expected, "Db=1 route misses n/2 at n=" + std::to_string(n));
        out.require(mconst_geometric(cube).value == expected,
                    "geometric route misses n/2 at n=" + std::to_string(n));
        if (n == 6) n6_seconds = seconds_since(t0);
    }
    out.require(n6_seconds < 30.0, "n=6 exceeded 30 s");
    return out;
}

// ---- criterion 4: tree identities on 50 random trees ----
Outcome criterion4() {
    Outcome out;
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 g(rng::derive(kSuiteSeed, 400, i));
        const std::size_t vc = 2 + rng::uniform_below(g, 12);  // up to 13 vertices
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t v = 1; v < vc; ++v)
            edges.emplace_back(rng::uniform_below(g, v), v);
        const UnweightedTree tree(vc, std::move(edges));
        const HammingPointSet x = tree_to_cube(tree);
        const DistMatrix d = distance_matrix(x);
        const std::size_t k = vc - 1;

        Rational expected_det(mpz_class(static_cast<unsigned long>(k)) << (k - 1), mpz_class(1));
        if (k % 2 == 1) expected_det = -expected_det;
        out.require(determinant(d.matrix()) == expected_det,
                    "Graham-Pollak determinant fails at tree " + std::to_string(i));

        const auto b = solve(d.matrix(), RatVector::ones(x.size()));
        out.require(std::holds_alternative<SolveUnique>(b), "tree D must be invertible");
        out.require(sum(std::get<SolveUnique>(b).solution) == Rational(2, static_cast<long>(k)),
                    "<D^{-1}1,1> != 2/k at tree " + std::to_string(i));
    }
    return out;
}

struct SweepInstance {
    HammingPointSet x;
    DistMatrix d;
    bool singular;
};

std::vector<SweepInstance> make_sweep_corpus() {
    std::vector<SweepInstance> corpus;
    corpus.reserve(500);
    for (int i = 0; i < 500; ++i) {
        std::mt19937_64 g(rng::derive(kSuiteSeed, 500, i));
        const std::size_t n = 1 + rng::uniform_below(g, 8);
        const std::size_t m_hi = std::min<std::size_t>(16, std::size_t{1} << n);
        const std::size_t m = 2 + rng::uniform_below(g, m_hi - 1);
        HammingPointSet x = random_subset(n, m, rng::derive(kSuiteSeed, 501, i));
        DistMatrix d = distance_matrix(x);
        const bool singular = determinant(d.matrix()).is_zero();
        corpus.push_back({std::move(x), std::move(d), singular});
    }
    return corpus;
}

// ---- criterion 5: route agreement and bounds on 500 random subsets ----
Outcome criterion5(const std::vector<SweepInstance>& corpus) {
    Outcome out;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& inst = corpus[i];
        const std::string tag = " at instance " + std::to_string(i);
        const std::size_t n = inst.x.dimension();

        const std::vector<Rational> values =
            all_route_values(inst.x, inst.d, !inst.singular);
        for (const Rational& v : values)
            out.require(v == values.front(), "route disagreement" + tag);

        out.require(values.front() <= Rational(static_cast<long>(n), 2),
                    "M(X) exceeds n/2" + tag);

        if (!inst.singular) {
            const Rational inv_sum = values.front().reciprocal();
            out.require(inv_sum >= Rational(2, static_cast<long>(n)),
                        "<D^{-1}1,1> below 2/n" + tag);
            out.require(inv_sum <= Rational(2), "<D^{-1}1,1> above 2" + tag);
        }
        out.require(strictness_criteria_agree(inst.x), "equivalence fails" + tag);
    }
    return out;
}

// ---- criterion 6: float oracle cross-validation ----
Outcome criterion6(const std::vector<SweepInstance>& corpus) {
    Outcome out;
    std::vector<const SweepInstance*> targets;
    std::vector<SweepInstance> fixture_storage;
    for (const HammingPointSet& x :
         {HammingPointSet({pt("000"), pt("111")}), HammingPointSet({pt("000"), pt("111"), pt("100")}),
          HammingPointSet({pt("000"), pt("100"), pt("010")}),
          HammingPointSet({pt("000"), pt("100"), pt("010"), pt("110")}), full_cube(2),
          full_cube(3)}) {
        DistMatrix d = distance_matrix(x);
        const bool sing = determinant(d.matrix()).is_zero();
        fixture_storage.push_back({x, std::move(d), sing});
    }
    for (const auto& f : fixture_storage) targets.push_back(&f);
    for (std::size_t i = 0; i < 100 && i < corpus.size(); ++i) targets.push_back(&corpus[i]);

    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& inst = *targets[i];
        const std::string tag = " at oracle target " + std::to_string(i);
        std::vector<double> trace;
        const OracleResult r =
            maximize_energy(inst.d, rng::derive(kSuiteSeed, 600, i), kOracleDefaultMaxIters,
                            kOracleDefaultTol, &trace);
        out.require(r.converged, "oracle did not converge" + tag);
        const double exact = route_value(inst.d).to_double();
        out.require(std::abs(r.approx_m - exact) <= 1e-6, "oracle off by more than 1e-6" + tag);
        for (std::size_t s = 1; s < trace.size(); ++s)
            out.require(trace[s] >= trace[s - 1] - 1e-12, "oracle energy decreased" + tag);
    }
    return out;
}

// ---- criterion 7: the three identity suites, 200 instances each ----
Outcome criterion7() {
    Outcome out;
    for (int i = 0; i < 200; ++i) {
        std::mt19937_64 g(rng::derive(kSuiteSeed, 700, i));
        auto rat = [&g] {
            const long num = static_cast<long>(rng::uniform_below(g, 19)) - 9;
            const long den = static_cast<long>(rng::uniform_below(g, 9)) + 1;
            return Rational(num, den);
        };
        const std::size_t pts = 1 + rng::uniform_below(g, 6);
        const std::size_t dim = 1 + rng::uniform_below(g, 6);
        std::vector<RatVector> us;
        for (std::size_t p = 0; p < pts; ++p) {
            RatVector v(dim);
            for (std::size_t c = 0; c < dim; ++c) v[c] = rat();
            us.push_back(std::move(v));
        }
        RatVector alpha(pts);
        Rational tail(1);
        for (std::size_t p = 0; p + 1 < pts; ++p) {
            alpha[p] = rat();
            tail -= alpha[p];
        }
        alpha[pts - 1] = tail;
        RatVector u(dim);
        for (std::size_t c = 0; c < dim; ++c) u[c] = rat();
        out.require(parallel_axis_identity(us, alpha, u),
                    "dispersion identity fails at " + std::to_string(i));
    }

    for (int i = 0; i < 200; ++i) {
        std::mt19937_64 g(rng::derive(kSuiteSeed, 701, i));
        const std::size_t n = 1 + rng::uniform_below(g, 6);
        const std::size_t m_hi = std::min<std::size_t>(8, std::size_t{1} << n);
        const std::size_t m = 2 + rng::uniform_below(g, m_hi - 1);
        const HammingPointSet x = random_subset(n, m, rng::derive(kSuiteSeed, 702, i));
        const DistMatrix d = distance_matrix(x);
        RatVector w(m);
        Rational tail(1);
        for (std::size_t p = 0; p + 1 < m; ++p) {
            const long num = static_cast<long>(rng::uniform_below(g, 19)) - 9;
            const long den = static_cast<long>(rng::uniform_below(g, 9)) + 1;
            w[p] = Rational(num, den);
            tail -= w[p];
        }
        w[m - 1] = tail;
        const Measure mu(w);
        const std::size_t at = rng::uniform_below(g, m);
        const PotentialSplit split = potential_decomposition(x, mu, at);
        out.require(split.barycentric_dist_squared + split.half_energy == potential(d, mu, at),
                    "potential decomposition fails at " + std::to_string(i));
        out.require(energy_via_barycenter(x, mu) == energy(d, mu),
                    "barycenter energy identity fails at " + std::to_string(i));
    }
    return out;
}

// ---- criterion 8: <b,1> invariance on every singular sweep instance ----
Outcome criterion8(const std::vector<SweepInstance>& corpus) {
    Outcome out;
    std::size_t singular_seen = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (!corpus[i].singular) continue;
        ++singular_seen;
        const auto res = solve(corpus[i].d.matrix(), RatVector::ones(corpus[i].d.size()));
        const auto* p = std::get_if<SolveParticular>(&res);
        out.require(p != nullptr, "singular system must still be solvable at instance " +
                                      std::to_string(i));
        if (p == nullptr) continue;
        for (const RatVector& v : p->null_basis)
            out.require(sum(v) == Rational(0),
                        "kernel vector not orthogonal to 1 at instance " + std::to_string(i));
    }
    out.require(singular_seen > 0, "corpus contained no singular instance");
    out.detail = out.ok ? std::to_string(singular_seen) + " singular instances" : out.detail;
    return out;
}

int report(int id, const std::string& label, const Outcome& out, double seconds,
           double budget = 0.0) {
    Outcome final = out;
    if (budget > 0.0 && seconds > budget) {
        final.ok = false;
        final.detail = "exceeded " + std::to_string(budget) + " s budget";
    }
    std::ostringstream line;
    line << "criterion " << id << " [" << label << "]: " << (final.ok ? "PASS" : "FAIL");
    if (!final.ok)
        line << " - " << final.detail;
    else if (!final.detail.empty())
        line << " (" << final.detail << ")";
    line.precision(2);
    line << std::fixed << " [" << seconds << " s]";
    std::cout << line.str() << "\n";
    return final.ok ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    auto timed = [&](int id, const std::string& label, auto&& fn, double budget = 0.0) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome out = fn();
        failures += report(id, label, out, seconds_since(t0), budget);
    };

    timed(1, "printed inverses, sums 2/3, M = 3/2 on every route", criterion1, 1.0);
    timed(2, "singular fixture: det 0, M = 1, radius^2 = 1/2", criterion2, 1.0);

    {
        const auto t0 = std::chrono::steady_clock::now();
        double n6_seconds = 0.0;
        const Outcome out = criterion3(n6_seconds);
        std::ostringstream detail;
        detail.precision(2);
        detail << std::fixed << "n=6 took " << n6_seconds << " s";
        Outcome with_detail = out;
        if (with_detail.ok) with_detail.detail = detail.str();
        failures += report(3, "M(H_n) = n/2 for n = 1..6", with_detail, seconds_since(t0));
    }

    timed(4, "tree identities on 50 random trees", criterion4, 30.0);

    const auto corpus = make_sweep_corpus();
    timed(5, "route agreement and bounds on 500 random subsets",
          [&] { return criterion5(corpus); }, 300.0);
    timed(6, "oracle cross-validation on fixtures and 100 instances",
          [&] { return criterion6(corpus); });
    timed(7, "identity suites, 200 randomized instances each", criterion7);
    timed(8, "kernel vectors orthogonal to 1 on singular instances",
          [&] { return criterion8(corpus); });

    if (failures == 0)
        std::cout << "acceptance: all 8 criteria passed\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures;
}
