#pragma once

// Shared fixtures and independent test oracles. Everything here stays
// deliberately naive (cofactor expansion, minor enumeration, BFS) so the
// library is checked against a second, unrelated code path.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mcube/hamming.hpp"
#include "mcube/linalg.hpp"
#include "mcube/rng.hpp"

namespace fixtures {

inline mcube::HammingPoint pt(const std::string& bits) { return mcube::HammingPoint::parse(bits); }

// {000, 111}: two antipodal points of H_3 at distance 3.
inline mcube::HammingPointSet antipodal_pair() {
    return mcube::HammingPointSet({pt("000"), pt("111")});
}

// {000, 111, 100}: the antipodal pair plus a neighbor; affinely independent.
inline mcube::HammingPointSet antipodal_plus_neighbor() {
    return mcube::HammingPointSet({pt("000"), pt("111"), pt("100")});
}

// {000, 100, 010}: a right triangle in the z = 0 plane; affinely independent.
inline mcube::HammingPointSet right_triangle() {
    return mcube::HammingPointSet({pt("000"), pt("100"), pt("010")});
}

// {000, 100, 010, 110}: the unit square; affinely dependent, singular D.
inline mcube::HammingPointSet unit_square() {
    return mcube::HammingPointSet({pt("000"), pt("100"), pt("010"), pt("110")});
}

// Path metric of the complete bipartite graph K_{2,3}: a valid metric that
// is not of 1-negative type.
inline mcube::DistMatrix k23_metric() {
    using mcube::Rational;
    mcube::RatMatrix d(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            if (i == j) continue;
            const bool left_i = i < 2, left_j = j < 2;
            d(i, j) = (left_i == left_j) ? Rational(2) : Rational(1);
        }
    return mcube::DistMatrix(std::move(d));
}

}  // namespace fixtures

namespace oracle {

// Determinant by cofactor expansion along the first row; O(n!) and clearly
// correct, for cross-checking the Bareiss path at sizes <= 5.
inline mcube::Rational cofactor_determinant(const mcube::RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    mcube::Rational det;
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col).is_zero()) continue;
        mcube::RatMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        const mcube::Rational term = m(0, col) * cofactor_determinant(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

// PSD oracle: a symmetric matrix is PSD iff every principal minor is >= 0.
// Enumerates all 2^n - 1 principal submatrices; usable up to n ~ 6.
inline bool psd_by_principal_minors(const mcube::RatMatrix& s) {
    const std::size_t n = s.rows();
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1U << i)) idx.push_back(i);
        mcube::RatMatrix sub(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = s(idx[a], idx[b]);
        if (cofactor_determinant(sub).sign() < 0) return false;
    }
    return true;
}

}  // namespace oracle

namespace oracle {

// Runs fn and reports the line number of the ParseError it throws (0 if none).
template <typename Fn>
inline std::size_t parse_error_line(Fn&& fn) {
    try {
        fn();
    } catch (const mcube::ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace oracle

namespace gen {

// Uniform random recursive tree: vertex i >= 1 attaches to a uniform
// earlier vertex. Deterministic for a fixed seed.
inline mcube::UnweightedTree random_tree(std::size_t vertex_count, std::uint64_t seed) {
    std::mt19937_64 g(mcube::rng::derive(seed, vertex_count, 0x7ee));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < vertex_count; ++v)
        edges.emplace_back(mcube::rng::uniform_below(g, v), v);
    return mcube::UnweightedTree(vertex_count, std::move(edges));
}

inline mcube::Rational small_rational(std::mt19937_64& g) {
    const long num = static_cast<long>(mcube::rng::uniform_below(g, 19)) - 9;
    const long den = static_cast<long>(mcube::rng::uniform_below(g, 9)) + 1;
    return mcube::Rational(num, den);
}

inline mcube::RatVector small_vector(std::mt19937_64& g, std::size_t size) {
    mcube::RatVector v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = small_rational(g);
    return v;
}

inline mcube::RatMatrix small_matrix(std::mt19937_64& g, std::size_t rows, std::size_t cols) {
    mcube::RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = mcube::Rational(static_cast<long>(mcube::rng::uniform_below(g, 11)) - 5);
    return m;
}

// random_subset with the point count clamped to the cube size.
inline mcube::HammingPointSet random_subset_clamped(std::size_t n, std::size_t m,
                                                    std::uint64_t seed) {
    const std::size_t cube = std::size_t{1} << n;
    return mcube::random_subset(n, std::min(m, cube), seed);
}

// Random mass-one weights: the last entry balances the rest.
inline mcube::RatVector mass_one_weights(std::mt19937_64& g, std::size_t m) {
    mcube::RatVector w(m);
    mcube::Rational tail(1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        w[i] = small_rational(g);
        tail -= w[i];
    }
    w[m - 1] = tail;
    return w;
}

}  // namespace gen
