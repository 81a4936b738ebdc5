#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcube/errors.hpp"
#include "mcube/linalg.hpp"
#include "mcube/rng.hpp"

namespace mcube {

inline constexpr std::size_t kDefaultCubeCap = 10;

// A vertex of the Hamming cube {0,1}^n.
class HammingPoint {
public:
    explicit HammingPoint(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        if (bits_.empty()) throw InvalidArgumentError("point of dimension zero");
        for (auto b : bits_)
            if (b > 1) throw InvalidArgumentError("point coordinates must be 0 or 1");
    }

    // Coordinate 0 is the most significant bit of the index.
    static HammingPoint from_index(std::size_t n, std::uint64_t index) {
        std::vector<std::uint8_t> bits(n);
        for (std::size_t k = 0; k < n; ++k)
            bits[k] = static_cast<std::uint8_t>((index >> (n - 1 - k)) & 1U);
        return HammingPoint(std::move(bits));
    }

    static HammingPoint parse(const std::string& text) {
        std::vector<std::uint8_t> bits;
        bits.reserve(text.size());
        for (char ch : text) {
            if (ch != '0' && ch != '1')
                throw InvalidArgumentError(std::string("invalid coordinate character '") + ch +
                                           "'");
            bits.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return HammingPoint(std::move(bits));
    }

    std::size_t dimension() const { return bits_.size(); }
    int bit(std::size_t i) const { return bits_[i]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
        return s;
    }

    RatVector to_vector() const {
        RatVector v(bits_.size());
        for (std::size_t i = 0; i < bits_.size(); ++i) v[i] = static_cast<int>(bits_[i]);
        return v;
    }

    friend bool operator==(const HammingPoint& a, const HammingPoint& b) {
        return a.bits_ == b.bits_;
    }
    friend bool operator<(const HammingPoint& a, const HammingPoint& b) {
        return a.bits_ < b.bits_;
    }

private:
    std::vector<std::uint8_t> bits_;
};

inline std::size_t hamming_distance(const HammingPoint& p, const HammingPoint& q) {
    if (p.dimension() != q.dimension())
        throw DimensionMismatchError("hamming_distance: dimension mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < p.dimension(); ++i) d += static_cast<std::size_t>(p.bit(i) != q.bit(i));
    return d;
}

// An ordered set of at least two distinct points sharing one ambient dimension.
class HammingPointSet {
public:
    explicit HammingPointSet(std::vector<HammingPoint> points) : points_(std::move(points)) {
        if (points_.size() < 2) throw InvalidArgumentError("point set needs at least two points");
        n_ = points_[0].dimension();
        std::set<std::vector<std::uint8_t>> seen;
        for (const auto& p : points_) {
            if (p.dimension() != n_)
                throw DimensionMismatchError("point set mixes ambient dimensions");
            if (!seen.insert(p.bits()).second)
                throw InvalidArgumentError("duplicate point " + p.to_string());
        }
    }

    std::size_t dimension() const { return n_; }
    std::size_t size() const { return points_.size(); }
    const HammingPoint& point(std::size_t i) const { return points_[i]; }
    const std::vector<HammingPoint>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::size_t n_ = 0;
    std::vector<HammingPoint> points_;
};

// Symmetric rational matrix of pairwise distances: zero diagonal, positive
// off-diagonal entries, triangle inequality. Checked on every construction.
class DistMatrix {
public:
    explicit DistMatrix(RatMatrix entries) : d_(std::move(entries)) {
        if (!d_.is_square()) throw DimensionMismatchError("distance matrix must be square");
        const std::size_t m = d_.rows();
        if (m < 2) throw InvalidArgumentError("distance matrix needs at least two points");
        for (std::size_t i = 0; i < m; ++i) {
            if (!d_(i, i).is_zero()) throw InvalidArgumentError("nonzero diagonal entry");
            for (std::size_t j = i + 1; j < m; ++j) {
                if (d_(i, j) != d_(j, i)) throw NotSymmetricError("asymmetric distance matrix");
                if (d_(i, j).sign() <= 0)
                    throw InvalidArgumentError("off-diagonal distances must be positive");
            }
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                for (std::size_t k = 0; k < m; ++k)
                    if (d_(i, j) > d_(i, k) + d_(k, j))
                        throw InvalidArgumentError("triangle inequality violated");
    }

    std::size_t size() const { return d_.rows(); }
    const RatMatrix& matrix() const { return d_; }
    const Rational& entry(std::size_t i, std::size_t j) const { return d_(i, j); }

    Rational min_nonzero() const {
        Rational best = d_(0, 1);
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (d_(i, j) < best) best = d_(i, j);
        return best;
    }

    Rational diameter() const {
        Rational best = d_(0, 1);
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (d_(i, j) > best) best = d_(i, j);
        return best;
    }

    Rational max_row_sum() const {
        Rational best;
        for (std::size_t i = 0; i < size(); ++i) {
            Rational s;
            for (std::size_t j = 0; j < size(); ++j) s += d_(i, j);
            if (i == 0 || s > best) best = s;
        }
        return best;
    }

private:
    friend DistMatrix distance_matrix(const HammingPointSet&);
    struct Checked {};
    DistMatrix(RatMatrix entries, Checked) : d_(std::move(entries)) {}

    RatMatrix d_;
};

// Pairwise Hamming distances; the triangle inequality is verified on the
// integer distances before the rational matrix is assembled.
inline DistMatrix distance_matrix(const HammingPointSet& x) {
    const std::size_t m = x.size();
    std::vector<std::size_t> d(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            d[i * m + j] = d[j * m + i] = hamming_distance(x.point(i), x.point(j));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                if (d[i * m + j] > d[i * m + k] + d[k * m + j])
                    throw Error("distance_matrix: triangle inequality violated");
    RatMatrix r(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) r(i, j) = d[i * m + j];
    return DistMatrix(std::move(r), DistMatrix::Checked{});
}

// All 2^n points in lexicographic order, coordinate 0 most significant.
inline HammingPointSet full_cube(std::size_t n, std::size_t cap = kDefaultCubeCap) {
    if (n < 1) throw InvalidArgumentError("cube dimension must be at least 1");
    if (n > cap)
        throw InvalidArgumentError("cube dimension " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(cap));
    std::vector<HammingPoint> pts;
    pts.reserve(std::size_t{1} << n);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx)
        pts.push_back(HammingPoint::from_index(n, idx));
    return HammingPointSet(std::move(pts));
}

// Connected acyclic graph on vertices 0..vertexCount-1.
class UnweightedTree {
public:
    UnweightedTree(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)) {
        if (vertex_count_ < 2) throw NotATreeError("tree needs at least two vertices");
        if (edges_.size() != vertex_count_ - 1)
            throw NotATreeError("tree on " + std::to_string(vertex_count_) + " vertices needs " +
                                std::to_string(vertex_count_ - 1) + " edges");
        for (const auto& [u, v] : edges_) {
            if (u >= vertex_count_ || v >= vertex_count_)
                throw NotATreeError("edge endpoint out of range");
            if (u == v) throw NotATreeError("self-loop");
        }
        if (distances_from(0).size() != vertex_count_) throw NotATreeError("graph not connected");
    }

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

    // BFS path lengths from `root`; throws if some vertex is unreachable.
    std::vector<std::size_t> distances_from(std::size_t root) const {
        std::vector<std::vector<std::size_t>> adj(vertex_count_);
        for (const auto& [u, v] : edges_) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::vector<std::size_t> dist(vertex_count_, SIZE_MAX);
        std::vector<std::size_t> queue{root};
        dist[root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v : adj[u]) {
                if (dist[v] != SIZE_MAX) continue;
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
        for (std::size_t v = 0; v < vertex_count_; ++v)
            if (dist[v] == SIZE_MAX) throw NotATreeError("graph not connected");
        return dist;
    }

private:
    std::size_t vertex_count_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Canonical isometric embedding of an unweighted tree into H_{|edges|}:
// vertex v maps to the indicator of the edges on the path from vertex 0,
// with coordinates indexed by input edge order. Hamming distances then equal
// tree path lengths, which is re-verified before returning.
inline HammingPointSet tree_to_cube(const UnweightedTree& t) {
    const std::size_t vc = t.vertex_count();
    const std::size_t n = t.edges().size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vc);  // (neighbor, edge idx)
    for (std::size_t e = 0; e < n; ++e) {
        const auto& [u, v] = t.edges()[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    std::vector<std::vector<std::uint8_t>> bits(vc);
    std::vector<bool> visited(vc, false);
    std::vector<std::size_t> queue{0};
    bits[0].assign(n, 0);
    visited[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        for (const auto& [v, e] : adj[u]) {
            if (visited[v]) continue;
            visited[v] = true;
            bits[v] = bits[u];
            bits[v][e] = 1;
            queue.push_back(v);
        }
    }
    std::vector<HammingPoint> pts;
    pts.reserve(vc);
    for (auto& b : bits) pts.push_back(HammingPoint(std::move(b)));
    HammingPointSet x(std::move(pts));
    for (std::size_t u = 0; u < vc; ++u) {
        const auto dist = t.distances_from(u);
        for (std::size_t v = 0; v < vc; ++v)
            if (hamming_distance(x.point(u), x.point(v)) != dist[v])
                throw Error("tree embedding does not reproduce the path metric");
    }
    return x;
}

// m distinct points of H_n drawn without replacement; identical (n, m, seed)
// always yields the identical set, on every platform.
inline HammingPointSet random_subset(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n < 1 || n >= 64) throw InvalidArgumentError("random_subset: dimension out of range");
    const std::uint64_t total = std::uint64_t{1} << n;
    if (m < 2 || m > total) throw InvalidArgumentError("random_subset: point count out of range");
    std::mt19937_64 gen(rng::derive(seed, n, m));
    std::vector<HammingPoint> pts;
    pts.reserve(m);
    if (n <= 24) {
        // Partial Fisher-Yates over all cube indices: unbiased, no rejection.
        std::vector<std::uint64_t> idx(total);
        for (std::uint64_t i = 0; i < total; ++i) idx[i] = i;
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t j = i + rng::uniform_below(gen, total - i);
            std::swap(idx[i], idx[j]);
            pts.push_back(HammingPoint::from_index(n, idx[i]));
        }
    } else {
        std::set<std::uint64_t> chosen;
        while (chosen.size() < m) {
            const std::uint64_t v = rng::uniform_below(gen, total);
            if (chosen.insert(v).second) pts.push_back(HammingPoint::from_index(n, v));
        }
    }
    return HammingPointSet(std::move(pts));
}

namespace detail {

inline bool skippable_line(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;  // blank
}

inline std::string trimmed(const std::string& line) {
    std::size_t a = 0, b = line.size();
    while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
    return line.substr(a, b - a);
}

}  // namespace detail

// Point-set text format: one point per line as a string of '0'/'1'
// characters, all lines equal length; blank lines and '#' comments ignored.
inline HammingPointSet parse_point_set(std::istream& in) {
    std::vector<HammingPoint> pts;
    std::string line;
    std::size_t lineno = 0;
    std::size_t first_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable_line(line)) continue;
        const std::string text = detail::trimmed(line);
        HammingPoint p = [&] {
            try {
                return HammingPoint::parse(text);
            } catch (const InvalidArgumentError& e) {
                throw ParseError(lineno, e.what());
            }
        }();
        if (!pts.empty() && p.dimension() != pts[0].dimension())
            throw ParseError(lineno, "point length " + std::to_string(p.dimension()) +
                                         " differs from line " + std::to_string(first_line));
        if (pts.empty()) first_line = lineno;
        for (const auto& q : pts)
            if (q == p) throw ParseError(lineno, "duplicate point " + p.to_string());
        pts.push_back(std::move(p));
    }
    if (pts.size() < 2) throw ParseError(lineno, "need at least two points");
    return HammingPointSet(std::move(pts));
}

// Tree text format: first significant line "tree <vertexCount>", then one
// edge per line as "u v" with 0-based vertex indices.
inline UnweightedTree parse_tree(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t vertex_count = 0;
    bool have_header = false;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::skippable_line(line)) continue;
        const std::string text = detail::trimmed(line);
        if (!have_header) {
            if (text.rfind("tree ", 0) != 0) throw ParseError(lineno, "expected 'tree <count>'");
            try {
                vertex_count = std::stoul(text.substr(5));
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed vertex count in '" + text + "'");
            }
            have_header = true;
            continue;
        }
        std::size_t pos = 0;
        unsigned long u = 0, v = 0;
        try {
            u = std::stoul(text, &pos);
            v = std::stoul(text.substr(pos));
        } catch (const std::exception&) {
            throw ParseError(lineno, "malformed edge '" + text + "'");
        }
        edges.emplace_back(u, v);
    }
    if (!have_header) throw ParseError(lineno, "missing 'tree <count>' header");
    try {
        return UnweightedTree(vertex_count, std::move(edges));
    } catch (const NotATreeError& e) {
        throw ParseError(lineno, e.what());
    }
}

}  // namespace mcube
