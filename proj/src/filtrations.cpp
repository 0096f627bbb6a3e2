/*
   Copyright 2026 The GRIL Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gril/filtrations.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "gril/error.hpp"

namespace gril {

void AttributedGraph::canonicalize() {
    for (auto& [u, v] : edges) {
        if (u == v) throw InvalidArgument("self loop at vertex " + std::to_string(u));
        if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges.size());
    std::vector<std::pair<VertexId, VertexId>> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    // Keep first occurrences in list order.
    std::vector<bool> taken(sorted.size(), false);
    for (const auto& e : edges) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
        auto k = static_cast<std::size_t>(it - sorted.begin());
        if (!taken[k]) {
            taken[k] = true;
            out.push_back(e);
        }
    }
    edges = std::move(out);
    if (!attributes.empty() && attributes.size() != n) throw InvalidArgument("attribute count differs from vertex count");
}

std::vector<std::size_t> AttributedGraph::degrees() const {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

SimplicialComplex graph_complex(const AttributedGraph& g) {
    SimplicialComplex cx;
    for (std::size_t v = 0; v < g.n; ++v) cx.add(Simplex{static_cast<VertexId>(v)});
    for (const auto& [u, v] : g.edges) cx.add(Simplex{u, v});
    return cx;
}

std::vector<double> hks(const AttributedGraph& g, double t) {
    if (g.n == 0) throw InvalidArgument("hks of an empty graph");
    if (!(t > 0)) throw InvalidArgument("diffusion time must be positive");
    const auto n = static_cast<Eigen::Index>(g.n);
    const auto deg = g.degrees();
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] > 0) lap(v, v) = 1.0;
    }
    for (const auto& [u, v] : g.edges) {
        const double w = -1.0 / std::sqrt(static_cast<double>(deg[u]) * static_cast<double>(deg[v]));
        lap(u, v) = w;
        lap(v, u) = w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
    const Eigen::VectorXd heat = (-t * es.eigenvalues().array()).exp();
    const Eigen::VectorXd h = es.eigenvectors().array().square().matrix() * heat;
    return {h.data(), h.data() + h.size()};
}

std::vector<double> forman_ricci(const AttributedGraph& g) {
    const auto deg = g.degrees();
    std::vector<double> out;
    out.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) out.push_back(4.0 - static_cast<double>(deg[u]) - static_cast<double>(deg[v]));
    return out;
}

std::vector<double> normalized_curvature(const AttributedGraph& g) {
    auto c = forman_ricci(g);
    if (c.empty()) return c;
    auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    const double a = *lo, b = *hi;
    for (double& x : c) x = b > a ? (x - a) / (b - a) : 0.0;
    return c;
}

namespace {

BiFiltration graph_bifiltration(const AttributedGraph& g, std::span<const double> first, const GridSpec& grid) {
    const auto curv = normalized_curvature(g);
    PreBiFiltration pre;
    pre.complex = graph_complex(g);
    for (std::size_t v = 0; v < g.n; ++v) pre.values.push_back({first[v], 0.0});
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        pre.values.push_back({std::max(first[u], first[v]), curv[e]});
    }
    return normalize_and_snap(pre, grid);
}

}  // namespace

BiFiltration hks_rc_bifiltration(const AttributedGraph& g, const GridSpec& grid, double t) {
    const auto h = hks(g, t);
    return graph_bifiltration(g, h, grid);
}

AttributedGraph hourglass_generate(std::size_t n1, std::size_t n2, Traversal traversal, std::uint64_t seed) {
    if (n1 < 4 || n2 < 4) throw InvalidArgument("HourGlass halves need at least 4 nodes");
    AttributedGraph g;
    g.n = n1 + n2;
    auto circulant = [&](std::size_t base, std::size_t m) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t off : {1U, 2U}) {
                g.edges.emplace_back(static_cast<VertexId>(base + i), static_cast<VertexId>(base + (i + off) % m));
            }
        }
    };
    circulant(0, n1);
    circulant(n1, n2);

    const std::size_t up1 = (n1 + 1) / 2, up2 = (n2 + 1) / 2;
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {  // [lo, hi)
        return static_cast<VertexId>(lo + rng() % (hi - lo));
    };
    const std::size_t samples = 2 * g.n;
    for (std::size_t s = 0; s < samples; ++s) g.edges.emplace_back(pick(0, up1), pick(n1 + up2, n1 + n2));
    for (std::size_t s = 0; s < samples; ++s) g.edges.emplace_back(pick(up1, n1), pick(n1, n1 + up2));
    g.canonicalize();

    g.attributes.resize(g.n);
    if (traversal == Traversal::T1) {
        for (std::size_t v = 0; v < g.n; ++v) g.attributes[v] = static_cast<double>(v);
        g.label = 0;
    } else {
        std::size_t x = 0;
        for (std::size_t v = 0; v < up1; ++v) g.attributes[v] = static_cast<double>(x++);
        for (std::size_t v = n1; v < n1 + up2; ++v) g.attributes[v] = static_cast<double>(x++);
        for (std::size_t v = up1; v < n1; ++v) g.attributes[v] = static_cast<double>(x++);
        for (std::size_t v = n1 + up2; v < g.n; ++v) g.attributes[v] = static_cast<double>(x++);
        g.label = 1;
    }
    return g;
}

std::vector<AttributedGraph> hourglass_dataset(std::size_t a, std::size_t b, std::size_t count, std::uint64_t seed) {
    if (a > b) throw InvalidArgument("HourGlass size range is empty");
    std::mt19937_64 rng(seed);
    auto size = [&] { return a + static_cast<std::size_t>(rng() % (b - a + 1)); };
    std::vector<AttributedGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n1 = size(), n2 = size();
        out.push_back(hourglass_generate(n1, n2, i % 2 == 0 ? Traversal::T1 : Traversal::T2, rng()));
    }
    return out;
}

BiFiltration hourglass_bifiltration(const AttributedGraph& g, const GridSpec& grid) {
    if (g.attributes.size() != g.n) throw InvalidArgument("HourGlass bifiltration needs vertex attributes");
    return graph_bifiltration(g, g.attributes, grid);
}

BiFiltration knn_density_bifiltration(const PointCloud& pts, std::size_t alpha, double r_max, const GridSpec& grid) {
    const std::size_t n = pts.size();
    if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
    if (n <= alpha) throw InvalidArgument("point cloud needs more than alpha points");
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            dist[a][b] = dist[b][a] = std::hypot(pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]);
        }
    }
    std::vector<double> density(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<double> row = dist[a];
        row.erase(row.begin() + static_cast<std::ptrdiff_t>(a));
        std::partial_sort(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(alpha), row.end());
        double mean = 0.0;
        for (std::size_t k = 0; k < alpha; ++k) mean += row[k];
        density[a] = 1.0 - std::exp(-mean / static_cast<double>(alpha));
    }

    PreBiFiltration pre;
    for (std::size_t a = 0; a < n; ++a) {
        pre.complex.add(Simplex{static_cast<VertexId>(a)});
        pre.values.push_back({density[a], 0.0});
    }
    auto edge_value = [&](std::size_t a, std::size_t b) -> Value2 {
        return {std::max(density[a], density[b]), 1.0 - std::exp(-dist[a][b])};
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (dist[a][b] > r_max) continue;
            pre.complex.add(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b)});
            pre.values.push_back(edge_value(a, b));
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (dist[a][b] > r_max) continue;
            for (std::size_t c = b + 1; c < n; ++c) {
                if (dist[a][c] > r_max || dist[b][c] > r_max) continue;
                pre.complex.add(Simplex{static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
                Value2 v = edge_value(a, b);
                for (const Value2& w : {edge_value(a, c), edge_value(b, c)}) {
                    v = {std::max(v[0], w[0]), std::max(v[1], w[1])};
                }
                pre.values.push_back(v);
            }
        }
    }
    return normalize_and_snap(pre, grid);
}

}  // namespace gril
