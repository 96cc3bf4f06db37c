/**
 * @brief Simple undirected graphs, Cayley and Cartesian-product builders,
 * and short-cycle detection.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcover/codec.hpp"
#include "pcover/groups.hpp"

namespace pcover {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
  public:
    Graph() = default;

    /// Builds from an undirected edge list; duplicates collapse, self-loops throw.
    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            adjacency_[u].push_back(v);
            adjacency_[v].push_back(u);
        }
        for (auto& nbrs : adjacency_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
    }

    Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

    [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& nbrs : adjacency_) twice += nbrs.size();
        return twice / 2;
    }
    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

    [[nodiscard]] bool has_edge(VertexId u, VertexId v) const {
        const auto& nbrs = adjacency_.at(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    /// Regular degree, or nullopt when degrees differ (or the graph is empty).
    [[nodiscard]] std::optional<std::size_t> regular_degree() const {
        if (adjacency_.empty()) return std::nullopt;
        const auto d = adjacency_.front().size();
        for (const auto& nbrs : adjacency_)
            if (nbrs.size() != d) return std::nullopt;
        return d;
    }

    /// Edges {u, v} with u < v in ascending lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (VertexId u = 0; u < adjacency_.size(); ++u)
            for (auto v : adjacency_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Re-checks the representation invariants: sorted, loop-free, symmetric.
    [[nodiscard]] bool audit() const {
        for (VertexId u = 0; u < adjacency_.size(); ++u) {
            const auto& nbrs = adjacency_[u];
            if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
            if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) return false;
            for (auto v : nbrs) {
                if (v == u || v >= adjacency_.size() || !has_edge(v, u)) return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool is_connected() const {
        if (adjacency_.empty()) return true;
        std::vector<bool> seen(adjacency_.size(), false);
        std::vector<VertexId> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : adjacency_[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        return reached == adjacency_.size();
    }

    /// Induced subgraph on @p vertices (sorted ascending, distinct); vertex k of
    /// the result is vertices[k].
    [[nodiscard]] Graph induced_subgraph(std::span<const VertexId> vertices) const {
        if (!std::is_sorted(vertices.begin(), vertices.end()) ||
            std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
            throw std::invalid_argument("induced_subgraph: vertices must be sorted and distinct");
        }
        auto local = [&](VertexId v) -> std::optional<VertexId> {
            auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
            if (it == vertices.end() || *it != v) return std::nullopt;
            return static_cast<VertexId>(it - vertices.begin());
        };
        std::vector<Edge> edges;
        for (VertexId i = 0; i < vertices.size(); ++i) {
            for (auto w : neighbors(vertices[i])) {
                if (auto j = local(w); j && i < *j) edges.emplace_back(i, *j);
            }
        }
        return Graph(vertices.size(), edges);
    }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::vector<VertexId>> adjacency_;
};

/// Edge-list text: "n m", then "u v" per edge with u < v, ascending, newline-terminated.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

/// Cay(G, S): {g, h} is an edge iff g h^{-1} is in S. Throws if S contains the
/// identity or is not closed under inverses.
template <FiniteGroup G>
Graph cayley(const G& group, std::span<const typename G::element_type> connection) {
    const auto e = group.identity();
    for (const auto& s : connection) {
        if (s == e) throw std::invalid_argument("cayley: connection set contains the identity");
        const auto si = group.inv(s);
        if (std::find(connection.begin(), connection.end(), si) == connection.end()) {
            throw std::invalid_argument("cayley: connection set is not closed under inverses");
        }
    }
    std::vector<Edge> edges;
    edges.reserve(group.order() * connection.size());
    for (std::size_t i = 0; i < group.order(); ++i) {
        const auto h = group.element(i);
        for (const auto& s : connection) {
            const auto g = group.mul(s, h);
            edges.emplace_back(group.index_of(g), static_cast<VertexId>(i));
        }
    }
    return Graph(group.order(), edges);
}

template <FiniteGroup G>
Graph cayley(const G& group, const std::vector<typename G::element_type>& connection) {
    return cayley(group, std::span<const typename G::element_type>(connection));
}

/// X □ Y with vertex (x, y) at id x * |Y| + y.
inline Graph cartesian_product(const Graph& x, const Graph& y) {
    const std::size_t ny = y.vertex_count();
    std::vector<Edge> edges;
    for (VertexId a = 0; a < x.vertex_count(); ++a) {
        for (VertexId b = 0; b < ny; ++b) {
            const auto id = static_cast<VertexId>(a * ny + b);
            for (auto b2 : y.neighbors(b))
                if (b < b2) edges.emplace_back(id, static_cast<VertexId>(a * ny + b2));
            for (auto a2 : x.neighbors(a))
                if (a < a2) edges.emplace_back(id, static_cast<VertexId>(a2 * ny + b));
        }
    }
    return Graph(x.vertex_count() * ny, edges);
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

/// Q_d as Cay(Z_2^d, {e_i}); vertex id is the binary number x_1 ... x_d.
inline Graph hypercube(std::size_t d) {
    const ElementaryAbelianGroup group(Prime(2), d);
    std::vector<ZpVector> basis;
    for (std::size_t i = 0; i < d; ++i) basis.push_back(ZpVector::basis(Prime(2), d, i));
    return cayley(group, basis);
}

/// Shortest-cycle length, or nullopt when no cycle of length <= cap exists.
/// Per-root BFS truncated at depth ceil(cap / 2).
inline std::optional<std::size_t> girth(const Graph& g, std::size_t cap) {
    if (cap < 3) throw std::invalid_argument("girth cap must be at least 3");
    const std::size_t depth_limit = (cap + 1) / 2;
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.vertex_count();

    std::size_t best = unseen;
    std::vector<std::size_t> dist(n, unseen);
    std::vector<VertexId> parent(n, 0);
    std::vector<VertexId> touched;
    std::deque<VertexId> queue;

    for (VertexId root = 0; root < n; ++root) {
        for (auto v : touched) dist[v] = unseen;
        touched.clear();
        queue.clear();
        dist[root] = 0;
        parent[root] = root;
        touched.push_back(root);
        queue.push_back(root);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            // No cycle through this root can beat best once 2 * dist + 1 >= best.
            if (2 * dist[u] + 1 >= best) break;
            for (auto w : g.neighbors(u)) {
                if (dist[w] == unseen) {
                    if (dist[u] < depth_limit) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push_back(w);
                        queue.push_back(w);
                    }
                } else if (parent[u] != w && parent[w] != u) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best > cap) return std::nullopt;
    return best;
}

/// Four vertices a-b-c-d-a forming a 4-cycle, if any.
inline std::optional<std::vector<VertexId>> find_4cycle(const Graph& g) {
    const std::size_t n = g.vertex_count();
    // via[x] = 1 + middle vertex of the first 2-path u - w - x seen from the current u.
    std::vector<VertexId> via(n, 0);
    std::vector<VertexId> touched;
    for (VertexId u = 0; u < n; ++u) {
        for (auto x : touched) via[x] = 0;
        touched.clear();
        for (auto w : g.neighbors(u)) {
            for (auto x : g.neighbors(w)) {
                if (x == u) continue;
                if (via[x] != 0) return std::vector<VertexId>{u, via[x] - 1, x, w};
                via[x] = w + 1;
                touched.push_back(x);
            }
        }
    }
    return std::nullopt;
}

inline bool has_4cycle(const Graph& g) { return find_4cycle(g).has_value(); }

/// A cycle of exactly @p length vertices (3 <= length <= 13), listed in order,
/// or nullopt. Roots each search at the cycle's smallest vertex; prunes with
/// BFS distances back to the root.
inline std::optional<std::vector<VertexId>> find_cycle_of_length(const Graph& g, std::size_t length) {
    if (length < 3 || length > 13) throw std::invalid_argument("cycle length must lie in [3, 13]");
    const std::size_t n = g.vertex_count();
    constexpr auto far = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n);
    std::vector<bool> on_path(n, false);
    std::vector<VertexId> path;

    for (VertexId root = 0; root < n; ++root) {
        // Distances to root within the subgraph of vertices >= root.
        std::fill(dist.begin(), dist.end(), far);
        std::deque<VertexId> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            if (dist[u] >= length) continue;
            for (auto w : g.neighbors(u)) {
                if (w > root && dist[w] == far) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }

        path.assign(1, root);
        on_path[root] = true;
        std::function<bool(VertexId)> extend = [&](VertexId u) -> bool {
            const std::size_t used = path.size(); // vertices on path, edges = used - 1
            if (used == length) return g.has_edge(u, root);
            for (auto w : g.neighbors(u)) {
                if (w <= root || on_path[w]) continue;
                // After stepping to w we need length - used more edges to close.
                if (dist[w] > length - used) continue;
                path.push_back(w);
                on_path[w] = true;
                if (extend(w)) return true;
                on_path[w] = false;
                path.pop_back();
            }
            return false;
        };
        if (extend(root)) {
            for (auto v : path) on_path[v] = false;
            return path;
        }
        on_path[root] = false;
    }
    return std::nullopt;
}

inline bool has_cycle_of_length(const Graph& g, std::size_t length) {
    return find_cycle_of_length(g, length).has_value();
}

} // namespace pcover
