/**
 * @brief Z_p gain graphs from the cocycles, their covers, twisted adjacency
 * matrices, and the degree-bound search over signs and twists.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "pcover/covers.hpp"
#include "pcover/spectra.hpp"

namespace pcover {

/// A graph whose arcs carry Z_p gains with gain(u, v) = -gain(v, u).
/// gains[u][k] is the gain of the arc from u to base.neighbors(u)[k].
struct GainGraph {
    Graph base;
    Prime p;
    std::vector<std::vector<std::uint32_t>> gains;

    [[nodiscard]] std::uint32_t gain(VertexId u, VertexId v) const {
        const auto nbrs = base.neighbors(u);
        auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
        if (it == nbrs.end() || *it != v) throw std::out_of_range("gain: not an arc");
        return gains[u][static_cast<std::size_t>(it - nbrs.begin())];
    }

    [[nodiscard]] bool is_antisymmetric() const {
        for (VertexId u = 0; u < base.vertex_count(); ++u)
            for (auto v : base.neighbors(u))
                if ((gain(u, v) + gain(v, u)) % p.value() != 0) return false;
        return true;
    }
};

/// Gains f(g, s+g) = kappa(s, g), f(s+g, g) = -kappa(s, g) on Cay(Z_p^{2d}, S ∪ -S).
inline GainGraph gain_from_cocycle(Prime p, std::size_t d, GroupSign sign) {
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    const auto s_set = connection_set_S(p, d);
    const ElementaryAbelianGroup space(p, 2 * d);
    GainGraph gg{extraspecial_base_graph(p, d), p, {}};
    gg.gains.resize(gg.base.vertex_count());
    for (VertexId u = 0; u < gg.base.vertex_count(); ++u) gg.gains[u].assign(gg.base.degree(u), unset);

    auto assign = [&](VertexId u, VertexId v, std::uint32_t value) {
        const auto nbrs = gg.base.neighbors(u);
        const auto k = static_cast<std::size_t>(std::lower_bound(nbrs.begin(), nbrs.end(), v) - nbrs.begin());
        auto& slot = gg.gains[u].at(k);
        if (slot != unset && slot != value) throw std::logic_error("gain assigned twice inconsistently");
        slot = value;
    };

    for (VertexId i = 0; i < space.order(); ++i) {
        const auto g = space.element(i);
        const ZpPair gp{g.slice(0, d), g.slice(d, d)};
        for (const auto& s : s_set.ordered()) {
            const VertexId w = space.index_of(concat(s.a, s.b) + g);
            const auto k = kappa(sign, s, gp);
            assign(i, w, k.value());
            assign(w, i, (-k).value());
        }
    }
    return gg;
}

/// Restriction to a sorted vertex subset; vertex k of the result is vertices[k].
inline GainGraph restrict_gain_graph(const GainGraph& gg, const std::vector<VertexId>& vertices) {
    GainGraph out{gg.base.induced_subgraph(vertices), gg.p, {}};
    out.gains.resize(vertices.size());
    for (VertexId k = 0; k < vertices.size(); ++k)
        for (auto j : out.base.neighbors(k)) out.gains[k].push_back(gg.gain(vertices[k], vertices[j]));
    return out;
}

/// Gain graph on the base C_p^m: m = 2d uses gain_from_cocycle directly; odd
/// m = 2d - 1 restricts it to the induced C_p^{2d-1}.
inline GainGraph gain_graph_for_dims(Prime p, std::size_t dims, GroupSign sign) {
    if (dims == 0) throw std::invalid_argument("dims must be at least 1");
    const std::size_t d = (dims + 1) / 2;
    auto gg = gain_from_cocycle(p, d, sign);
    if (dims % 2 == 0) return gg;
    return restrict_gain_graph(gg, induced_hyperplane_vertices(p, d));
}

/// Cover on V x Z_p: (v, j) ~ (u, j + gain(v, u)); vertex (v, j) at id v p + j.
inline CoveringMap cover_from_gain(const GainGraph& gg) {
    const std::uint32_t p = gg.p.value();
    std::vector<Edge> edges;
    for (VertexId v = 0; v < gg.base.vertex_count(); ++v) {
        const auto nbrs = gg.base.neighbors(v);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            const VertexId u = nbrs[k];
            if (u < v) continue;
            for (std::uint32_t j = 0; j < p; ++j) edges.emplace_back(v * p + j, u * p + (j + gg.gains[v][k]) % p);
        }
    }
    CoveringMap cm{Graph(gg.base.vertex_count() * p, edges), gg.base, {}};
    cm.gamma.resize(gg.base.vertex_count() * p);
    for (VertexId i = 0; i < cm.gamma.size(); ++i) cm.gamma[i] = i / p;
    return cm;
}

/// Entry (u, v) = ω^{k gain(u, v)} on arcs, ω = e^{2πi/p}.
inline HermitianMatrix twisted_adjacency(const GainGraph& gg, std::uint32_t k) {
    const std::uint32_t p = gg.p.value();
    if (k >= p) throw std::invalid_argument("twist must lie in [0, p)");
    HermitianMatrix m(gg.base.vertex_count());
    for (VertexId u = 0; u < gg.base.vertex_count(); ++u) {
        const auto nbrs = gg.base.neighbors(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const auto e = (static_cast<std::uint64_t>(k) * gg.gains[u][i]) % p;
            m(u, nbrs[i]) = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / p);
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Degree-bound search over (sign, twist)

struct TwistBound {
    GroupSign sign;
    std::uint32_t twist;
    SpectrumReport spectrum;
    DegreeBoundTable table;
};

struct BestBound {
    std::int64_t degree;
    std::size_t s;
    GroupSign sign;
    std::uint32_t twist;
};

struct BoundSearch {
    Prime p;
    std::size_t dims;
    std::size_t n;
    std::vector<TwistBound> entries;
    std::vector<BestBound> best; // ascending degree

    [[nodiscard]] std::optional<BestBound> best_for_degree(std::int64_t degree) const {
        for (const auto& b : best)
            if (b.degree == degree) return b;
        return std::nullopt;
    }
};

/// Twisted spectra and bound tables for the base C_p^{dims}. With no explicit
/// twist, every nontrivial twist 1..p-1 of both signs is tried; best[] keeps
/// the smallest s per degree (first hit wins ties: plus before minus, low twist first).
inline BoundSearch degree_bound_search(Prime p, std::size_t dims, std::optional<std::uint32_t> twist = std::nullopt,
                                       std::vector<GroupSign> signs = {GroupSign::plus, GroupSign::minus}) {
    require_odd_prime(p);
    const auto n = checked_power(p.value(), dims, 2000);
    BoundSearch search{p, dims, n, {}, {}};
    for (auto sign : signs) {
        const auto gg = gain_graph_for_dims(p, dims, sign);
        std::vector<std::uint32_t> twists;
        if (twist) {
            twists.push_back(*twist);
        } else {
            for (std::uint32_t k = 1; k < p.value(); ++k) twists.push_back(k);
        }
        for (auto k : twists) {
            auto spectrum = hermitian_eigenvalues(
                twisted_adjacency(gg, k), std::string(to_string(sign)) + " twist " + std::to_string(k));
            auto table = huang_degree_bound(spectrum);
            search.entries.push_back({sign, k, std::move(spectrum), std::move(table)});
        }
    }
    std::int64_t top = 0;
    for (const auto& e : search.entries) top = std::max(top, e.table.max_integer_bound());
    for (std::int64_t degree = 1; degree <= top; ++degree) {
        std::optional<BestBound> best;
        for (const auto& e : search.entries) {
            if (auto s = e.table.minimal_size_for_degree(degree); s && (!best || *s < best->s)) {
                best = BestBound{degree, *s, e.sign, e.twist};
            }
        }
        if (best) search.best.push_back(*best);
    }
    return search;
}

} // namespace pcover
