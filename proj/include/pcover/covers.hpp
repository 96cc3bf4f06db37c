/**
 * @brief Connection sets, covering maps, and the cover constructions:
 * extraspecial Cayley covers of C_p^{2d}, their induced covers of
 * C_p^{2d-1}, the Heisenberg cover of Q_d, and 2-fold covers from signings.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pcover/graph.hpp"
#include "pcover/groups.hpp"
#include "pcover/modular.hpp"

namespace pcover {

/// Upper bound on p^{1+2d} for build_cover.
inline constexpr std::uint64_t max_cover_vertices = 1'000'000;

/// The basis S = A ∪ B of Z_p^d x Z_p^d.
///   A_k = e_1 + ... + e_k + f_1 + ... + f_{k-1}
///   B_k = e_1 + ... + e_{k-1} + 2 e_k + f_1 + ... + f_k
struct ConnectionSetS {
    Prime p;
    std::size_t d;
    std::vector<ZpPair> A;
    std::vector<ZpPair> B;

    /// Interleaved list order A_1, B_1, A_2, B_2, ...
    [[nodiscard]] std::vector<ZpPair> ordered() const {
        std::vector<ZpPair> out;
        for (std::size_t k = 0; k < d; ++k) {
            out.push_back(A[k]);
            out.push_back(B[k]);
        }
        return out;
    }

    /// ordered() as flat length-2d vectors.
    [[nodiscard]] std::vector<ZpVector> flat() const {
        std::vector<ZpVector> out;
        for (const auto& s : ordered()) out.push_back(concat(s.a, s.b));
        return out;
    }
};

inline void require_odd_prime(Prime p) {
    if (!p.is_odd()) throw std::invalid_argument("p must be odd for extraspecial covers");
}

inline ConnectionSetS connection_set_S(Prime p, std::size_t d) {
    require_odd_prime(p);
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    ConnectionSetS s{p, d, {}, {}};
    for (std::size_t k = 1; k <= d; ++k) {
        ZpVector a(p, d), b(p, d);
        for (std::size_t i = 0; i < k; ++i) a.set(i, ZpScalar(1, p));
        for (std::size_t j = 0; j + 1 < k; ++j) b.set(j, ZpScalar(1, p));
        s.A.push_back({a, b});

        ZpVector a2(p, d), b2(p, d);
        for (std::size_t i = 0; i + 1 < k; ++i) a2.set(i, ZpScalar(1, p));
        a2.set(k - 1, ZpScalar(2, p));
        for (std::size_t j = 0; j < k; ++j) b2.set(j, ZpScalar(1, p));
        s.B.push_back({a2, b2});
    }
    return s;
}

/// Linear map Z_p^{2d} -> Z_p^{2d} sending the standard basis e_i to S_i (list order).
class BasisChange {
  public:
    explicit BasisChange(const ConnectionSetS& s) : images_(s.flat()) {}

    [[nodiscard]] ZpVector apply(const ZpVector& x) const {
        if (x.size() != images_.size()) throw std::invalid_argument("basis change: dimension mismatch");
        ZpVector out(x.modulus(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out = out + x[i] * images_[i];
        return out;
    }
    [[nodiscard]] bool is_invertible() const { return rank(images_) == images_.size(); }
    [[nodiscard]] const std::vector<ZpVector>& images() const noexcept { return images_; }

  private:
    std::vector<ZpVector> images_;
};

/// S_± = ε(S) ∪ ε(S)^{-1}: ε(S) in list order followed by the inverses in the same order.
inline std::vector<ExtraspecialElement> lifted_connection(Prime p, std::size_t d, GroupSign sign) {
    const auto s = connection_set_S(p, d);
    std::vector<ExtraspecialElement> out;
    for (const auto& q : s.ordered()) out.push_back(ExtraspecialElement::lift(q));
    const std::size_t half = out.size();
    for (std::size_t i = 0; i < half; ++i) {
        auto g = inv(sign, out[i]);
        if (std::find(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(half), g) !=
            out.begin() + static_cast<std::ptrdiff_t>(half)) {
            throw std::logic_error("lifted connection: ε(S) meets its inverse set");
        }
        out.push_back(std::move(g));
    }
    return out;
}

struct NoncommutingReport {
    bool passed = true;
    /// table[i][j] is the centre coordinate of [elements[i], elements[j]].
    std::vector<std::vector<std::uint32_t>> table;
    std::optional<std::pair<std::size_t, std::size_t>> commuting_pair;
};

/// Checks that no two distinct elements commute and records all commutators.
inline NoncommutingReport pairwise_noncommuting_check(const std::vector<ExtraspecialElement>& elements,
                                                      GroupSign sign) {
    NoncommutingReport report;
    report.table.assign(elements.size(), std::vector<std::uint32_t>(elements.size(), 0));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            const auto c = commutator(sign, elements[i], elements[j]);
            if (!c.is_central_coordinate_only()) throw std::logic_error("commutator left the centre");
            report.table[i][j] = c.z.value();
            if (i != j && c.z.value() == 0 && report.passed) {
                report.passed = false;
                report.commuting_pair = {i, j};
            }
        }
    }
    return report;
}

/// In list order, [s_i, s_j] has centre coordinate +1 for i > j and -1 for i < j.
inline bool matches_ordered_commutator_form(const NoncommutingReport& report, Prime p) {
    for (std::size_t i = 0; i < report.table.size(); ++i)
        for (std::size_t j = 0; j < report.table.size(); ++j) {
            const std::uint32_t expected = i == j ? 0 : (i > j ? 1 : p.value() - 1);
            if (report.table[i][j] != expected) return false;
        }
    return true;
}

struct ConnectionSetCertificate {
    std::size_t rank = 0;
    bool full_rank = false;
    NoncommutingReport commutators;
    bool ordered_form = false;
    [[nodiscard]] bool ok() const { return full_rank && commutators.passed && ordered_form; }
};

/// S is a basis, and no two elements of ε(S) commute.
inline ConnectionSetCertificate certify_connection_set(Prime p, std::size_t d, GroupSign sign) {
    const auto s = connection_set_S(p, d);
    ConnectionSetCertificate cert;
    cert.rank = rank(s.flat());
    cert.full_rank = cert.rank == 2 * d;
    std::vector<ExtraspecialElement> lifted;
    for (const auto& q : s.ordered()) lifted.push_back(ExtraspecialElement::lift(q));
    cert.commutators = pairwise_noncommuting_check(lifted, sign);
    cert.ordered_form = matches_ordered_commutator_form(cert.commutators, p);
    return cert;
}

// ---------------------------------------------------------------------------
// Covering maps

struct CoveringMap {
    Graph total;
    Graph base;
    std::vector<VertexId> gamma;
};

struct CoverViolation {
    enum class Kind { gamma_out_of_range, not_homomorphism, fiber_not_independent, not_perfect_matching,
                      unequal_fibers, base_disconnected };
    Kind kind;
    VertexId u = 0;
    VertexId v = 0;
    std::string detail;
};

inline const char* to_string(CoverViolation::Kind k) {
    switch (k) {
    case CoverViolation::Kind::gamma_out_of_range: return "gamma_out_of_range";
    case CoverViolation::Kind::not_homomorphism: return "not_homomorphism";
    case CoverViolation::Kind::fiber_not_independent: return "fiber_not_independent";
    case CoverViolation::Kind::not_perfect_matching: return "not_perfect_matching";
    case CoverViolation::Kind::unequal_fibers: return "unequal_fibers";
    case CoverViolation::Kind::base_disconnected: return "base_disconnected";
    }
    return "unknown";
}

struct CoverCheck {
    std::optional<std::size_t> fold;
    std::vector<CoverViolation> violations;
    [[nodiscard]] bool ok() const { return violations.empty() && fold.has_value(); }
};

/// Checks the covering axioms and returns the fold r. Stops collecting after
/// the first violation of each kind.
inline CoverCheck verify_cover(const CoveringMap& cm) {
    using Kind = CoverViolation::Kind;
    CoverCheck check;
    std::vector<bool> reported(6, false);
    auto report = [&](Kind k, VertexId u, VertexId v, std::string detail) {
        auto idx = static_cast<std::size_t>(k);
        if (!reported[idx]) {
            reported[idx] = true;
            check.violations.push_back({k, u, v, std::move(detail)});
        }
    };

    const auto& X = cm.total;
    const auto& Y = cm.base;
    if (cm.gamma.size() != X.vertex_count()) {
        report(Kind::gamma_out_of_range, 0, 0, "gamma has wrong length");
        return check;
    }
    for (VertexId u = 0; u < X.vertex_count(); ++u) {
        if (cm.gamma[u] >= Y.vertex_count()) {
            report(Kind::gamma_out_of_range, u, 0, "gamma(u) is not a base vertex");
            return check;
        }
    }
    if (!Y.is_connected()) report(Kind::base_disconnected, 0, 0, "base graph is not connected");

    std::vector<std::size_t> fiber_size(Y.vertex_count(), 0);
    for (auto b : cm.gamma) ++fiber_size[b];

    for (auto [u, v] : X.edges()) {
        const auto gu = cm.gamma[u], gv = cm.gamma[v];
        if (gu == gv) {
            report(Kind::fiber_not_independent, u, v, "edge inside fiber of base vertex " + std::to_string(gu));
        } else if (!Y.has_edge(gu, gv)) {
            report(Kind::not_homomorphism, u, v, "image is not a base edge");
        }
    }

    // Each total vertex must see exactly one neighbour over every base neighbour of its image.
    std::vector<std::size_t> hits(Y.vertex_count(), 0);
    for (VertexId u = 0; u < X.vertex_count(); ++u) {
        for (auto w : X.neighbors(u)) ++hits[cm.gamma[w]];
        for (auto y : Y.neighbors(cm.gamma[u])) {
            if (hits[y] != 1) {
                report(Kind::not_perfect_matching, u, y,
                       "vertex has " + std::to_string(hits[y]) + " neighbours over base vertex " + std::to_string(y));
            }
        }
        for (auto w : X.neighbors(u)) hits[cm.gamma[w]] = 0;
    }

    for (VertexId b = 0; b < Y.vertex_count(); ++b) {
        if (fiber_size[b] != fiber_size[0]) {
            report(Kind::unequal_fibers, 0, b, "fiber sizes differ");
            break;
        }
    }
    if (check.violations.empty() && !fiber_size.empty()) check.fold = fiber_size[0];
    return check;
}

/// Cay(Z_p^{2d}, S ∪ -S), vertex ids from the codec on (a, b).
inline Graph extraspecial_base_graph(Prime p, std::size_t d) {
    const auto flat = connection_set_S(p, d).flat();
    std::vector<ZpVector> connection = flat;
    for (const auto& s : flat) connection.push_back(-s);
    return cayley(ElementaryAbelianGroup(p, 2 * d), connection);
}

/// Cay(p_±^{1+2d}, S_±) over Cay(Z_p^{2d}, S ∪ -S); gamma drops z, so gamma(id) = id / p.
inline CoveringMap build_cover(Prime p, std::size_t d, GroupSign sign) {
    require_odd_prime(p);
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    const auto n = checked_power(p.value(), 2 * d + 1, max_cover_vertices);
    const ExtraspecialGroup group(p, d, sign);
    CoveringMap cm{cayley(group, lifted_connection(p, d, sign)), extraspecial_base_graph(p, d), {}};
    cm.gamma.resize(n);
    for (VertexId i = 0; i < n; ++i) cm.gamma[i] = i / p.value();
    return cm;
}

/// Restriction of a cover to the preimage of a sorted base vertex subset.
inline CoveringMap restrict_cover(const CoveringMap& cm, const std::vector<VertexId>& base_vertices) {
    std::vector<VertexId> local(cm.base.vertex_count(), std::numeric_limits<VertexId>::max());
    for (VertexId k = 0; k < base_vertices.size(); ++k) local[base_vertices[k]] = k;
    std::vector<VertexId> total_vertices;
    for (VertexId u = 0; u < cm.total.vertex_count(); ++u)
        if (local[cm.gamma[u]] != std::numeric_limits<VertexId>::max()) total_vertices.push_back(u);

    CoveringMap out{cm.total.induced_subgraph(total_vertices), cm.base.induced_subgraph(base_vertices), {}};
    out.gamma.reserve(total_vertices.size());
    for (auto u : total_vertices) out.gamma.push_back(local[cm.gamma[u]]);
    return out;
}

/// Base vertex ids of V = alpha({x : x_{2d} = 0}), an induced C_p^{2d-1}, ascending.
inline std::vector<VertexId> induced_hyperplane_vertices(Prime p, std::size_t d) {
    const BasisChange alpha(connection_set_S(p, d));
    const ElementaryAbelianGroup space(p, 2 * d);
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < space.order(); ++i) {
        const auto x = space.element(i);
        if (x.residues().back() == 0) out.push_back(space.index_of(alpha.apply(x)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The cover of C_p^{2d-1} induced on gamma^{-1}(V), V the alpha-image of the hyperplane x_{2d} = 0.
inline CoveringMap induced_odd_cover(Prime p, std::size_t d, GroupSign sign) {
    return restrict_cover(build_cover(p, d, sign), induced_hyperplane_vertices(p, d));
}

/// Cay(H_d, {(e_i, 0)}) over Q_d; gamma(x, t) = x, so gamma(id) = id / 2.
inline CoveringMap heisenberg_cover(std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    if (d > 20) throw std::invalid_argument("Heisenberg cover limited to d <= 20");
    const HeisenbergGroup group(d);
    std::vector<HeisenbergElement> generators;
    for (std::size_t i = 0; i < d; ++i) generators.push_back(HeisenbergElement::generator(d, i));
    CoveringMap cm{cayley(group, generators), hypercube(d), {}};
    cm.gamma.resize(group.order());
    for (VertexId i = 0; i < group.order(); ++i) cm.gamma[i] = i / 2;
    return cm;
}

// ---------------------------------------------------------------------------
// Signed graphs

/// Square symmetric matrix with entries in {-1, 0, 1}.
class SignedMatrix {
  public:
    explicit SignedMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] int at(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
    void set(std::size_t i, std::size_t j, int v) {
        if (v < -1 || v > 1) throw std::invalid_argument("signed matrix entries must be -1, 0 or 1");
        entries_.at(i * n_ + j) = static_cast<std::int8_t>(v);
    }

    [[nodiscard]] bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    /// Underlying unsigned graph.
    [[nodiscard]] Graph support() const {
        std::vector<Edge> edges;
        for (VertexId i = 0; i < n_; ++i)
            for (VertexId j = i + 1; j < n_; ++j)
                if (at(i, j) != 0) edges.emplace_back(i, j);
        return Graph(n_, edges);
    }

    friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;

  private:
    std::size_t n_;
    std::vector<std::int8_t> entries_;
};

/// A_1 = [[0,1],[1,0]], A_d = [[A_{d-1}, I], [I, -A_{d-1}]].
inline SignedMatrix cohen_tits_signing(std::size_t d) {
    if (d == 0) throw std::invalid_argument("d must be at least 1");
    if (d > 12) throw std::invalid_argument("signing limited to d <= 12");
    SignedMatrix m(2);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    for (std::size_t k = 2; k <= d; ++k) {
        const std::size_t h = m.size();
        SignedMatrix next(2 * h);
        for (std::size_t i = 0; i < h; ++i) {
            for (std::size_t j = 0; j < h; ++j) {
                next.set(i, j, m.at(i, j));
                next.set(h + i, h + j, -m.at(i, j));
            }
            next.set(i, h + i, 1);
            next.set(h + i, i, 1);
        }
        m = std::move(next);
    }
    return m;
}

/// The 2-fold cover of a signing: vertex (v, layer) at id 2v + layer; positive
/// edges join equal layers, negative edges cross.
inline CoveringMap signed_double_cover(const SignedMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signed matrix must be symmetric");
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.at(i, i) != 0) throw std::invalid_argument("signed matrix must have zero diagonal");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < m.size(); ++u) {
        for (VertexId v = u + 1; v < m.size(); ++v) {
            const int s = m.at(u, v);
            if (s == 0) continue;
            const VertexId cross = s < 0 ? 1 : 0;
            edges.emplace_back(2 * u, 2 * v + cross);
            edges.emplace_back(2 * u + 1, 2 * v + (1 - cross));
        }
    }
    CoveringMap cm{Graph(2 * m.size(), edges), m.support(), {}};
    cm.gamma.resize(2 * m.size());
    for (VertexId i = 0; i < cm.gamma.size(); ++i) cm.gamma[i] = i / 2;
    return cm;
}

/// Fiber map text: one "total_id base_id" line per total vertex.
inline void write_fiber_map(std::ostream& os, const CoveringMap& cm) {
    for (VertexId u = 0; u < cm.gamma.size(); ++u) os << u << ' ' << cm.gamma[u] << '\n';
}

} // namespace pcover
