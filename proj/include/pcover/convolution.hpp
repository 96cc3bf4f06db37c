/**
 * @brief Functions on finite groups: convolution, the beta-twisted
 * convolution on Z_2^d, and the lift L to the Heisenberg group.
 *
 *   (f * g)(x)     = sum_y f(y) g(y^{-1} x)
 *   (f *_b g)(x)   = sum_y (-1)^{beta(y, y^{-1} x)} f(y) g(y^{-1} x)
 *   L(f)(x, t)     = (-1)^t f(x)
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "pcover/groups.hpp"
#include "pcover/spectra.hpp"

namespace pcover {

/// Dense function on an enumerated group; values[i] is the value at group.element(i).
template <FiniteGroup G, class V>
struct GroupFunction {
    G group;
    std::vector<V> values;

    explicit GroupFunction(G g) : group(std::move(g)), values(group.order(), V{}) {}
    GroupFunction(G g, std::vector<V> v) : group(std::move(g)), values(std::move(v)) {
        if (values.size() != group.order()) throw std::invalid_argument("group function: wrong number of values");
    }

    static GroupFunction delta(G g, std::size_t index) {
        GroupFunction f(std::move(g));
        f.values.at(index) = V{1};
        return f;
    }

    V operator()(const typename G::element_type& x) const { return values[group.index_of(x)]; }

    friend GroupFunction operator+(const GroupFunction& f, const GroupFunction& g) {
        if (!(f.group == g.group)) throw std::invalid_argument("group function: domain mismatch");
        GroupFunction out(f.group);
        for (std::size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.values[i] + g.values[i];
        return out;
    }

    friend bool operator==(const GroupFunction& f, const GroupFunction& g) {
        return f.group == g.group && f.values == g.values;
    }
};

template <FiniteGroup G, class V>
GroupFunction<G, V> convolve(const GroupFunction<G, V>& f, const GroupFunction<G, V>& g) {
    if (!(f.group == g.group)) throw std::invalid_argument("convolve: domain mismatch");
    const auto& grp = f.group;
    const auto elements = enumerate(grp);
    GroupFunction<G, V> out(grp);
    for (std::size_t yi = 0; yi < elements.size(); ++yi) {
        if (f.values[yi] == V{}) continue;
        const auto yinv = grp.inv(elements[yi]);
        for (std::size_t xi = 0; xi < elements.size(); ++xi) {
            out.values[xi] += f.values[yi] * g.values[grp.index_of(grp.mul(yinv, elements[xi]))];
        }
    }
    return out;
}

namespace detail {
inline void require_binary_domain(const ElementaryAbelianGroup& g, const char* what) {
    if (g.modulus().value() != 2) throw std::invalid_argument(std::string(what) + ": domain must be Z_2^d");
}
} // namespace detail

template <class V>
GroupFunction<ElementaryAbelianGroup, V> twisted_convolve(const GroupFunction<ElementaryAbelianGroup, V>& f,
                                                          const GroupFunction<ElementaryAbelianGroup, V>& g) {
    detail::require_binary_domain(f.group, "twisted_convolve");
    if (!(f.group == g.group)) throw std::invalid_argument("twisted_convolve: domain mismatch");
    const auto& grp = f.group;
    const auto elements = enumerate(grp);
    GroupFunction<ElementaryAbelianGroup, V> out(grp);
    for (std::size_t yi = 0; yi < elements.size(); ++yi) {
        if (f.values[yi] == V{}) continue;
        const auto& y = elements[yi];
        for (std::size_t xi = 0; xi < elements.size(); ++xi) {
            const auto rest = grp.mul(grp.inv(y), elements[xi]);
            const V term = f.values[yi] * g.values[grp.index_of(rest)];
            out.values[xi] += beta(y, rest).value() ? -term : term;
        }
    }
    return out;
}

template <class V>
GroupFunction<HeisenbergGroup, V> lift_L(const GroupFunction<ElementaryAbelianGroup, V>& f) {
    detail::require_binary_domain(f.group, "lift_L");
    const HeisenbergGroup h(f.group.dimension());
    GroupFunction<HeisenbergGroup, V> out(h);
    for (std::size_t i = 0; i < h.order(); ++i) {
        const auto g = h.element(i);
        const V v = f.values[f.group.index_of(g.x)];
        out.values[i] = g.t.value() ? -v : v;
    }
    return out;
}

/// Convolution on H_d summed over the transversal {(y, 0)} of the centre:
///   (F *_c G)(x) = sum_{y in Z_2^d} F(y, 0) G((y, 0)^{-1} x).
/// On functions with F(x, t+1) = -F(x, t) this is convolve(F, G) / 2, and
/// L(f) *_c L(g) = L(f *_b g) holds exactly.
template <class V>
GroupFunction<HeisenbergGroup, V> central_convolve(const GroupFunction<HeisenbergGroup, V>& f,
                                                   const GroupFunction<HeisenbergGroup, V>& g) {
    if (!(f.group == g.group)) throw std::invalid_argument("central_convolve: domain mismatch");
    const auto& grp = f.group;
    const auto elements = enumerate(grp);
    const ElementaryAbelianGroup quotient(Prime(2), grp.dimension());
    GroupFunction<HeisenbergGroup, V> out(grp);
    for (std::size_t yi = 0; yi < quotient.order(); ++yi) {
        const HeisenbergElement y{quotient.element(yi), ZpScalar(0, Prime(2))};
        const V fy = f.values[grp.index_of(y)];
        if (fy == V{}) continue;
        const auto yinv = grp.inv(y);
        for (std::size_t xi = 0; xi < elements.size(); ++xi)
            out.values[xi] += fy * g.values[grp.index_of(grp.mul(yinv, elements[xi]))];
    }
    return out;
}

/// mu: indicator of the standard basis of Z_2^d.
template <class V>
GroupFunction<ElementaryAbelianGroup, V> basis_indicator(std::size_t d) {
    const ElementaryAbelianGroup grp(Prime(2), d);
    GroupFunction<ElementaryAbelianGroup, V> mu(grp);
    for (std::size_t i = 0; i < d; ++i) mu.values[grp.index_of(ZpVector::basis(Prime(2), d, i))] = V{1};
    return mu;
}

/// Matrix of the linear operator f -> op(f) on functions over @p grp, column j = op(delta_j).
template <FiniteGroup G, class Op>
RealMatrix operator_matrix(const G& grp, Op op) {
    RealMatrix m(grp.order());
    for (std::size_t j = 0; j < grp.order(); ++j) {
        const auto col = op(GroupFunction<G, double>::delta(grp, j));
        for (std::size_t i = 0; i < grp.order(); ++i) m(i, j) = col.values[i];
    }
    return m;
}

/// Matrix of f -> f *_beta mu on Z_2^d.
inline RealMatrix twisted_adjacency_operator(std::size_t d) {
    const auto mu = basis_indicator<double>(d);
    return operator_matrix(ElementaryAbelianGroup(Prime(2), d),
                           [&](const auto& f) { return twisted_convolve(f, mu); });
}

} // namespace pcover
