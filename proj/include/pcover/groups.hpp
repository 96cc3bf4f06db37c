/**
 * @brief The extraspecial p-groups p_+^{1+2d}, p_-^{1+2d} and the Heisenberg
 * extension H_d of Z_2^d.
 *
 * Both extraspecial groups share the carrier Z_p^d x Z_p^d x Z_p and differ
 * only in the 2-cocycle used for the centre coordinate:
 *
 *   plus:  kappa((a,b),(c,d)) = b.c
 *   minus: kappa((a,b),(c,d)) = b.c + phi(a_1, c_1)
 *
 * so that (a,b,z)(c,d,w) = (a+c, b+d, z+w+kappa).
 */
#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pcover/codec.hpp"
#include "pcover/modular.hpp"

namespace pcover {

enum class GroupSign { plus, minus };

inline const char* to_string(GroupSign s) { return s == GroupSign::plus ? "plus" : "minus"; }

/// Element of Z_p^d x Z_p^d, the quotient by the centre.
struct ZpPair {
    ZpVector a;
    ZpVector b;

    friend bool operator==(const ZpPair&, const ZpPair&) = default;
};

struct ExtraspecialElement {
    ZpVector a;
    ZpVector b;
    ZpScalar z;

    ExtraspecialElement(ZpVector a_, ZpVector b_, ZpScalar z_) : a(std::move(a_)), b(std::move(b_)), z(z_) {
        ZpVector::check_compatible(a, b, "extraspecial element");
        detail::require_same_modulus(a.modulus(), z.modulus(), "extraspecial element");
        if (a.size() == 0) throw std::invalid_argument("extraspecial element needs d >= 1");
    }

    static ExtraspecialElement identity(Prime p, std::size_t d) {
        return {ZpVector(p, d), ZpVector(p, d), ZpScalar::zero(p)};
    }

    /// Embeds a quotient element with centre coordinate 0.
    static ExtraspecialElement lift(const ZpPair& s) { return {s.a, s.b, ZpScalar::zero(s.a.modulus())}; }

    [[nodiscard]] Prime modulus() const noexcept { return z.modulus(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return a.size(); }
    [[nodiscard]] ZpPair quotient() const { return {a, b}; }
    [[nodiscard]] bool is_central_coordinate_only() const noexcept { return a.is_zero() && b.is_zero(); }

    friend bool operator==(const ExtraspecialElement&, const ExtraspecialElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ExtraspecialElement& g) {
        return os << '(' << g.a << ',' << g.b << ',' << g.z << ')';
    }
};

namespace detail {
inline void check_elements(const ExtraspecialElement& g, const ExtraspecialElement& h, const char* what) {
    ZpVector::check_compatible(g.a, h.a, what);
}

inline ZpScalar kappa_raw(GroupSign sign, const ZpVector& a, const ZpVector& b, const ZpVector& c) {
    ZpScalar k = dot(b, c);
    if (sign == GroupSign::minus) k += phi(a[0], c[0]);
    return k;
}
} // namespace detail

/// The 2-cocycle selected by @p sign, evaluated on quotient elements g1 = (a,b), g2 = (c,d).
inline ZpScalar kappa(GroupSign sign, const ZpPair& g1, const ZpPair& g2) {
    ZpVector::check_compatible(g1.a, g1.b, "kappa");
    ZpVector::check_compatible(g1.a, g2.a, "kappa");
    ZpVector::check_compatible(g2.a, g2.b, "kappa");
    return detail::kappa_raw(sign, g1.a, g1.b, g2.a);
}

inline ExtraspecialElement mul(GroupSign sign, const ExtraspecialElement& g, const ExtraspecialElement& h) {
    detail::check_elements(g, h, "mul");
    return {g.a + h.a, g.b + h.b, g.z + h.z + detail::kappa_raw(sign, g.a, g.b, h.a)};
}

inline ExtraspecialElement inv(GroupSign sign, const ExtraspecialElement& g) {
    ZpScalar z = -g.z + dot(g.a, g.b);
    if (sign == GroupSign::minus) z -= phi(g.a[0], -g.a[0]);
    return {-g.a, -g.b, z};
}

/// [g, h] = g^{-1} h^{-1} g h, computed by composition.
inline ExtraspecialElement commutator(GroupSign sign, const ExtraspecialElement& g, const ExtraspecialElement& h) {
    return mul(sign, mul(sign, mul(sign, inv(sign, g), inv(sign, h)), g), h);
}

inline ExtraspecialElement pow(GroupSign sign, const ExtraspecialElement& g, std::uint64_t k) {
    auto result = ExtraspecialElement::identity(g.modulus(), g.dimension());
    for (std::uint64_t i = 0; i < k; ++i) result = mul(sign, result, g);
    return result;
}

/// Smallest k >= 1 with g^k = 1.
inline std::uint64_t element_order(GroupSign sign, const ExtraspecialElement& g) {
    const auto e = ExtraspecialElement::identity(g.modulus(), g.dimension());
    auto x = g;
    std::uint64_t k = 1;
    while (!(x == e)) {
        x = mul(sign, x, g);
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Heisenberg extension H_d of Z_2^d

struct HeisenbergElement {
    ZpVector x;
    ZpScalar t;

    HeisenbergElement(ZpVector x_, ZpScalar t_) : x(std::move(x_)), t(t_) {
        if (x.modulus().value() != 2 || t.modulus().value() != 2) {
            throw std::invalid_argument("Heisenberg elements live over Z_2");
        }
    }

    static HeisenbergElement identity(std::size_t d) { return {ZpVector(Prime(2), d), ZpScalar::zero(Prime(2))}; }
    /// (e_i, 0), 0-based i.
    static HeisenbergElement generator(std::size_t d, std::size_t i) {
        return {ZpVector::basis(Prime(2), d, i), ZpScalar::zero(Prime(2))};
    }

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
    friend std::ostream& operator<<(std::ostream& os, const HeisenbergElement& g) {
        return os << '(' << g.x << ',' << g.t << ')';
    }
};

/// beta(x, y) = sum_{i<j} x_i y_j over Z_2.
inline ZpScalar beta(const ZpVector& x, const ZpVector& y) {
    ZpVector::check_compatible(x, y, "beta");
    std::uint32_t acc = 0, prefix = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        acc ^= prefix & y.residues()[j];
        prefix ^= x.residues()[j];
    }
    return ZpScalar(acc, x.modulus());
}

inline HeisenbergElement heisenberg_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
    return {g.x + h.x, g.t + h.t + beta(g.x, h.x)};
}

inline HeisenbergElement heisenberg_inv(const HeisenbergElement& g) { return {g.x, g.t + beta(g.x, g.x)}; }

// ---------------------------------------------------------------------------
// Enumerated groups. Elements are indexed by a VertexCodec so that graph
// vertex ids are deterministic.

template <class G>
concept FiniteGroup = requires(const G& grp, const typename G::element_type& e, std::size_t i) {
    { grp.order() } -> std::convertible_to<std::size_t>;
    { grp.element(i) } -> std::convertible_to<typename G::element_type>;
    { grp.index_of(e) } -> std::convertible_to<VertexId>;
    { grp.mul(e, e) } -> std::convertible_to<typename G::element_type>;
    { grp.inv(e) } -> std::convertible_to<typename G::element_type>;
    { grp.identity() } -> std::convertible_to<typename G::element_type>;
};

/// Z_p^dim under addition.
class ElementaryAbelianGroup {
  public:
    using element_type = ZpVector;

    ElementaryAbelianGroup(Prime p, std::size_t dim) : p_(p), dim_(dim), codec_(VertexCodec::uniform(p.value(), dim)) {}

    [[nodiscard]] Prime modulus() const noexcept { return p_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
    [[nodiscard]] std::size_t order() const noexcept { return codec_.size(); }
    [[nodiscard]] const VertexCodec& codec() const noexcept { return codec_; }

    [[nodiscard]] ZpVector element(std::size_t i) const { return ZpVector(p_, codec_.decode(static_cast<VertexId>(i))); }
    [[nodiscard]] VertexId index_of(const ZpVector& v) const { return codec_.encode(v.residues()); }
    [[nodiscard]] ZpVector mul(const ZpVector& u, const ZpVector& v) const { return u + v; }
    [[nodiscard]] ZpVector inv(const ZpVector& u) const { return -u; }
    [[nodiscard]] ZpVector identity() const { return ZpVector(p_, dim_); }

    friend bool operator==(const ElementaryAbelianGroup& l, const ElementaryAbelianGroup& r) {
        return l.p_ == r.p_ && l.dim_ == r.dim_;
    }

  private:
    Prime p_;
    std::size_t dim_;
    VertexCodec codec_;
};

/// p_{sign}^{1+2d}; ids use digit order a_1..a_d, b_1..b_d, z.
class ExtraspecialGroup {
  public:
    using element_type = ExtraspecialElement;

    ExtraspecialGroup(Prime p, std::size_t d, GroupSign sign)
        : p_(p), d_(d), sign_(sign), codec_(VertexCodec::uniform(p.value(), 2 * d + 1)) {
        if (d == 0) throw std::invalid_argument("extraspecial group needs d >= 1");
    }

    [[nodiscard]] Prime modulus() const noexcept { return p_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return d_; }
    [[nodiscard]] GroupSign sign() const noexcept { return sign_; }
    [[nodiscard]] std::size_t order() const noexcept { return codec_.size(); }
    [[nodiscard]] const VertexCodec& codec() const noexcept { return codec_; }

    [[nodiscard]] ExtraspecialElement element(std::size_t i) const {
        auto digits = codec_.decode(static_cast<VertexId>(i));
        std::vector<std::uint32_t> a(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(d_));
        std::vector<std::uint32_t> b(digits.begin() + static_cast<std::ptrdiff_t>(d_), digits.end() - 1);
        return {ZpVector(p_, a), ZpVector(p_, b), ZpScalar(digits.back(), p_)};
    }
    [[nodiscard]] VertexId index_of(const ExtraspecialElement& g) const {
        std::vector<std::uint32_t> digits;
        digits.reserve(2 * d_ + 1);
        digits.insert(digits.end(), g.a.residues().begin(), g.a.residues().end());
        digits.insert(digits.end(), g.b.residues().begin(), g.b.residues().end());
        digits.push_back(g.z.value());
        return codec_.encode(digits);
    }
    [[nodiscard]] ExtraspecialElement mul(const ExtraspecialElement& g, const ExtraspecialElement& h) const {
        return pcover::mul(sign_, g, h);
    }
    [[nodiscard]] ExtraspecialElement inv(const ExtraspecialElement& g) const { return pcover::inv(sign_, g); }
    [[nodiscard]] ExtraspecialElement identity() const { return ExtraspecialElement::identity(p_, d_); }

    friend bool operator==(const ExtraspecialGroup& l, const ExtraspecialGroup& r) {
        return l.p_ == r.p_ && l.d_ == r.d_ && l.sign_ == r.sign_;
    }

  private:
    Prime p_;
    std::size_t d_;
    GroupSign sign_;
    VertexCodec codec_;
};

/// H_d; ids use digit order x_1..x_d, t.
class HeisenbergGroup {
  public:
    using element_type = HeisenbergElement;

    explicit HeisenbergGroup(std::size_t d) : d_(d), codec_(VertexCodec::uniform(2, d + 1)) {
        if (d == 0) throw std::invalid_argument("Heisenberg group needs d >= 1");
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return d_; }
    [[nodiscard]] std::size_t order() const noexcept { return codec_.size(); }

    [[nodiscard]] HeisenbergElement element(std::size_t i) const {
        auto digits = codec_.decode(static_cast<VertexId>(i));
        const Prime two(2);
        return {ZpVector(two, std::vector<std::uint32_t>(digits.begin(), digits.end() - 1)), ZpScalar(digits.back(), two)};
    }
    [[nodiscard]] VertexId index_of(const HeisenbergElement& g) const {
        auto digits = g.x.residues();
        digits.push_back(g.t.value());
        return codec_.encode(digits);
    }
    [[nodiscard]] HeisenbergElement mul(const HeisenbergElement& g, const HeisenbergElement& h) const {
        return heisenberg_mul(g, h);
    }
    [[nodiscard]] HeisenbergElement inv(const HeisenbergElement& g) const { return heisenberg_inv(g); }
    [[nodiscard]] HeisenbergElement identity() const { return HeisenbergElement::identity(d_); }

    friend bool operator==(const HeisenbergGroup& l, const HeisenbergGroup& r) { return l.d_ == r.d_; }

  private:
    std::size_t d_;
    VertexCodec codec_;
};

template <FiniteGroup G>
std::vector<typename G::element_type> enumerate(const G& group) {
    std::vector<typename G::element_type> out;
    out.reserve(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) out.push_back(group.element(i));
    return out;
}

// ---------------------------------------------------------------------------
// Cocycle verification

using CocycleFn = std::function<ZpScalar(const ZpVector&, const ZpVector&)>;

/// The cocycle for @p sign as a function on flat vectors of length 2d (a then b).
inline CocycleFn cocycle_function(GroupSign sign, std::size_t d) {
    return [sign, d](const ZpVector& u, const ZpVector& v) {
        return kappa(sign, {u.slice(0, d), u.slice(d, d)}, {v.slice(0, d), v.slice(d, d)});
    };
}

struct CocycleCheckResult {
    bool passed = true;
    bool exhaustive = true;
    std::uint64_t triples_checked = 0;
    /// A triple (a, b, c) violating kappa(a+b,c) + kappa(a,b) = kappa(a,b+c) + kappa(b,c).
    std::optional<std::vector<ZpVector>> witness;
};

/// Exhaustive over all triples when p^(3 dim) <= 10^7; otherwise 10^5 triples
/// drawn from a splitmix64 stream seeded with 0x5eed.
inline CocycleCheckResult cocycle_check(const CocycleFn& kappa_fn, Prime p, std::size_t dim) {
    constexpr std::uint64_t exhaustive_limit = 10'000'000;
    constexpr std::uint64_t sample_count = 100'000;

    const ElementaryAbelianGroup group(p, dim);
    const std::uint64_t n = group.order();
    CocycleCheckResult result;

    auto check = [&](std::uint64_t i, std::uint64_t j, std::uint64_t k) {
        const auto a = group.element(i), b = group.element(j), c = group.element(k);
        ++result.triples_checked;
        if (kappa_fn(a + b, c) + kappa_fn(a, b) != kappa_fn(a, b + c) + kappa_fn(b, c)) {
            result.passed = false;
            result.witness = std::vector<ZpVector>{a, b, c};
            return false;
        }
        return true;
    };

    const bool small = n <= 215 && n * n * n <= exhaustive_limit;
    result.exhaustive = small;
    if (small) {
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::uint64_t j = 0; j < n; ++j)
                for (std::uint64_t k = 0; k < n; ++k)
                    if (!check(i, j, k)) return result;
        return result;
    }

    std::uint64_t state = 0x5eed;
    auto next = [&state]() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    for (std::uint64_t t = 0; t < sample_count; ++t) {
        if (!check(next() % n, next() % n, next() % n)) return result;
    }
    return result;
}

} // namespace pcover
