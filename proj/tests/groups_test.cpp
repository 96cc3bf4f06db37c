#include <gtest/gtest.h>

#include <map>

#include "pcover/groups.hpp"

using namespace pcover;

namespace {

ExtraspecialElement elem(Prime p, std::initializer_list<std::int64_t> a, std::initializer_list<std::int64_t> b,
                         std::int64_t z) {
    return {ZpVector(p, a), ZpVector(p, b), ZpScalar(z, p)};
}

constexpr GroupSign both_signs[] = {GroupSign::plus, GroupSign::minus};

} // namespace

TEST(Kappa, Examples) {
    const Prime p(3);
    const ZpPair g1{ZpVector(p, {1}), ZpVector(p, {2})};
    const ZpPair g2{ZpVector(p, {2}), ZpVector(p, {1})};
    EXPECT_EQ(kappa(GroupSign::plus, g1, g2).value(), 1U);
    EXPECT_EQ(kappa(GroupSign::minus, g1, g2).value(), 2U);
    const ZpPair zero{ZpVector(p, 1), ZpVector(p, 1)};
    for (auto s : both_signs) EXPECT_EQ(kappa(s, zero, zero).value(), 0U);
}

TEST(Kappa, DimensionMismatch) {
    const Prime p(3);
    const ZpPair g1{ZpVector(p, {1}), ZpVector(p, {2})};
    const ZpPair g2{ZpVector(p, {2, 0}), ZpVector(p, {1, 0})};
    EXPECT_THROW(kappa(GroupSign::plus, g1, g2), std::invalid_argument);
}

TEST(Mul, Examples) {
    const Prime p(3);
    const ExtraspecialGroup g(p, 1, GroupSign::plus);
    for (auto s : both_signs) {
        for (std::size_t i = 0; i < g.order(); ++i) {
            const auto x = g.element(i);
            EXPECT_EQ(mul(s, ExtraspecialElement::identity(p, 1), x), x);
        }
    }
    EXPECT_EQ(mul(GroupSign::plus, elem(p, {1}, {1}, 0), elem(p, {1}, {0}, 0)), elem(p, {2}, {1}, 1));
    EXPECT_EQ(mul(GroupSign::minus, elem(p, {2}, {0}, 0), elem(p, {2}, {0}, 0)), elem(p, {1}, {0}, 1));
}

TEST(Mul, MismatchThrows) {
    EXPECT_THROW(mul(GroupSign::plus, elem(Prime(3), {1}, {1}, 0), elem(Prime(5), {1}, {1}, 0)),
                 std::invalid_argument);
}

TEST(Inv, Examples) {
    const Prime p(3);
    EXPECT_EQ(inv(GroupSign::plus, elem(p, {0}, {0}, 1)), elem(p, {0}, {0}, 2));
    EXPECT_EQ(inv(GroupSign::plus, elem(p, {1}, {2}, 0)), elem(p, {2}, {1}, 2));
}

TEST(Inv, ExhaustiveBothSides) {
    for (std::uint32_t pv : {3U, 5U}) {
        for (auto s : both_signs) {
            const ExtraspecialGroup g(Prime(pv), 1, s);
            const auto e = g.identity();
            for (std::size_t i = 0; i < g.order(); ++i) {
                const auto x = g.element(i);
                ASSERT_EQ(mul(s, x, inv(s, x)), e);
                ASSERT_EQ(mul(s, inv(s, x), x), e);
            }
        }
    }
}

TEST(Associativity, ExhaustiveP3D1) {
    for (auto s : both_signs) {
        const ExtraspecialGroup g(Prime(3), 1, s);
        const auto all = enumerate(g);
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) ASSERT_EQ(mul(s, mul(s, x, y), z), mul(s, x, mul(s, y, z)));
    }
}

TEST(Commutator, Examples) {
    const Prime p(3);
    for (auto s : both_signs) {
        const ExtraspecialGroup g(p, 1, s);
        for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(commutator(s, g.element(i), g.element(i)), g.identity());
    }
    EXPECT_EQ(commutator(GroupSign::plus, elem(p, {1}, {0}, 0), elem(p, {0}, {1}, 0)), elem(p, {0}, {0}, 2));
}

TEST(Commutator, ClosedFormAndSignAgreement) {
    for (std::uint32_t pv : {3U, 5U}) {
        for (std::size_t d : {1U, 2U}) {
            if (pv == 5 && d == 2) continue;
            const Prime p(pv);
            const ExtraspecialGroup plus(p, d, GroupSign::plus);
            const auto all = enumerate(plus);
            for (const auto& x : all) {
                for (const auto& y : all) {
                    const ExtraspecialElement closed{ZpVector(p, d), ZpVector(p, d), dot(x.b, y.a) - dot(x.a, y.b)};
                    ASSERT_EQ(commutator(GroupSign::plus, x, y), closed);
                    ASSERT_EQ(commutator(GroupSign::minus, x, y), closed);
                }
            }
        }
    }
}

TEST(Center, ExactlyTheZCoordinate) {
    for (std::uint32_t pv : {3U, 5U}) {
        for (auto s : both_signs) {
            const ExtraspecialGroup g(Prime(pv), 1, s);
            const auto all = enumerate(g);
            std::size_t central = 0;
            for (const auto& x : all) {
                bool commutes = true;
                for (const auto& y : all) {
                    if (!(mul(s, x, y) == mul(s, y, x))) {
                        commutes = false;
                        break;
                    }
                }
                EXPECT_EQ(commutes, x.is_central_coordinate_only()) << x;
                central += commutes;
            }
            EXPECT_EQ(central, pv);
        }
    }
}

TEST(Pow, ExponentPlusIsP) {
    for (std::uint32_t pv : {3U, 5U}) {
        const ExtraspecialGroup g(Prime(pv), 1, GroupSign::plus);
        for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(pow(GroupSign::plus, g.element(i), pv), g.identity());
    }
}

TEST(Pow, MinusGeneratorReachesCentre) {
    for (std::uint32_t pv : {3U, 5U, 7U}) {
        const Prime p(pv);
        for (std::size_t d : {1U, 2U, 3U}) {
            const auto v = ExtraspecialElement::lift({ZpVector::basis(p, d, 0), ZpVector(p, d)});
            ExtraspecialElement expected{ZpVector(p, d), ZpVector(p, d), ZpScalar(1, p)};
            EXPECT_EQ(pow(GroupSign::minus, v, pv), expected);
        }
    }
}

TEST(Pow, ZeroIsIdentity) {
    const auto g = elem(Prime(5), {3}, {2}, 4);
    for (auto s : both_signs) EXPECT_EQ(pow(s, g, 0), ExtraspecialElement::identity(Prime(5), 1));
}

TEST(Exponent, MaxOrderByGroup) {
    for (std::uint32_t pv : {3U, 5U}) {
        for (std::size_t d : {1U, 2U}) {
            for (auto s : both_signs) {
                const ExtraspecialGroup g(Prime(pv), d, s);
                std::uint64_t max_order = 0;
                std::map<std::uint64_t, std::size_t> histogram;
                for (std::size_t i = 0; i < g.order(); ++i) {
                    const auto o = element_order(s, g.element(i));
                    max_order = std::max(max_order, o);
                    ++histogram[o];
                }
                EXPECT_EQ(max_order, s == GroupSign::plus ? pv : pv * pv) << "p=" << pv << " d=" << d;
                EXPECT_EQ(histogram[1], 1U);
            }
        }
    }
}

TEST(Heisenberg, Beta) {
    const Prime two(2);
    EXPECT_EQ(beta(ZpVector::basis(two, 3, 0), ZpVector::basis(two, 3, 1)).value(), 1U);
    EXPECT_EQ(beta(ZpVector::basis(two, 3, 1), ZpVector::basis(two, 3, 0)).value(), 0U);
}

TEST(Heisenberg, Products) {
    const std::size_t d = 3;
    const auto e1 = HeisenbergElement::generator(d, 0), e2 = HeisenbergElement::generator(d, 1);
    const HeisenbergElement expected{ZpVector(Prime(2), {1, 1, 0}), ZpScalar(1, Prime(2))};
    EXPECT_EQ(heisenberg_mul(e1, e2), expected);
}

TEST(Heisenberg, GeneratorsAnticommute) {
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                if (i == j) continue;
                const auto ei = HeisenbergElement::generator(d, i), ej = HeisenbergElement::generator(d, j);
                const auto c = heisenberg_mul(heisenberg_mul(heisenberg_mul(ei, ej), heisenberg_inv(ei)), heisenberg_inv(ej));
                EXPECT_EQ(c, (HeisenbergElement{ZpVector(Prime(2), d), ZpScalar(1, Prime(2))}));
            }
        }
    }
}

TEST(Heisenberg, GroupAxioms) {
    const HeisenbergGroup h(3);
    const auto all = enumerate(h);
    for (const auto& x : all) {
        EXPECT_EQ(h.mul(x, h.inv(x)), h.identity());
        for (const auto& y : all)
            for (const auto& z : all) ASSERT_EQ(h.mul(h.mul(x, y), z), h.mul(x, h.mul(y, z)));
    }
}

TEST(Codec, ElementIndexRoundTrip) {
    const ExtraspecialGroup g(Prime(3), 2, GroupSign::minus);
    for (std::size_t i = 0; i < g.order(); ++i) ASSERT_EQ(g.index_of(g.element(i)), i);
    // a_1 is the most significant digit, z the least.
    EXPECT_EQ(g.index_of(elem(Prime(3), {1, 0}, {0, 0}, 0)), 81U);
    EXPECT_EQ(g.index_of(elem(Prime(3), {0, 0}, {0, 0}, 2)), 2U);
}

TEST(CocycleCheck, BothCocyclesPassExhaustively) {
    for (auto s : both_signs) {
        const auto r = cocycle_check(cocycle_function(s, 1), Prime(3), 2);
        EXPECT_TRUE(r.passed);
        EXPECT_TRUE(r.exhaustive);
        EXPECT_EQ(r.triples_checked, 729U);
    }
}

TEST(CocycleCheck, LargeDimensionSamples) {
    const auto r = cocycle_check(cocycle_function(GroupSign::minus, 2), Prime(5), 4);
    EXPECT_TRUE(r.passed);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.triples_checked, 100'000U);
}

TEST(CocycleCheck, PerturbedEntryIsCaughtWithWitness) {
    const Prime p(3);
    const auto base = cocycle_function(GroupSign::plus, 1);
    const ZpVector bad_u(p, {1, 2}), bad_v(p, {2, 1});
    const CocycleFn perturbed = [&](const ZpVector& u, const ZpVector& v) {
        auto k = base(u, v);
        if (u == bad_u && v == bad_v) k += ZpScalar(1, p);
        return k;
    };
    const auto r = cocycle_check(perturbed, p, 2);
    ASSERT_FALSE(r.passed);
    ASSERT_TRUE(r.witness.has_value());
    const auto& w = *r.witness;
    EXPECT_NE(perturbed(w[0] + w[1], w[2]) + perturbed(w[0], w[1]), perturbed(w[0], w[1] + w[2]) + perturbed(w[1], w[2]));

    // Brute-force: the witness is the first violating triple in enumeration order.
    const ElementaryAbelianGroup space(p, 2);
    std::optional<std::vector<ZpVector>> first;
    for (std::size_t i = 0; i < space.order() && !first; ++i)
        for (std::size_t j = 0; j < space.order() && !first; ++j)
            for (std::size_t k = 0; k < space.order() && !first; ++k) {
                const auto a = space.element(i), b = space.element(j), c = space.element(k);
                if (perturbed(a + b, c) + perturbed(a, b) != perturbed(a, b + c) + perturbed(b, c))
                    first = std::vector<ZpVector>{a, b, c};
            }
    ASSERT_TRUE(first.has_value());
    EXPECT_EQ(*first, w);
}
