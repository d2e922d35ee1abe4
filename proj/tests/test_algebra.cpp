#include <gtest/gtest.h>

#include <map>
#include <random>

#include "superpoint/module.hpp"

using namespace superpoint;

namespace {

// Independent product: expand in k[s, sigma], then rewrite sigma^2 and truncate.
using Poly = std::map<std::pair<std::vector<std::uint32_t>, std::uint32_t>, Scalar>;

Poly to_poly(const AlgebraElement& x) {
    Poly out;
    for (auto [idx, c] : x.terms()) out[{x.algebra().monomial(idx).exps, x.algebra().monomial(idx).eps}] = c;
    return out;
}

AlgebraElement reference_product(const AlgebraElement& x, const AlgebraElement& y) {
    const auto& alg = x.algebra();
    const auto& F = x.field();
    AlgebraElement out(alg, F);
    for (const auto& [mx, cx] : to_poly(x))
        for (const auto& [my, cy] : to_poly(y)) {
            std::vector<std::uint32_t> e(alg.n());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = mx.first[i] + my.first[i];
            std::uint32_t eps = mx.second + my.second;
            if (eps >= 2) {
                if (alg.family() == Family::ExteriorLike) continue;
                e[alg.n() - 1] += alg.p() * (eps / 2);
                eps %= 2;
            }
            bool dead = false;
            for (std::size_t i = 0; i < e.size(); ++i) dead = dead || e[i] >= alg.bound(i);
            if (dead) continue;
            const auto idx = alg.index_of(Monomial{e, eps});
            if (!idx) {
                ADD_FAILURE() << "product left the basis";
                continue;
            }
            out.set(*idx, F.add(out.coeff(*idx), F.mul(cx, cy)));
        }
    return out;
}

AlgebraElement random_element(std::mt19937_64& rng, const AlgebraPresentation& alg, const FiniteField& F) {
    AlgebraElement x(alg, F);
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (rng() % 3 == 0) x.set(i, Scalar{static_cast<std::uint32_t>(rng() % F.order())});
    return x;
}

std::vector<AlgebraPresentation> sample_algebras() {
    return {AlgebraPresentation::create(3, Family::Witt, 1, 2), AlgebraPresentation::create(3, Family::Witt, 2, 2),
            AlgebraPresentation::create(3, Family::ExteriorLike, 1), AlgebraPresentation::create(3, Family::ExteriorLike, 0),
            AlgebraPresentation::create(3, Family::ElemAbelian, 2), AlgebraPresentation::create(5, Family::Witt, 1, 2),
            AlgebraPresentation::create(3, Family::Witt, 1, 3)};
}

}  // namespace

TEST(Algebra, Dimensions) {
    EXPECT_EQ(AlgebraPresentation::create(3, Family::Witt, 1, 2).dim(), 18u);
    EXPECT_EQ(AlgebraPresentation::create(3, Family::ExteriorLike, 1).dim(), 6u);
    EXPECT_EQ(AlgebraPresentation::create(3, Family::ElemAbelian, 2).dim(), 9u);
    // closed forms 2 p^{n-1+m}, 2 p^n, p^n
    for (std::uint32_t p : {3u, 5u})
        for (std::uint32_t n = 1; n <= 2; ++n)
            for (std::uint32_t m = 2; m <= 3; ++m) {
                std::size_t expect = 2;
                for (std::uint32_t i = 0; i < n - 1 + m; ++i) expect *= p;
                EXPECT_EQ(AlgebraPresentation::create(p, Family::Witt, n, m).dim(), expect);
            }
    EXPECT_EQ(AlgebraPresentation::create(5, Family::ExteriorLike, 2).dim(), 50u);
    EXPECT_EQ(AlgebraPresentation::create(5, Family::ElemAbelian, 3).dim(), 125u);
}

TEST(Algebra, RejectsBadParameters) {
    auto expect_code = [](auto fn, ErrorCode code) {
        try {
            fn();
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), code);
        }
    };
    expect_code([] { AlgebraPresentation::create(3, Family::Witt, 1, 1); }, ErrorCode::BadParameters);
    expect_code([] { AlgebraPresentation::create(3, Family::Witt, 0, 2); }, ErrorCode::BadParameters);
    expect_code([] { AlgebraPresentation::create(3, Family::ElemAbelian, 0); }, ErrorCode::BadParameters);
    expect_code([] { AlgebraPresentation::create(2, Family::ElemAbelian, 1); }, ErrorCode::CompositeP);
}

TEST(Algebra, BasisOrderIsLexicographic) {
    for (const auto& alg : sample_algebras()) {
        for (std::size_t i = 0; i + 1 < alg.dim(); ++i) {
            auto a = alg.monomial(i), b = alg.monomial(i + 1);
            EXPECT_LT(std::make_pair(a.exps, a.eps), std::make_pair(b.exps, b.eps));
        }
        for (std::size_t i = 0; i < alg.dim(); ++i) EXPECT_EQ(alg.index_of(alg.monomial(i)), i);
    }
}

TEST(Algebra, ProductExamples) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    auto F = FiniteField::create(3);
    const auto sigma = AlgebraElement::generator(alg, F, 1);
    const auto s = AlgebraElement::generator(alg, F, 0);
    EXPECT_EQ(multiply(sigma, sigma), s.pow(3));
    EXPECT_EQ(multiply(s.pow(8), s), AlgebraElement(alg, F));
    EXPECT_EQ(multiply(sigma, sigma).to_string(), "s1^3");

    auto ext = AlgebraPresentation::create(3, Family::ExteriorLike, 1);
    const auto tau = AlgebraElement::generator(ext, F, 1);
    EXPECT_TRUE(multiply(tau, tau).is_zero());

    try {
        multiply(s, tau);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::AlgebraMismatch);
    }
}

TEST(Algebra, ProductMatchesReferenceAndIsAssociativeCommutative) {
    std::mt19937_64 rng(1);
    for (const auto& alg : sample_algebras()) {
        for (std::uint32_t e : {1u, 2u}) {
            auto F = FiniteField::create(alg.p(), e);
            for (int t = 0; t < 10; ++t) {
                const auto x = random_element(rng, alg, F), y = random_element(rng, alg, F), z = random_element(rng, alg, F);
                EXPECT_EQ(x * y, reference_product(x, y)) << alg.description();
                EXPECT_EQ(x * y, y * x);
                EXPECT_EQ((x * y) * z, x * (y * z));
                EXPECT_EQ(x * (y + z), x * y + x * z);
            }
        }
    }
}

TEST(Algebra, ExhaustiveMonomialAssociativity) {
    for (const auto& alg : sample_algebras()) {
        if (alg.dim() > 18) continue;
        for (std::size_t a = 0; a < alg.dim(); ++a)
            for (std::size_t b = 0; b < alg.dim(); ++b) {
                EXPECT_EQ(alg.product(a, b), alg.product(b, a));
                for (std::size_t c = 0; c < alg.dim(); ++c) {
                    auto ab = alg.product(a, b);
                    auto bc = alg.product(b, c);
                    auto left = ab ? alg.product(*ab, c) : std::nullopt;
                    auto right = bc ? alg.product(a, *bc) : std::nullopt;
                    ASSERT_EQ(left, right);
                }
            }
    }
}

TEST(Algebra, RegularModuleExamples) {
    auto F = FiniteField::create(3);
    {
        auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
        auto R = regular_module(alg, F);
        EXPECT_EQ(R.dim(), 18u);
        EXPECT_EQ(mul(F, *R.sigma, *R.sigma), power(F, R.s[0], 3));
        EXPECT_TRUE(validate(R).empty());
    }
    {
        auto alg = AlgebraPresentation::create(3, Family::ElemAbelian, 1);
        auto R = regular_module(alg, F);
        Mat J(3, 3);
        J(1, 0) = kOne;
        J(2, 1) = kOne;
        EXPECT_EQ(R.s[0], J);
        EXPECT_FALSE(R.sigma.has_value());
    }
    {
        auto alg = AlgebraPresentation::create(3, Family::ExteriorLike, 0);
        auto R = regular_module(alg, F);
        Mat S(2, 2);
        S(1, 0) = kOne;
        EXPECT_EQ(*R.sigma, S);
        EXPECT_EQ(R.parity, (std::vector<std::uint32_t>{0, 1}));
    }
    for (const auto& alg : sample_algebras()) {
        auto R = regular_module(alg, FiniteField::create(alg.p(), 2));
        EXPECT_TRUE(validate(R).empty()) << alg.description();
    }
    try {
        regular_module(AlgebraPresentation::create(3, Family::Witt, 1, 2), FiniteField::create(5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::CharacteristicMismatch);
    }
}
