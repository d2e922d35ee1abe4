#include <gtest/gtest.h>

#include "superpoint/random.hpp"
#include "superpoint/variety.hpp"

using namespace superpoint;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// d o d = 0, minimality, exactness, and surjectivity of the cover.
void expect_resolution_invariants(const Resolution& res) {
    const auto& F = res.module.field;
    const std::size_t d = res.module.alg.dim();
    EXPECT_EQ(rank(F, res.maps[0]), res.module.dim());
    for (std::size_t j = 1; j < res.maps.size(); ++j) {
        EXPECT_TRUE(mul(F, res.maps[j - 1], res.maps[j]).is_zero()) << "d o d at " << j;
        for (const auto& v : res.images[j])
            for (std::size_t g = 0; g < res.ranks[j - 1]; ++g) EXPECT_TRUE(v[g * d].is_zero()) << "non-minimal at " << j;
        const std::size_t kernel = res.maps[j - 1].cols() - rank(F, res.maps[j - 1]);
        EXPECT_EQ(rank(F, res.maps[j]), kernel) << "not exact at " << j - 1;
    }
    for (std::size_t j = 0; j < res.maps.size(); ++j) {
        const GradedModule src = res.free(j);
        const GradedModule tgt = j == 0 ? res.module : res.free(j - 1);
        EXPECT_TRUE((ModuleMap{src, tgt, res.maps[j], 0}.is_homomorphism())) << "step " << j;
    }
}

}  // namespace

TEST(Resolution, TrivialModuleOverCyclicGroup) {
    auto F = FiniteField::create(3);
    auto alg = AlgebraPresentation::create(3, Family::ElemAbelian, 1);
    auto res = minimal_resolution(trivial_module(alg, F), 6);
    EXPECT_EQ(res.ranks, (std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1}));
    expect_resolution_invariants(res);
    // differentials alternate between multiplication by s and by s^2 (up to unit scalars)
    for (std::size_t j = 1; j <= 6; ++j) {
        const auto dj = res.differential(j);
        const auto terms = dj[0][0].terms();
        ASSERT_EQ(terms.size(), 1u);
        EXPECT_EQ(alg.monomial(terms[0].first).exps[0], j % 2 == 1 ? 1u : 2u);
    }
}

TEST(Resolution, BettiNumbersMatchHilbertSeries) {
    auto F = FiniteField::create(3);
    struct Case {
        AlgebraPresentation alg;
        std::size_t top;
        std::uint64_t poly_vars;  // Betti numbers are C(i + v - 1, v - 1)
    };
    std::vector<Case> cases = {
        {AlgebraPresentation::create(3, Family::Witt, 1, 2), 6, 2},
        {AlgebraPresentation::create(3, Family::Witt, 2, 2), 5, 3},
        {AlgebraPresentation::create(3, Family::Witt, 1, 3), 4, 2},
        {AlgebraPresentation::create(3, Family::ExteriorLike, 0), 5, 1},
        {AlgebraPresentation::create(3, Family::ExteriorLike, 1), 5, 2},
        {AlgebraPresentation::create(3, Family::ExteriorLike, 2), 4, 3},
        {AlgebraPresentation::create(3, Family::ElemAbelian, 1), 6, 1},
        {AlgebraPresentation::create(3, Family::ElemAbelian, 2), 5, 2},
    };
    for (const auto& c : cases) {
        auto res = minimal_resolution(trivial_module(c.alg, F), c.top);
        for (std::size_t i = 0; i <= c.top; ++i)
            EXPECT_EQ(res.ranks[i], binom(i + c.poly_vars - 1, c.poly_vars - 1)) << c.alg.description() << " i=" << i;
        expect_resolution_invariants(res);
        EXPECT_EQ(betti(trivial_module(c.alg, F), 2), res.ranks[2]);
    }
}

TEST(Resolution, FreeModulesHaveNoHigherSyzygies) {
    auto F = FiniteField::create(3, 2);
    for (auto alg : {AlgebraPresentation::create(3, Family::Witt, 1, 2), AlgebraPresentation::create(3, Family::ElemAbelian, 2)}) {
        auto R = regular_module(alg, F);
        auto res = minimal_resolution(R, 3);
        EXPECT_EQ(res.ranks, (std::vector<std::size_t>{1, 0, 0, 0}));
        EXPECT_EQ(syzygy(R, 1).dim(), 0u);
        EXPECT_EQ(syzygy(R, 2).dim(), 0u);
    }
}

TEST(Resolution, RandomModulesResolveExactly) {
    for (auto alg : {AlgebraPresentation::create(3, Family::Witt, 1, 2), AlgebraPresentation::create(3, Family::ExteriorLike, 1),
                     AlgebraPresentation::create(3, Family::ElemAbelian, 2)}) {
        auto F = FiniteField::create(3);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            RandomModuleSpec spec{seed, 8, alg, F};
            auto M = module_random(spec);
            auto res = minimal_resolution(M, 3);
            expect_resolution_invariants(res);
            // parities of generators match the parities of their images
            for (std::size_t g = 0; g < res.ranks[0]; ++g) {
                const auto& v = res.images[0][g];
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (!v[i].is_zero()) EXPECT_EQ(M.parity[i], res.generator_parities[0][g]);
            }
        }
    }
}

TEST(Resolution, SyzygyDimensions) {
    auto F = FiniteField::create(3);
    auto ea = AlgebraPresentation::create(3, Family::ElemAbelian, 1);
    auto O1 = syzygy(trivial_module(ea, F), 1);
    EXPECT_EQ(O1.dim(), 2u);
    EXPECT_TRUE(validate(O1).empty());

    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    auto k = trivial_module(alg, F);
    auto res = minimal_resolution(k, 5);
    std::size_t prev = 1;  // dim Omega^0 = dim k
    for (std::size_t j = 0; j <= 4; ++j) {
        auto O = syzygy_from(res, j + 1);
        EXPECT_TRUE(validate(O).empty());
        EXPECT_EQ(O.dim(), res.ranks[j] * alg.dim() - prev);
        prev = O.dim();
    }
}

TEST(Resolution, CarlsonModuleOverExteriorRankZero) {
    auto F = FiniteField::create(3);
    auto alg = AlgebraPresentation::create(3, Family::ExteriorLike, 0);
    auto cd = carlson_data(alg, F, {2, Vec{kOne}});
    EXPECT_EQ(cd.omega.dim(), 1u);
    EXPECT_EQ(cd.module.dim(), 0u);
    EXPECT_EQ(cd.projection, Mat::identity(1));
}

TEST(Resolution, CarlsonSequenceIsExact) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    auto F = FiniteField::create(3);
    auto res = minimal_resolution(trivial_module(alg, F), 4);
    for (std::size_t deg : {2u, 4u}) {
        const auto& par = res.generator_parities[deg];
        for (std::uint64_t mask = 1; mask < 9; ++mask) {
            Vec xi(par.size());
            std::uint64_t m = mask;
            for (std::size_t g = 0; g < par.size(); ++g)
                if (par[g] == 0) {
                    xi[g] = Scalar{static_cast<std::uint32_t>(m % 3)};
                    m /= 3;
                }
            bool zero = true;
            for (auto c : xi) zero = zero && c.is_zero();
            if (zero) continue;
            auto cd = carlson_data(alg, F, {deg, xi});
            EXPECT_EQ(cd.module.dim() + 1, cd.omega.dim());
            EXPECT_TRUE(validate(cd.module).empty());
            // 0 -> L -> Omega -> k -> 0
            EXPECT_EQ(rank(F, cd.inclusion), cd.module.dim());
            EXPECT_EQ(rank(F, cd.projection), 1u);
            EXPECT_TRUE(mul(F, cd.projection, cd.inclusion).is_zero());
            EXPECT_TRUE((ModuleMap{cd.module, cd.omega, cd.inclusion, 0}.is_homomorphism()));
            EXPECT_TRUE((ModuleMap{cd.omega, trivial_module(alg, F), cd.projection, 0}.is_homomorphism()));
        }
    }
}

TEST(Resolution, CarlsonErrors) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    auto F = FiniteField::create(3);
    auto res = minimal_resolution(trivial_module(alg, F), 2);
    const auto& par = res.generator_parities[2];
    Vec zero(par.size());
    try {
        carlson_module(alg, F, {2, zero});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroClass);
    }
    Vec odd(par.size());
    for (std::size_t g = 0; g < par.size(); ++g)
        if (par[g] == 1) odd[g] = kOne;
    try {
        carlson_module(alg, F, {2, odd});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OddInternalDegree);
    }
    EXPECT_THROW(carlson_module(alg, F, {3, Vec(4)}), Error);
}

TEST(Resolution, DistinctClassesGiveDistinctVarieties) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    auto F = FiniteField::create(3);
    auto res = minimal_resolution(trivial_module(alg, F), 2);
    const auto& par = res.generator_parities[2];
    std::vector<std::size_t> even;
    for (std::size_t g = 0; g < par.size(); ++g)
        if (par[g] == 0) even.push_back(g);
    ASSERT_EQ(even.size(), 2u);
    Vec xi(par.size()), eta(par.size());
    xi[even[0]] = kOne;
    eta[even[1]] = kOne;
    auto L1 = base_change(carlson_module(alg, F, {2, xi}), 2);
    auto L2 = base_change(carlson_module(alg, F, {2, eta}), 2);
    auto V1 = rank_variety(L1, 2), V2 = rank_variety(L2, 2);
    EXPECT_NE(V1.points, V2.points);
    EXPECT_GT(V1.points.size(), 1u);
    EXPECT_GT(V2.points.size(), 1u);
}
