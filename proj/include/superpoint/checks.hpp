#pragma once

/**
 * @file checks.hpp
 * @brief The property battery: sample module panels, seeded corpora and one
 *        check per acceptance criterion. Used by the acceptance binary and
 *        the check-suite verb.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "superpoint/random.hpp"
#include "superpoint/variety.hpp"

namespace superpoint::checks {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct SuiteOptions {
    double scale = 1.0;  // multiplies every corpus size
    VarietyOptions variety;

    std::size_t count(std::size_t full) const {
        return std::max<std::size_t>(1, static_cast<std::size_t>(static_cast<double>(full) * scale + 0.5));
    }
};

// ---------------------------------------------------------------- panels

inline GradedModule quotient_by_generator(const AlgebraPresentation& alg, const FiniteField& F, std::size_t gen) {
    return cyclic_quotient(alg, F, {AlgebraElement::generator(alg, F, gen)});
}

/// Nonzero vectors over F supported on the given positions, first nonzero entry 1.
inline std::vector<Vec> projective_vectors(const FiniteField& F, std::size_t length, const std::vector<std::size_t>& support) {
    std::vector<Vec> out;
    const std::size_t k = support.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= F.order();
    for (std::uint64_t code = 1; code < total; ++code) {
        const Vec digits = ::superpoint::detail::decode_point(code, F.order(), k);
        std::size_t lead = 0;
        while (digits[lead].is_zero()) ++lead;
        if (digits[lead] != kOne) continue;
        Vec v(length);
        for (std::size_t i = 0; i < k; ++i) v[support[i]] = digits[i];
        out.push_back(v);
    }
    return out;
}

/// Degree-2 Carlson modules for every nonzero even class up to scalar.
inline std::vector<GradedModule> carlson_panel(const AlgebraPresentation& alg, const FiniteField& F, std::size_t degree = 2) {
    const Resolution res = minimal_resolution(trivial_module(alg, F), degree);
    const auto& par = res.generator_parities[degree];
    std::vector<std::size_t> even;
    for (std::size_t g = 0; g < par.size(); ++g)
        if (par[g] == 0) even.push_back(g);
    std::vector<GradedModule> out;
    for (const auto& xi : projective_vectors(F, par.size(), even)) out.push_back(carlson_module(alg, F, {degree, xi}));
    return out;
}

/// k, kE, kE/(g) for every generator g, then the degree-2 Carlson modules.
inline std::vector<GradedModule> sample_panel(const AlgebraPresentation& alg, const FiniteField& F) {
    std::vector<GradedModule> out{trivial_module(alg, F), regular_module(alg, F)};
    for (std::size_t g = 0; g < alg.generator_count(); ++g) out.push_back(quotient_by_generator(alg, F, g));
    for (auto& L : carlson_panel(alg, F)) out.push_back(std::move(L));
    return out;
}

inline std::vector<AlgebraPresentation> corpus_algebras() {
    return {AlgebraPresentation::create(3, Family::Witt, 1, 2), AlgebraPresentation::create(3, Family::Witt, 2, 2),
            AlgebraPresentation::create(3, Family::ExteriorLike, 1), AlgebraPresentation::create(3, Family::ElemAbelian, 2)};
}

inline bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar c) { return c.is_zero(); });
}

inline std::string vec_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].code;
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------- random specs

/**
 * A random algebra map into Witt(3,1,2): f = f1 s + f2 s^2 + sum_{k>=3} f_k s^k,
 * g = g0 + g3 s^3 + sum_{k>=6} g_k s^k with f1^3 = g0^2 and f2^3 = 2 g0 g3.
 * These are exactly the constraints that make f^3 - g^2 s^3 a multiple of s^9
 * modulo s^10 when g1 = g2 = g4 = g5 = 0.
 */
inline AlgebraMapSpec random_witt_spec(::superpoint::detail::SeededRng& rng, const AlgebraPresentation& alg, const FiniteField& F) {
    if (alg.family() != Family::Witt || alg.n() != 1 || alg.p() != 3 || alg.m() != 2)
        fail(ErrorCode::BadParameters, "random specs are generated for Witt(3,1,2) only");
    AlgebraMapSpec spec{alg, F, {}, {}};
    auto put = [&](SPoly& poly, std::uint32_t e, Scalar c) {
        if (!c.is_zero()) poly[{e}] = c;
    };
    const Scalar g0 = rng.chance(0.8) ? rng.nonzero(F) : kZero;
    const Scalar g3 = rng.scalar(F);
    put(spec.g, 0, g0);
    put(spec.g, 3, g3);
    for (std::uint32_t k = 6; k < alg.bound(0); ++k)
        if (rng.chance(0.4)) put(spec.g, k, rng.scalar(F));
    put(spec.f, 1, F.pth_root(F.mul(g0, g0)));
    put(spec.f, 2, F.pth_root(F.mul(F.from_int(2), F.mul(g0, g3))));
    for (std::uint32_t k = 3; k < alg.bound(0); ++k)
        if (rng.chance(0.5)) put(spec.f, k, rng.scalar(F));
    return spec;
}

/// Random nonzero point of the right length.
inline PiPointRep random_point(::superpoint::detail::SeededRng& rng, const AlgebraPresentation& alg, const FiniteField& F) {
    PiPointRep a{alg.family(), F, Vec(point_length(alg))};
    while (a.is_zero())
        for (auto& c : a.coords) c = rng.chance(0.3) ? kZero : rng.scalar(F);
    return a;
}

// ---------------------------------------------------------------- criteria

namespace detail {

inline CheckResult run_guarded(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult r{name, true, ""};
    try {
        body(r);
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
    }
    return r;
}

inline void flag(CheckResult& r, const std::string& what) {
    if (r.ok) r.detail = what;
    r.ok = false;
}

}  // namespace detail

/// validate passes on random modules and on their tensor products, internal Homs and parity shifts.
inline CheckResult relation_suite(const SuiteOptions& opt) {
    return detail::run_guarded("relations", [&](CheckResult& r) {
        const auto F = FiniteField::create(3);
        const std::size_t count = opt.count(200);
        std::size_t checked = 0;
        for (const auto& alg : corpus_algebras())
            for (std::size_t i = 0; i < count && r.ok; ++i) {
                const auto M = module_random({2 * i, 6, alg, F});
                const auto N = module_random({2 * i + 1, 6, alg, F});
                const std::vector<std::pair<std::string, GradedModule>> items = {
                    {"M", M}, {"tensor", tensor(M, N)}, {"hom", internal_hom(M, N)}, {"shift", parity_shift(M)}};
                for (const auto& [what, X] : items) {
                    auto v = validate(X);
                    if (!v.empty()) detail::flag(r, alg.description() + " seed " + std::to_string(2 * i) + " " + what + ": " + v[0]);
                }
                ++checked;
            }
        if (r.ok) r.detail = std::to_string(checked) + " module pairs";
    });
}

/// Exact rank varieties of k, kE and kE/(sigma); the block matrix is square zero everywhere it is evaluated.
inline CheckResult rank_ground_truth(const SuiteOptions& opt) {
    return detail::run_guarded("rank-criterion", [&](CheckResult& r) {
        const auto F = FiniteField::create(3);
        for (const auto& alg : corpus_algebras()) {
            for (std::uint32_t e : {1u, 2u}) {
                const auto Vk = rank_variety(trivial_module(alg, F), e, opt.variety);
                const auto full = ::superpoint::detail::point_count(FiniteField::create(3, e).order(), point_length(alg),
                                                                    opt.variety.budget);
                if (Vk.points.size() != full) detail::flag(r, "V(k) is not the full space for " + alg.description());
                const auto VR = rank_variety(regular_module(alg, F), e, opt.variety);
                if (VR.points.size() != 1 || !is_zero_vec(VR.points[0]))
                    detail::flag(r, "V(kE) is not {0} for " + alg.description());
            }
        }
        const auto W = AlgebraPresentation::create(3, Family::Witt, 1, 2);
        const auto Q = quotient_by_generator(W, F, 1);
        for (std::uint32_t e : {1u, 2u}) {
            const auto K = FiniteField::create(3, e);
            std::vector<Vec> axis;
            for (std::uint32_t c = 0; c < K.order(); ++c) axis.push_back(Vec{Scalar{c}, kZero});
            std::sort(axis.begin(), axis.end());
            if (rank_variety(Q, e, opt.variety).points != axis)
                detail::flag(r, "V(kE/(sigma)) over F_" + std::to_string(K.order()) + " is not the a_2 = 0 axis");
        }
        if (r.ok) r.detail = "k, kE over four algebras and kE/(sigma) at e = 1, 2";
    });
}

/// Free modules have trivial varieties; non-free modules have a witness at some e <= 4.
inline CheckResult projectivity_detection(const SuiteOptions& opt) {
    return detail::run_guarded("projectivity", [&](CheckResult& r) {
        const auto F = FiniteField::create(3);
        const auto algs = corpus_algebras();
        const std::size_t count = opt.count(100);
        std::size_t frees = 0, witnessed = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const auto& alg = algs[i % algs.size()];
            const auto M = module_random({1000 + i, 12, alg, F});
            const std::string tag = alg.description() + " seed " + std::to_string(1000 + i);
            if (is_free(M)) {
                ++frees;
                for (std::uint32_t e : {1u, 2u})
                    if (rank_variety(M, e, opt.variety).points.size() != 1) detail::flag(r, tag + ": free module with nonzero variety");
            } else {
                const auto rep = is_projective(M, 4, opt.variety);
                if (rep.verdict != Verdict::NotProjective) detail::flag(r, tag + ": " + verdict_name(rep.verdict) + "(4)");
                else ++witnessed;
            }
        }
        if (r.ok) r.detail = std::to_string(frees) + " free, " + std::to_string(witnessed) + " non-free with witness";
    });
}

/// V over F_9 is stable under the scaling action and the sign flip of the last coordinate.
inline CheckResult homogeneity(const SuiteOptions& opt) {
    return detail::run_guarded("homogeneity", [&](CheckResult& r) {
        const auto F = FiniteField::create(3);
        const auto algs = corpus_algebras();
        const std::size_t count = opt.count(100);
        for (std::size_t i = 0; i < count && r.ok; ++i) {
            const auto& alg = algs[i % algs.size()];
            const auto M = module_random({1000 + i, 12, alg, F});
            const auto rep = homogeneity_check(M, 2, opt.variety);
            if (!rep.ok)
                detail::flag(r, alg.description() + " seed " + std::to_string(1000 + i) + ": image of " + vec_string(*rep.point) +
                                    " missing");
        }
        if (r.ok) r.detail = std::to_string(count) + " modules over F_9";
    });
}

/// V(M (x) N) and V(Hom(M, N)) equal V(M) and V(N) intersected, away from 0.
inline CheckResult support_formulas(const SuiteOptions& opt) {
    return detail::run_guarded("tensor-hom", [&](CheckResult& r) {
        const auto F = FiniteField::create(3);
        const std::size_t count = opt.count(50);
        std::size_t nontrivial = 0;
        for (const auto& alg : {AlgebraPresentation::create(3, Family::Witt, 1, 2), AlgebraPresentation::create(3, Family::ExteriorLike, 1)})
            for (std::size_t i = 0; i < count && r.ok; ++i) {
                const auto M = module_random({5000 + 2 * i, 6, alg, F});
                const auto N = module_random({5001 + 2 * i, 6, alg, F});
                for (std::uint32_t e : {1u, 2u}) {
                    const auto t = tensor_support_check(M, N, e, opt.variety);
                    const auto h = hom_support_check(M, N, e, opt.variety);
                    const std::string tag = alg.description() + " pair " + std::to_string(i) + " e=" + std::to_string(e);
                    if (!t.ok) detail::flag(r, tag + ": tensor support differs");
                    if (!h.ok) detail::flag(r, tag + ": hom support differs");
                    if (!t.intersection.empty()) ++nontrivial;
                }
            }
        if (r.ok) r.detail = std::to_string(2 * count) + " pairs, " + std::to_string(nontrivial) + " with nonempty intersection";
    });
}

inline CheckResult betti_numbers(const SuiteOptions&) {
    return detail::run_guarded("betti", [&](CheckResult& r) {
        const auto F = FiniteField::create(3);
        auto binom = [](std::uint64_t n, std::uint64_t k) {
            std::uint64_t v = 1;
            for (std::uint64_t i = 1; i <= k; ++i) v = v * (n - k + i) / i;
            return v;
        };
        struct Case {
            AlgebraPresentation alg;
            std::size_t top;
            std::uint64_t n;
        };
        const std::vector<Case> cases = {{AlgebraPresentation::create(3, Family::Witt, 1, 2), 6, 1},
                                         {AlgebraPresentation::create(3, Family::Witt, 2, 2), 4, 2},
                                         {AlgebraPresentation::create(3, Family::ElemAbelian, 1), 6, 0}};
        std::ostringstream os;
        for (const auto& c : cases) {
            const auto res = minimal_resolution(trivial_module(c.alg, F), c.top);
            os << c.alg.description() << ":";
            for (std::size_t i = 0; i <= c.top; ++i) {
                os << " " << res.ranks[i];
                if (res.ranks[i] != binom(i + c.n, c.n)) detail::flag(r, c.alg.description() + " degree " + std::to_string(i));
            }
            os << "; ";
        }
        if (r.ok) r.detail = os.str();
    });
}

/// Coefficient tuples of standard specs, and agreement of general and normalized restrictions.
inline CheckResult normalization(const SuiteOptions& opt) {
    return detail::run_guarded("normalization", [&](CheckResult& r) {
        const auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
        std::vector<std::pair<FiniteField, std::vector<GradedModule>>> panels;
        for (std::uint32_t e : {1u, 2u}) {
            const auto F = FiniteField::create(3, e);
            auto panel = sample_panel(alg, F);
            for (std::uint64_t s = 0; panel.size() < 20; ++s) panel.push_back(module_random({7000 + s, 8, alg, F}));
            panels.emplace_back(F, std::move(panel));
        }
        const std::size_t count = opt.count(100);
        std::size_t agreements = 0;
        for (std::size_t i = 0; i < count && r.ok; ++i) {
            const auto& [F, panel] = panels[i % 2];
            ::superpoint::detail::SeededRng rng(9000 + i);
            const auto a = random_point(rng, alg, F);
            if (coefficient_tuple(standard_spec(alg, a)) != frobenius_tuple(a))
                detail::flag(r, "standard spec at " + vec_string(a.coords) + " does not return F(a)");
            AlgebraMapSpec spec = random_witt_spec(rng, alg, F);
            while (!is_pi_point(spec)) spec = random_witt_spec(rng, alg, F);
            const auto rep = normalize(spec);
            if (frobenius_tuple(rep) != coefficient_tuple(spec)) detail::flag(r, "normalized point does not reproduce b");
            for (const auto& M : panel) {
                const bool general = max_image_test(general_restriction(M, spec), opt.variety.form);
                const bool standard = max_image_test(standard_restriction(M, rep), opt.variety.form);
                if (general != standard) detail::flag(r, "spec " + std::to_string(i) + " disagrees on a panel module");
                else ++agreements;
            }
        }
        if (r.ok) r.detail = std::to_string(count) + " specs, " + std::to_string(agreements) + " agreeing restrictions";
    });
}

/// Frobenius-image equality on F_9^2 minus 0, tested against the panel.
inline CheckResult equivalence(const SuiteOptions& opt) {
    return detail::run_guarded("equivalence", [&](CheckResult& r) {
        const auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
        const auto F = FiniteField::create(3, 2);
        std::vector<GradedModule> panel{trivial_module(alg, F), quotient_by_generator(alg, F, 1),
                                        quotient_by_generator(alg, F, 0)};
        for (auto& L : carlson_panel(alg, F)) panel.push_back(std::move(L));
        std::vector<PiPointRep> pts;
        for (std::uint32_t c = 1; c < F.order() * F.order(); ++c)
            pts.push_back({alg.family(), F, ::superpoint::detail::decode_point(c, F.order(), 2)});
        const std::size_t N = pts.size();
        std::vector<std::vector<bool>> outcome(N);
        for (std::size_t i = 0; i < N; ++i)
            for (const auto& M : panel) outcome[i].push_back(max_image_test(standard_restriction(M, pts[i]), opt.variety.form));
        std::vector<std::vector<char>> eq(N, std::vector<char>(N));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) eq[i][j] = equivalent(pts[i], pts[j]);
        std::size_t classes = 0;
        for (std::size_t i = 0; i < N; ++i) {
            if (!eq[i][i]) detail::flag(r, "not reflexive at " + vec_string(pts[i].coords));
            bool first = true;
            for (std::size_t j = 0; j < N; ++j) {
                if (eq[i][j] != eq[j][i]) detail::flag(r, "not symmetric");
                if (eq[i][j] && j < i) first = false;
                if (eq[i][j] && outcome[i] != outcome[j])
                    detail::flag(r, "equivalent points " + vec_string(pts[i].coords) + ", " + vec_string(pts[j].coords) + " disagree");
                if (!eq[i][j] && outcome[i] == outcome[j])
                    detail::flag(r, "no panel module separates " + vec_string(pts[i].coords) + " and " + vec_string(pts[j].coords));
                for (std::size_t k = 0; k < N && eq[i][j]; ++k)
                    if (eq[j][k] && !eq[i][k]) detail::flag(r, "not transitive");
            }
            if (first) ++classes;
        }
        if (r.ok) r.detail = std::to_string(N) + " points, " + std::to_string(classes) + " classes, panel of " + std::to_string(panel.size());
    });
}

/// Carlson modules for every even class on F_2 over F_3, and the tensor formula for two of them.
inline CheckResult carlson_modules(const SuiteOptions& opt) {
    return detail::run_guarded("carlson", [&](CheckResult& r) {
        const auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
        const auto F = FiniteField::create(3);
        const auto k = trivial_module(alg, F);
        const Resolution res = minimal_resolution(k, 2);
        const auto& par = res.generator_parities[2];
        std::vector<std::size_t> even;
        for (std::size_t g = 0; g < par.size(); ++g)
            if (par[g] == 0) even.push_back(g);
        std::size_t classes = 0;
        std::vector<std::pair<GradedModule, RankVariety>> modules;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < even.size(); ++i) total *= F.order();
        for (std::uint64_t code = 1; code < total; ++code) {
            const Vec digits = ::superpoint::detail::decode_point(code, F.order(), even.size());
            Vec xi(par.size());
            for (std::size_t i = 0; i < even.size(); ++i) xi[even[i]] = digits[i];
            const auto cd = carlson_data(alg, F, {2, xi});
            const std::string tag = "class " + vec_string(xi);
            if (cd.module.dim() + 1 != cd.omega.dim()) detail::flag(r, tag + ": wrong dimension");
            if (!validate(cd.module).empty()) detail::flag(r, tag + ": invalid module");
            const bool exact = rank(F, cd.inclusion) == cd.module.dim() && rank(F, cd.projection) == 1 &&
                               mul(F, cd.projection, cd.inclusion).is_zero() &&
                               ModuleMap{cd.module, cd.omega, cd.inclusion, 0}.is_homomorphism() &&
                               ModuleMap{cd.omega, k, cd.projection, 0}.is_homomorphism();
            if (!exact) detail::flag(r, tag + ": sequence is not exact");
            ++classes;
            if (modules.size() < 2) {
                const auto L = base_change(cd.module, 2);
                auto V = rank_variety(L, 2, opt.variety);
                if (modules.empty() || V != modules[0].second) modules.emplace_back(L, std::move(V));
            }
        }
        if (modules.size() < 2) return detail::flag(r, "no two classes with distinct varieties");
        const auto rep = ::superpoint::detail::compare_support(rank_variety(tensor(modules[0].first, modules[1].first), 2, opt.variety),
                                                 modules[0].second, modules[1].second);
        if (!rep.ok) detail::flag(r, "tensor of two Carlson modules has the wrong support");
        if (r.ok)
            r.detail = std::to_string(classes) + " classes, dim L = " + std::to_string(modules[0].first.dim()) + ", |V(L (x) L')| = " +
                       std::to_string(rep.combined.size() + 1);
    });
}

/// Perturbing T by beta*gamma with gamma^3 = 0 keeps the maximal-image outcome.
inline CheckResult hopf_change(const SuiteOptions& opt) {
    return detail::run_guarded("perturbation", [&](CheckResult& r) {
        const auto alg = AlgebraPresentation::create(3, Family::Witt, 2, 2);
        const auto F = FiniteField::create(3);
        const std::size_t count = opt.count(200);
        std::size_t finite = 0;
        for (std::size_t i = 0; i < count && r.ok; ++i) {
            ::superpoint::detail::SeededRng rng(20000 + i);
            const auto M = module_random({20000 + i, 10, alg, F});
            const auto a = random_point(rng, alg, F);
            const auto base = standard_restriction(M, a);
            auto random_poly = [&](std::uint32_t min_s1) {
                SPoly poly;
                for (int t = 0; t < 3; ++t) {
                    const std::vector<std::uint32_t> e{static_cast<std::uint32_t>(min_s1 + rng.below(3 - min_s1)),
                                                       static_cast<std::uint32_t>(rng.below(alg.bound(1)))};
                    poly[e] = rng.nonzero(F);
                }
                return poly;
            };
            const Mat gamma = ::superpoint::detail::evaluate(M, random_poly(1));  // a multiple of S_1, so gamma^3 = 0
            const Mat beta = ::superpoint::detail::evaluate(M, random_poly(0));
            RestrictedAction perturbed = base;
            perturbed.T = add(F, base.T, mul(F, beta, gamma));
            ::superpoint::detail::check_restriction(perturbed);
            if (!power(F, gamma, 3).is_zero() || !power(F, base.T, 9).is_zero()) detail::flag(r, "nilpotency hypotheses fail");
            const bool x = max_image_test(base, BlockForm::Theorem), y = max_image_test(perturbed, BlockForm::Theorem);
            if (x != y) detail::flag(r, "seed " + std::to_string(20000 + i) + ": outcomes differ");
            finite += x;
        }
        if (r.ok) r.detail = std::to_string(count) + " tuples, " + std::to_string(finite) + " with maximal image";
    });
}

/// Extra invariants: union over direct sums, invariance under parity shift, free modules are projective.
inline CheckResult variety_algebra(const SuiteOptions& opt) {
    return detail::run_guarded("variety-structure", [&](CheckResult& r) {
        const auto F = FiniteField::create(3);
        const auto algs = corpus_algebras();
        const std::size_t count = opt.count(40);
        for (std::size_t i = 0; i < count && r.ok; ++i) {
            const auto& alg = algs[i % algs.size()];
            const auto M = module_random({30000 + 2 * i, 6, alg, F});
            const auto N = module_random({30001 + 2 * i, 6, alg, F});
            for (std::uint32_t e : {1u, 2u}) {
                const auto VM = rank_variety(M, e, opt.variety), VN = rank_variety(N, e, opt.variety);
                std::vector<Vec> uni;
                std::set_union(VM.points.begin(), VM.points.end(), VN.points.begin(), VN.points.end(), std::back_inserter(uni));
                if (rank_variety(direct_sum(M, N), e, opt.variety).points != uni) detail::flag(r, "direct sum is not the union");
                if (rank_variety(parity_shift(M), e, opt.variety) != VM) detail::flag(r, "parity shift changes the variety");
            }
        }
        if (r.ok) r.detail = std::to_string(count) + " pairs";
    });
}

inline std::vector<std::function<CheckResult(const SuiteOptions&)>> criteria() {
    return {relation_suite, rank_ground_truth, projectivity_detection, homogeneity, support_formulas,
            betti_numbers,  normalization,     equivalence,            carlson_modules, hopf_change};
}

inline std::vector<CheckResult> run_suite(const SuiteOptions& opt) {
    std::vector<CheckResult> out;
    for (const auto& c : criteria()) out.push_back(c(opt));
    out.push_back(variety_algebra(opt));
    return out;
}

}  // namespace superpoint::checks
