#pragma once

/**
 * @file variety.hpp
 * @brief Maximal-image test, rank varieties over finite fields, support
 *        sets, the projectivity verdict, and the support formulas.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "superpoint/pipoint.hpp"

namespace superpoint {

/// Which 2x2 block operator to test. `Printed` is the variant [[Tau, T], [-T, -Tau]], kept for comparison only.
enum class BlockForm { Theorem, Printed };

inline Mat rank_block(const RestrictedAction& r, BlockForm form = BlockForm::Theorem) {
    const auto& F = r.field;
    const Mat lower = form == BlockForm::Theorem ? power(F, r.T, F.characteristic() - 1) : r.T;
    return block2x2(r.Tau, r.T, neg(F, lower), neg(F, r.Tau));
}

/**
 * True when the square-zero operator [[Tau, T], [-T^{p-1}, -Tau]] on M^2
 * has rank dim M, i.e. image equal to kernel.
 */
inline bool max_image_test(const RestrictedAction& r, BlockForm form = BlockForm::Theorem) {
    const auto& F = r.field;
    if (form == BlockForm::Theorem) {
        // The block squares to zero exactly when T and Tau commute and Tau^2 = T^p.
        if (!(mul(F, r.T, r.Tau) == mul(F, r.Tau, r.T)) || !(mul(F, r.Tau, r.Tau) == power(F, r.T, F.characteristic())))
            fail(ErrorCode::RelationViolation, "block operator does not square to zero");
    }
    return rank(F, rank_block(r, form)) == r.dim();
}

struct VarietyOptions {
    std::uint64_t budget = 10'000'000;
    bool parallel = false;
    unsigned threads = 0;  // 0: hardware concurrency
    BlockForm form = BlockForm::Theorem;
};

struct RankVariety {
    FiniteField field;
    std::vector<Vec> points;  // sorted, includes 0

    bool contains(const Vec& a) const { return std::binary_search(points.begin(), points.end(), a); }
    friend bool operator==(const RankVariety&, const RankVariety&) = default;
};

namespace detail {

/// Module in the enumeration field F_{p^e}; M's own field when degrees agree.
inline GradedModule module_over_degree(const GradedModule& M, std::uint32_t e) {
    if (e < 1) fail(ErrorCode::BadParameters, "enumeration degree must be at least 1");
    if (e == M.field.degree()) return M;
    if (e % M.field.degree() != 0)
        fail(ErrorCode::FieldMismatch, "module field degree " + std::to_string(M.field.degree()) +
                                           " does not divide enumeration degree " + std::to_string(e));
    return base_change_to(M, FiniteField::create(M.field.characteristic(), e));
}

inline std::uint64_t point_count(std::uint32_t q, std::size_t len, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
        total *= q;
        if (total > budget)
            fail(ErrorCode::BudgetExceeded, "enumeration needs more than " + std::to_string(budget) + " points");
    }
    return total;
}

inline Vec decode_point(std::uint64_t idx, std::uint32_t q, std::size_t len) {
    Vec a(len);
    for (std::size_t i = len; i-- > 0;) {
        a[i] = Scalar{static_cast<std::uint32_t>(idx % q)};
        idx /= q;
    }
    return a;
}

// Precomputed per-module data for evaluating many standard restrictions.
class RestrictionEvaluator {
public:
    explicit RestrictionEvaluator(const GradedModule& M) : M_(M) {
        const auto& alg = M.alg;
        if (alg.family() == Family::Witt) {
            const std::uint32_t n = alg.n();
            top_ = power(M.field, M.s[n - 1], alg.bound(n - 1) / alg.p());
        }
    }

    RestrictedAction at(const Vec& a) const {
        const auto& F = M_.field;
        const auto& alg = M_.alg;
        const std::uint32_t n = alg.n();
        const std::size_t d = M_.dim();
        RestrictedAction r{F, M_.parity, Mat(d, d), Mat(d, d)};
        switch (alg.family()) {
            case Family::Witt:
                for (std::uint32_t i = 0; i + 1 < n; ++i) accumulate(F, r.T, a[i], M_.s[i]);
                accumulate(F, r.T, a[n - 1], top_);
                accumulate(F, r.T, F.mul(a[n], a[n]), M_.s[n - 1]);
                accumulate(F, r.Tau, F.pow(a[n], alg.p()), *M_.sigma);
                break;
            case Family::ExteriorLike:
                for (std::uint32_t i = 0; i < n; ++i) accumulate(F, r.T, a[i], M_.s[i]);
                accumulate(F, r.Tau, a[n], *M_.sigma);
                break;
            case Family::ElemAbelian:
                for (std::uint32_t i = 0; i < n; ++i) accumulate(F, r.T, a[i], M_.s[i]);
                break;
        }
        return r;
    }

    bool in_variety(const Vec& a, BlockForm form) const {
        bool zero = true;
        for (auto c : a) zero = zero && c.is_zero();
        if (zero) return true;
        return !max_image_test(at(a), form);
    }

private:
    const GradedModule& M_;
    Mat top_;
};

}  // namespace detail

/// All a in F_{p^e}^{n+1} (F_{p^e}^n for elementary abelian algebras) where the maximal-image test fails.
inline RankVariety rank_variety(const GradedModule& M, std::uint32_t e, const VarietyOptions& opt = {}) {
    check_shape(M);
    const GradedModule Me = detail::module_over_degree(M, e);
    const std::size_t len = point_length(M.alg);
    const std::uint32_t q = Me.field.order();
    const std::uint64_t total = detail::point_count(q, len, opt.budget);
    const detail::RestrictionEvaluator eval(Me);

    auto scan = [&](std::uint64_t begin, std::uint64_t end, std::vector<Vec>& out) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            Vec a = detail::decode_point(idx, q, len);
            if (eval.in_variety(a, opt.form)) out.push_back(std::move(a));
        }
    };

    RankVariety V;
    V.field = Me.field;
    unsigned workers = 1;
    if (opt.parallel) {
        workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    }
    if (workers <= 1) {
        scan(0, total, V.points);
    } else {
        std::vector<std::vector<Vec>> parts(workers);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t b = std::min(total, w * chunk);
            const std::uint64_t en = std::min(total, b + chunk);
            pool.emplace_back([&, b, en, w] { scan(b, en, parts[w]); });
        }
        for (auto& t : pool) t.join();
        for (auto& part : parts)
            for (auto& a : part) V.points.push_back(std::move(a));
    }
    std::sort(V.points.begin(), V.points.end());
    return V;
}

/// A nonzero point of the rank variety over F_{p^e}: the unit vectors e_1, .., e_len first, then enumeration order.
inline std::optional<Vec> find_witness(const GradedModule& M, std::uint32_t e, const VarietyOptions& opt = {}) {
    const GradedModule Me = detail::module_over_degree(M, e);
    const std::size_t len = point_length(M.alg);
    const std::uint32_t q = Me.field.order();
    const std::uint64_t total = detail::point_count(q, len, opt.budget);
    const detail::RestrictionEvaluator eval(Me);
    for (std::size_t i = 0; i < len; ++i) {
        Vec a(len);
        a[i] = kOne;
        if (eval.in_variety(a, opt.form)) return a;
    }
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Vec a = detail::decode_point(idx, q, len);
        if (eval.in_variety(a, opt.form)) return a;
    }
    return std::nullopt;
}

struct SupportSet {
    FiniteField field;
    std::vector<Vec> points;  // projective points, first nonzero coordinate 1, sorted
};

inline SupportSet support_from(const GradedModule& M, const RankVariety& V) {
    SupportSet S{V.field, {}};
    for (const auto& a : V.points) {
        PiPointRep x{M.alg.family(), V.field, a};
        if (x.is_zero()) continue;
        S.points.push_back(frobenius_image(x));
    }
    std::sort(S.points.begin(), S.points.end());
    S.points.erase(std::unique(S.points.begin(), S.points.end()), S.points.end());
    return S;
}

inline SupportSet support_set(const GradedModule& M, std::uint32_t e, const VarietyOptions& opt = {}) {
    return support_from(M, rank_variety(M, e, opt));
}

enum class Verdict { Projective, NotProjective, NoWitnessUpTo };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Projective: return "Projective";
        case Verdict::NotProjective: return "NotProjective";
        case Verdict::NoWitnessUpTo: return "NoWitnessUpTo";
    }
    return "Unknown";
}

struct ProjectivityReport {
    Verdict verdict = Verdict::NoWitnessUpTo;
    bool is_free = false;
    std::optional<Vec> witness;
    std::uint32_t witness_degree = 0;
    std::uint32_t max_ext = 0;
};

/**
 * The freeness oracle decides the verdict; the rank variety is searched over
 * F_{p^e}, e = 1..max_ext (degrees compatible with M's field), for a nonzero
 * witness.
 */
inline ProjectivityReport is_projective(const GradedModule& M, std::uint32_t max_ext, const VarietyOptions& opt = {}) {
    if (max_ext < 1) fail(ErrorCode::BadParameters, "max extension degree must be at least 1");
    ProjectivityReport rep;
    rep.max_ext = max_ext;
    rep.is_free = is_free(M);
    for (std::uint32_t e = 1; e <= max_ext && !rep.witness; ++e) {
        if (e % M.field.degree() != 0) continue;
        if (auto w = find_witness(M, e, opt)) {
            rep.witness = w;
            rep.witness_degree = e;
        }
    }
    if (rep.is_free) rep.verdict = Verdict::Projective;
    else rep.verdict = rep.witness ? Verdict::NotProjective : Verdict::NoWitnessUpTo;
    return rep;
}

/// Image of a under the scaling by lambda that preserves rank varieties of this family.
inline Vec scale_point(const FiniteField& F, Family family, const Vec& a, Scalar lambda) {
    Vec out = a;
    const std::uint32_t p = F.characteristic();
    const Scalar l2 = F.mul(lambda, lambda);
    const std::size_t n = family == Family::ElemAbelian ? a.size() : a.size() - 1;
    for (std::size_t i = 0; i < n; ++i) out[i] = F.mul(family == Family::ElemAbelian ? lambda : l2, a[i]);
    if (family == Family::Witt) out[n] = F.mul(lambda, a[n]);
    if (family == Family::ExteriorLike) out[n] = F.mul(F.pow(lambda, p), a[n]);
    return out;
}

inline Vec flip_last(const FiniteField& F, Vec a) {
    a.back() = F.neg(a.back());
    return a;
}

struct HomogeneityReport {
    bool ok = true;
    std::optional<Vec> point;       // a point of V whose image is missing
    std::optional<Scalar> lambda;   // none when the sign flip failed
};

inline HomogeneityReport homogeneity_check_variety(const RankVariety& V, Family family) {
    const auto& F = V.field;
    HomogeneityReport rep;
    for (const auto& a : V.points) {
        for (std::uint32_t c = 1; c < F.order(); ++c) {
            if (!V.contains(scale_point(F, family, a, Scalar{c}))) {
                rep.ok = false;
                rep.point = a;
                rep.lambda = Scalar{c};
                return rep;
            }
        }
        if (family != Family::ElemAbelian && !V.contains(flip_last(F, a))) {
            rep.ok = false;
            rep.point = a;
            return rep;
        }
    }
    return rep;
}

inline HomogeneityReport homogeneity_check(const GradedModule& M, std::uint32_t e, const VarietyOptions& opt = {}) {
    return homogeneity_check_variety(rank_variety(M, e, opt), M.alg.family());
}

struct SupportFormulaReport {
    bool ok = true;
    std::vector<Vec> combined;      // V(M (x) N) or V(Hom(M, N)) without 0
    std::vector<Vec> intersection;  // V(M) and V(N) without 0
};

namespace detail {

inline std::vector<Vec> without_zero(const std::vector<Vec>& pts) {
    std::vector<Vec> out;
    for (const auto& a : pts) {
        bool zero = true;
        for (auto c : a) zero = zero && c.is_zero();
        if (!zero) out.push_back(a);
    }
    return out;
}

inline SupportFormulaReport compare_support(const RankVariety& combined, const RankVariety& VM, const RankVariety& VN) {
    SupportFormulaReport rep;
    rep.combined = without_zero(combined.points);
    std::vector<Vec> both;
    std::set_intersection(VM.points.begin(), VM.points.end(), VN.points.begin(), VN.points.end(), std::back_inserter(both));
    rep.intersection = without_zero(both);
    rep.ok = rep.combined == rep.intersection;
    return rep;
}

}  // namespace detail

inline SupportFormulaReport tensor_support_check(const GradedModule& M, const GradedModule& N, std::uint32_t e,
                                                 const VarietyOptions& opt = {}) {
    return detail::compare_support(rank_variety(tensor(M, N), e, opt), rank_variety(M, e, opt), rank_variety(N, e, opt));
}

inline SupportFormulaReport hom_support_check(const GradedModule& M, const GradedModule& N, std::uint32_t e,
                                              const VarietyOptions& opt = {}) {
    return detail::compare_support(rank_variety(internal_hom(M, N), e, opt), rank_variety(M, e, opt),
                                   rank_variety(N, e, opt));
}

}  // namespace superpoint
