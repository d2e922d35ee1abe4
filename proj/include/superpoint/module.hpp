#pragma once

/**
 * @file module.hpp
 * @brief Finite-dimensional Z/2-graded modules over kE.
 *
 * A module is a coordinate space with a parity per basis vector and one
 * action matrix per algebra generator. Even generators preserve parity and
 * sigma reverses it. Tensor products and internal Hom carry the usual
 * Koszul sign on sigma.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superpoint/algebra.hpp"
#include "superpoint/matrix.hpp"

namespace superpoint {

struct GradedModule {
    FiniteField field;
    AlgebraPresentation alg;
    std::vector<std::uint32_t> parity;
    std::vector<Mat> s;          // one per even generator
    std::optional<Mat> sigma;    // absent for elementary abelian algebras

    std::size_t dim() const { return parity.size(); }

    /// Action of the i-th generator (s_1..s_n, then sigma).
    const Mat& action(std::size_t i) const { return i < s.size() ? s[i] : *sigma; }
    std::size_t generator_count() const { return s.size() + (sigma ? 1 : 0); }

    friend bool operator==(const GradedModule& a, const GradedModule& b) {
        return a.field == b.field && a.alg == b.alg && a.parity == b.parity && a.s == b.s && a.sigma == b.sigma;
    }
};

/// Linear map between modules, homogeneous of the given parity.
struct ModuleMap {
    GradedModule source;
    GradedModule target;
    Mat matrix;
    std::uint32_t parity = 0;

    /// Checks f(x m) = (-1)^{|x||f|} x f(m) for every generator x, and that f shifts degrees by `parity`.
    bool is_homomorphism() const {
        const auto& F = source.field;
        if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
        for (std::size_t r = 0; r < matrix.rows(); ++r)
            for (std::size_t c = 0; c < matrix.cols(); ++c)
                if (!matrix(r, c).is_zero() && ((target.parity[r] + parity) % 2) != source.parity[c] % 2) return false;
        for (std::size_t g = 0; g < source.generator_count(); ++g) {
            const Mat lhs = mul(F, matrix, source.action(g));
            Mat rhs = mul(F, target.action(g), matrix);
            const bool odd = g >= source.s.size();
            if (odd && parity == 1) rhs = neg(F, rhs);
            if (!(lhs == rhs)) return false;
        }
        return true;
    }
};

namespace detail {

inline void check_same_setting(const GradedModule& a, const GradedModule& b) {
    if (!(a.alg == b.alg)) fail(ErrorCode::AlgebraMismatch, "modules over different algebras");
    if (!(a.field == b.field)) fail(ErrorCode::FieldMismatch, "modules over different fields");
}

inline Mat sign_diagonal(const FiniteField& F, const std::vector<std::uint32_t>& parity) {
    Mat d(parity.size(), parity.size());
    for (std::size_t i = 0; i < parity.size(); ++i) d(i, i) = parity[i] ? F.neg(kOne) : kOne;
    return d;
}

}  // namespace detail

inline GradedModule regular_module(const AlgebraPresentation& alg, const FiniteField& field) {
    if (alg.p() != field.characteristic())
        fail(ErrorCode::CharacteristicMismatch, "field characteristic differs from the algebra's");
    const std::size_t d = alg.dim();
    GradedModule M;
    M.field = field;
    M.alg = alg;
    M.parity.resize(d);
    for (std::size_t i = 0; i < d; ++i) M.parity[i] = alg.parity(i);
    auto left_mult = [&](std::size_t gen) {
        Mat L(d, d);
        for (std::size_t c = 0; c < d; ++c)
            if (auto r = alg.product(gen, c)) L(*r, c) = kOne;
        return L;
    };
    for (std::size_t i = 0; i < alg.n(); ++i) M.s.push_back(left_mult(alg.s_index(i)));
    if (alg.has_sigma()) M.sigma = left_mult(alg.sigma_index());
    return M;
}

/// One-dimensional module with every generator acting by zero.
inline GradedModule trivial_module(const AlgebraPresentation& alg, const FiniteField& field, std::uint32_t parity = 0) {
    if (alg.p() != field.characteristic())
        fail(ErrorCode::CharacteristicMismatch, "field characteristic differs from the algebra's");
    GradedModule M;
    M.field = field;
    M.alg = alg;
    M.parity = {parity % 2};
    M.s.assign(alg.n(), Mat(1, 1));
    if (alg.has_sigma()) M.sigma = Mat(1, 1);
    return M;
}

/// Raises DimensionMismatch when the stored matrices do not fit the declared shape.
inline void check_shape(const GradedModule& M) {
    const std::size_t d = M.dim();
    if (M.field.characteristic() != M.alg.p())
        fail(ErrorCode::CharacteristicMismatch, "field characteristic differs from the algebra's");
    if (M.s.size() != M.alg.n())
        fail(ErrorCode::DimensionMismatch, "expected " + std::to_string(M.alg.n()) + " even action matrices");
    if (M.alg.has_sigma() != M.sigma.has_value())
        fail(ErrorCode::DimensionMismatch, M.alg.has_sigma() ? "missing sigma action" : "sigma action not allowed");
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
        const Mat& A = M.action(g);
        if (A.rows() != d || A.cols() != d) fail(ErrorCode::DimensionMismatch, "action matrix is not dim x dim");
        for (auto x : A.raw())
            if (x.code >= M.field.order()) fail(ErrorCode::Parse, "matrix entry outside the field");
    }
    for (auto p : M.parity)
        if (p > 1) fail(ErrorCode::Parse, "parity entries must be 0 or 1");
}

/**
 * Every violated module axiom, described in words. An empty list means the
 * data defines a graded kE-module.
 */
inline std::vector<std::string> validate(const GradedModule& M) {
    check_shape(M);
    const auto& F = M.field;
    const auto& alg = M.alg;
    std::vector<std::string> out;
    const std::size_t g = M.generator_count();
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i + 1; j < g; ++j)
            if (!(mul(F, M.action(i), M.action(j)) == mul(F, M.action(j), M.action(i))))
                out.push_back(alg.generator_name(i) + " and " + alg.generator_name(j) + " do not commute");
    for (std::size_t i = 0; i < alg.n(); ++i)
        if (!power(F, M.s[i], alg.bound(i)).is_zero())
            out.push_back(alg.generator_name(i) + "^" + std::to_string(alg.bound(i)) + " is not zero");
    if (M.sigma) {
        const Mat sq = mul(F, *M.sigma, *M.sigma);
        if (alg.family() == Family::Witt) {
            if (!(sq == power(F, M.s[alg.n() - 1], alg.p())))
                out.push_back("sigma^2 differs from s" + std::to_string(alg.n()) + "^" + std::to_string(alg.p()));
        } else if (!sq.is_zero()) {
            out.push_back("sigma^2 is not zero");
        }
    }
    for (std::size_t i = 0; i < g; ++i) {
        const bool odd = i >= alg.n();
        const Mat& A = M.action(i);
        bool bad = false;
        for (std::size_t r = 0; r < A.rows() && !bad; ++r)
            for (std::size_t c = 0; c < A.cols() && !bad; ++c)
                if (!A(r, c).is_zero() && ((M.parity[r] != M.parity[c]) != odd)) bad = true;
        if (bad) out.push_back(alg.generator_name(i) + (odd ? " does not reverse parity" : " does not preserve parity"));
    }
    return out;
}

inline bool is_valid(const GradedModule& M) { return validate(M).empty(); }

/// Parity shift: gradings swap and sigma changes sign.
inline GradedModule parity_shift(const GradedModule& M) {
    GradedModule R = M;
    for (auto& p : R.parity) p ^= 1u;
    if (R.sigma) R.sigma = neg(M.field, *R.sigma);
    return R;
}

inline GradedModule direct_sum(const GradedModule& A, const GradedModule& B) {
    detail::check_same_setting(A, B);
    GradedModule R;
    R.field = A.field;
    R.alg = A.alg;
    R.parity = A.parity;
    R.parity.insert(R.parity.end(), B.parity.begin(), B.parity.end());
    auto blockdiag = [&](const Mat& x, const Mat& y) {
        Mat m(x.rows() + y.rows(), x.cols() + y.cols());
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c) m(r, c) = x(r, c);
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c) m(x.rows() + r, x.cols() + c) = y(r, c);
        return m;
    };
    for (std::size_t i = 0; i < A.s.size(); ++i) R.s.push_back(blockdiag(A.s[i], B.s[i]));
    if (A.sigma) R.sigma = blockdiag(*A.sigma, *B.sigma);
    return R;
}

/// M (x) N with basis m_i (x) n_j at index i * dim N + j.
inline GradedModule tensor(const GradedModule& M, const GradedModule& N) {
    detail::check_same_setting(M, N);
    const auto& F = M.field;
    GradedModule R;
    R.field = F;
    R.alg = M.alg;
    for (auto pm : M.parity)
        for (auto pn : N.parity) R.parity.push_back((pm + pn) % 2);
    const Mat IM = Mat::identity(M.dim());
    const Mat IN = Mat::identity(N.dim());
    for (std::size_t i = 0; i < M.s.size(); ++i) R.s.push_back(add(F, kron(F, M.s[i], IN), kron(F, IM, N.s[i])));
    if (M.sigma)
        R.sigma = add(F, kron(F, *M.sigma, IN), kron(F, detail::sign_diagonal(F, M.parity), *N.sigma));
    return R;
}

/**
 * Hom_k(M, N) with basis E_{kl} (sending m_l to n_k) at index k * dim M + l.
 * Even generators act by s.f = s_N f - f s_M and sigma by
 * sigma.f = sigma_N f - (-1)^{|f|} f sigma_M.
 */
inline GradedModule internal_hom(const GradedModule& M, const GradedModule& N) {
    detail::check_same_setting(M, N);
    const auto& F = M.field;
    GradedModule R;
    R.field = F;
    R.alg = M.alg;
    for (auto pn : N.parity)
        for (auto pm : M.parity) R.parity.push_back((pm + pn) % 2);
    const Mat IM = Mat::identity(M.dim());
    const Mat IN = Mat::identity(N.dim());
    for (std::size_t i = 0; i < M.s.size(); ++i)
        R.s.push_back(sub(F, kron(F, N.s[i], IM), kron(F, IN, transpose(M.s[i]))));
    if (M.sigma) {
        const Mat right = mul(F, kron(F, IN, transpose(*M.sigma)), detail::sign_diagonal(F, R.parity));
        R.sigma = sub(F, kron(F, *N.sigma, IM), right);
    }
    return R;
}

/// The same module over the default field of degree e * e' (or over `target` when given).
inline GradedModule base_change_to(const GradedModule& M, const FiniteField& target) {
    if (target == M.field) return M;
    const auto emb = embedding_map(M.field, target);
    GradedModule R;
    R.field = target;
    R.alg = M.alg;
    R.parity = M.parity;
    for (const auto& x : M.s) R.s.push_back(map_entries(x, emb));
    if (M.sigma) R.sigma = map_entries(*M.sigma, emb);
    return R;
}

inline GradedModule base_change(const GradedModule& M, std::uint32_t ext_degree) {
    if (ext_degree < 1) fail(ErrorCode::BadParameters, "extension degree must be at least 1");
    if (ext_degree == 1) return M;
    return base_change_to(M, FiniteField::create(M.field.characteristic(), M.field.degree() * ext_degree));
}

/// Subspace spanned by the images of all generator actions.
inline Subspace radical(const GradedModule& M) {
    Subspace rad(M.field, M.dim());
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
        const Mat& A = M.action(g);
        for (std::size_t c = 0; c < A.cols(); ++c) rad.insert(A.column(c));
    }
    return rad;
}

/// The smallest submodule containing the given vectors.
inline Subspace submodule_closure(const GradedModule& M, const std::vector<Vec>& gens) {
    Subspace S(M.field, M.dim());
    std::vector<Vec> queue;
    for (const auto& v : gens)
        if (S.insert(v)) queue.push_back(v);
    while (!queue.empty()) {
        const Vec v = std::move(queue.back());
        queue.pop_back();
        for (std::size_t g = 0; g < M.generator_count(); ++g) {
            Vec w = apply(M.field, M.action(g), v);
            if (S.insert(w)) queue.push_back(std::move(w));
        }
    }
    return S;
}

/// Vectors x.v for every basis monomial x of kE, in basis order.
inline std::vector<Vec> monomial_orbit(const GradedModule& M, const Vec& v) {
    const auto& alg = M.alg;
    std::vector<Vec> out(alg.dim());
    out[0] = v;
    for (std::size_t idx = 1; idx < alg.dim(); ++idx) {
        const Monomial& mono = alg.monomial(idx);
        if (mono.eps) {
            out[idx] = apply(M.field, *M.sigma, out[idx - 1]);
            continue;
        }
        std::size_t i = 0;
        while (mono.exps[i] == 0) ++i;
        Monomial prev = mono;
        --prev.exps[i];
        out[idx] = apply(M.field, M.s[i], out[*alg.index_of(prev)]);
    }
    return out;
}

/// Action matrix of an arbitrary algebra element.
inline Mat element_action(const GradedModule& M, const AlgebraElement& x) {
    if (!(x.algebra() == M.alg)) fail(ErrorCode::AlgebraMismatch, "element of a different algebra");
    if (!(x.field() == M.field)) fail(ErrorCode::FieldMismatch, "element over a different field");
    const auto& F = M.field;
    const auto& alg = M.alg;
    std::vector<Mat> mono(alg.dim());
    Mat out(M.dim(), M.dim());
    mono[0] = Mat::identity(M.dim());
    for (std::size_t idx = 0; idx < alg.dim(); ++idx) {
        if (idx > 0) {
            const Monomial& m = alg.monomial(idx);
            if (m.eps) {
                mono[idx] = mul(F, *M.sigma, mono[idx - 1]);
            } else {
                std::size_t i = 0;
                while (m.exps[i] == 0) ++i;
                Monomial prev = m;
                --prev.exps[i];
                mono[idx] = mul(F, M.s[i], mono[*alg.index_of(prev)]);
            }
        }
        if (!x.coeff(idx).is_zero()) accumulate(F, out, x.coeff(idx), mono[idx]);
    }
    return out;
}

/**
 * Homogeneous vectors whose classes form a basis of M / rad M. The chosen
 * vectors are standard basis vectors outside the pivots of rad M.
 */
inline std::vector<Vec> minimal_generators(const GradedModule& M) {
    const Subspace rad = radical(M);
    std::vector<Vec> out;
    for (std::size_t c = 0; c < M.dim(); ++c) {
        if (rad.is_pivot(c)) continue;
        Vec v(M.dim());
        v[c] = kOne;
        out.push_back(std::move(v));
    }
    return out;
}

/// Free iff dim M = mu * dim kE and the generators' orbits span M.
inline bool is_free(const GradedModule& M) {
    const auto gens = minimal_generators(M);
    const std::size_t mu = gens.size();
    if (M.dim() != mu * M.alg.dim()) return false;
    Subspace span(M.field, M.dim());
    for (const auto& v : gens)
        for (const auto& w : monomial_orbit(M, v)) span.insert(w);
    return span.dim() == M.dim();
}

/// The submodule with basis `S.sorted_basis()`; S must be graded and stable under the actions.
inline GradedModule submodule(const GradedModule& M, const Subspace& S) {
    const auto basis = S.sorted_basis();
    GradedModule R;
    R.field = M.field;
    R.alg = M.alg;
    for (const auto& v : basis) {
        std::uint32_t par = 2;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                if (par != 2 && par != M.parity[i]) fail(ErrorCode::BadParameters, "submodule basis is not homogeneous");
                par = M.parity[i];
            }
        R.parity.push_back(par % 2);
    }
    const std::size_t d = basis.size();
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
        Mat A(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            const Vec w = apply(M.field, M.action(g), basis[c]);
            if (!S.contains(w)) fail(ErrorCode::BadParameters, "subspace is not a submodule");
            const Vec co = S.coordinates(w);
            for (std::size_t r = 0; r < d; ++r) A(r, c) = co[r];
        }
        if (g < M.s.size()) R.s.push_back(std::move(A));
        else R.sigma = std::move(A);
    }
    return R;
}

/// M / S with basis the standard vectors outside the pivots of S.
inline GradedModule quotient(const GradedModule& M, const Subspace& S) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < M.dim(); ++c)
        if (!S.is_pivot(c)) keep.push_back(c);
    const std::size_t d = keep.size();
    GradedModule R;
    R.field = M.field;
    R.alg = M.alg;
    for (auto c : keep) R.parity.push_back(M.parity[c]);
    for (std::size_t g = 0; g < M.generator_count(); ++g) {
        Mat A(d, d);
        const Mat& X = M.action(g);
        for (std::size_t j = 0; j < d; ++j) {
            const Vec w = S.reduce(X.column(keep[j]));
            for (std::size_t i = 0; i < d; ++i) A(i, j) = w[keep[i]];
        }
        if (g < M.s.size()) R.s.push_back(std::move(A));
        else R.sigma = std::move(A);
    }
    return R;
}

/// Conjugate every action by an invertible matrix P (new basis = columns of P).
inline GradedModule change_basis(const GradedModule& M, const Mat& P, const std::vector<std::uint32_t>& new_parity) {
    const auto& F = M.field;
    auto Pinv = solve_many(F, P, Mat::identity(P.rows()));
    if (!Pinv || rank(F, P) != P.rows()) fail(ErrorCode::BadParameters, "change of basis is not invertible");
    GradedModule R;
    R.field = F;
    R.alg = M.alg;
    R.parity = new_parity;
    for (const auto& x : M.s) R.s.push_back(mul(F, *Pinv, mul(F, x, P)));
    if (M.sigma) R.sigma = mul(F, *Pinv, mul(F, *M.sigma, P));
    return R;
}

/// Quotient of kE by the ideal generated by the given algebra elements.
inline GradedModule cyclic_quotient(const AlgebraPresentation& alg, const FiniteField& field,
                                    const std::vector<AlgebraElement>& relations) {
    const GradedModule R = regular_module(alg, field);
    std::vector<Vec> gens;
    for (const auto& x : relations) gens.push_back(x.coeffs());
    return quotient(R, submodule_closure(R, gens));
}

}  // namespace superpoint
