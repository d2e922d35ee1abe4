#pragma once

/**
 * @file pipoint.hpp
 * @brief Pi-points: standard representatives, restrictions, normalization
 *        of general algebra maps, Frobenius images and equivalence.
 *
 * A map from k[t, tau]/(t^p - tau^2) into kE is given by t -> f(s) and
 * tau -> g(s) sigma. Its restriction to a module M is the operator pair
 * (T, Tau) = (f(S), g(S) Sigma).
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superpoint/module.hpp"

namespace superpoint {

struct PiPointRep {
    Family family = Family::Witt;
    FiniteField field;
    Vec coords;  // n + 1 entries, or n for elementary abelian algebras

    bool is_zero() const {
        for (auto c : coords)
            if (!c.is_zero()) return false;
        return true;
    }
};

/// Polynomial in the even generators: exponent vector -> coefficient, zero terms absent.
using SPoly = std::map<std::vector<std::uint32_t>, Scalar>;

struct AlgebraMapSpec {
    AlgebraPresentation alg;
    FiniteField field;
    SPoly f;
    SPoly g;
};

struct RestrictedAction {
    FiniteField field;
    std::vector<std::uint32_t> parity;
    Mat T;
    Mat Tau;

    std::size_t dim() const { return parity.size(); }
};

inline std::size_t point_length(const AlgebraPresentation& alg) {
    return alg.family() == Family::ElemAbelian ? alg.n() : alg.n() + 1;
}

namespace detail {

inline void check_restriction(const RestrictedAction& r) {
    const auto& F = r.field;
    if (!(mul(F, r.T, r.Tau) == mul(F, r.Tau, r.T)))
        fail(ErrorCode::RelationViolation, "restricted operators do not commute");
    if (!(mul(F, r.Tau, r.Tau) == power(F, r.T, F.characteristic())))
        fail(ErrorCode::RelationViolation, "Tau^2 differs from T^p on the module");
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
            const bool same = r.parity[i] == r.parity[j];
            if (!r.T(i, j).is_zero() && !same) fail(ErrorCode::RelationViolation, "T is not even");
            if (!r.Tau(i, j).is_zero() && same) fail(ErrorCode::RelationViolation, "Tau is not odd");
        }
}

// Evaluate a polynomial in the commuting matrices S_1..S_n.
inline Mat evaluate(const GradedModule& M, const SPoly& poly) {
    const auto& F = M.field;
    const std::size_t d = M.dim();
    Mat out(d, d);
    std::map<std::pair<std::size_t, std::uint32_t>, Mat> powers;
    auto pw = [&](std::size_t i, std::uint32_t e) -> const Mat& {
        auto key = std::make_pair(i, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, power(F, M.s[i], e)).first;
        return it->second;
    };
    for (const auto& [exps, c] : poly) {
        if (c.is_zero()) continue;
        Mat term = Mat::identity(d);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) term = mul(F, term, pw(i, exps[i]));
        accumulate(F, out, c, term);
    }
    return out;
}

}  // namespace detail

/**
 * Witt:          T = a_1 S_1 + ... + a_{n-1} S_{n-1} + a_n S_n^{p^{m-1}} + a_{n+1}^2 S_n, Tau = a_{n+1}^p Sigma
 * ExteriorLike:  T = sum a_i S_i, Tau = a_{n+1} Sigma
 * ElemAbelian:   T = sum a_i S_i, Tau = 0
 */
inline RestrictedAction standard_restriction(const GradedModule& M, const PiPointRep& a) {
    if (!(a.field == M.field)) fail(ErrorCode::FieldMismatch, "point and module live over different fields");
    const auto& alg = M.alg;
    if (a.family != alg.family() || a.coords.size() != point_length(alg))
        fail(ErrorCode::DimensionMismatch, "point has the wrong number of coordinates for " + alg.description());
    if (a.is_zero()) fail(ErrorCode::ZeroPoint, "the zero tuple is not a pi-point");
    const auto& F = M.field;
    const std::size_t d = M.dim();
    const std::uint32_t n = alg.n();
    RestrictedAction r;
    r.field = F;
    r.parity = M.parity;
    r.T = Mat(d, d);
    r.Tau = Mat(d, d);
    switch (alg.family()) {
        case Family::Witt: {
            for (std::uint32_t i = 0; i + 1 < n; ++i) accumulate(F, r.T, a.coords[i], M.s[i]);
            accumulate(F, r.T, a.coords[n - 1], power(F, M.s[n - 1], alg.bound(n - 1) / alg.p()));
            const Scalar last = a.coords[n];
            accumulate(F, r.T, F.mul(last, last), M.s[n - 1]);
            r.Tau = scale(F, F.pow(last, alg.p()), *M.sigma);
            break;
        }
        case Family::ExteriorLike:
            for (std::uint32_t i = 0; i < n; ++i) accumulate(F, r.T, a.coords[i], M.s[i]);
            r.Tau = scale(F, a.coords[n], *M.sigma);
            break;
        case Family::ElemAbelian:
            for (std::uint32_t i = 0; i < n; ++i) accumulate(F, r.T, a.coords[i], M.s[i]);
            break;
    }
    detail::check_restriction(r);
    return r;
}

/// Restriction along t -> f(s), tau -> g(s) sigma.
inline RestrictedAction general_restriction(const GradedModule& M, const AlgebraMapSpec& spec) {
    if (!(spec.field == M.field)) fail(ErrorCode::FieldMismatch, "map and module live over different fields");
    if (!(spec.alg == M.alg)) fail(ErrorCode::AlgebraMismatch, "map and module use different algebras");
    RestrictedAction r;
    r.field = M.field;
    r.parity = M.parity;
    r.T = detail::evaluate(M, spec.f);
    if (M.sigma) r.Tau = mul(M.field, detail::evaluate(M, spec.g), *M.sigma);
    else {
        for (const auto& [e, c] : spec.g)
            if (!c.is_zero()) fail(ErrorCode::IncompatiblePair, "elementary abelian maps send tau to zero");
        r.Tau = Mat(M.dim(), M.dim());
    }
    detail::check_restriction(r);
    return r;
}

/// The map whose restriction is the standard one at a.
inline AlgebraMapSpec standard_spec(const AlgebraPresentation& alg, const PiPointRep& a) {
    if (a.coords.size() != point_length(alg)) fail(ErrorCode::DimensionMismatch, "point has the wrong length");
    const auto& F = a.field;
    AlgebraMapSpec spec{alg, F, {}, {}};
    const std::uint32_t n = alg.n();
    auto add_term = [&](SPoly& poly, std::vector<std::uint32_t> exps, Scalar c) {
        if (c.is_zero()) return;
        auto& slot = poly[exps];
        slot = F.add(slot, c);
        if (slot.is_zero()) poly.erase(exps);
    };
    auto unit = [&](std::size_t i, std::uint32_t e) {
        std::vector<std::uint32_t> exps(n, 0);
        exps[i] = e;
        return exps;
    };
    switch (alg.family()) {
        case Family::Witt:
            for (std::uint32_t i = 0; i + 1 < n; ++i) add_term(spec.f, unit(i, 1), a.coords[i]);
            add_term(spec.f, unit(n - 1, alg.bound(n - 1) / alg.p()), a.coords[n - 1]);
            add_term(spec.f, unit(n - 1, 1), F.mul(a.coords[n], a.coords[n]));
            add_term(spec.g, std::vector<std::uint32_t>(n, 0), F.pow(a.coords[n], alg.p()));
            break;
        case Family::ExteriorLike:
            for (std::uint32_t i = 0; i < n; ++i) add_term(spec.f, unit(i, 1), a.coords[i]);
            add_term(spec.g, std::vector<std::uint32_t>(n, 0), a.coords[n]);
            break;
        case Family::ElemAbelian:
            for (std::uint32_t i = 0; i < n; ++i) add_term(spec.f, unit(i, 1), a.coords[i]);
            break;
    }
    return spec;
}

namespace detail {

// Truncated polynomial ring k[s]/(s.J), J generated by s_i^{b_i}. A monomial
// survives unless some exponent reaches its bound with other degree left over.
struct TruncatedRing {
    FiniteField F;
    std::vector<std::uint32_t> bounds;

    bool vanishes(const std::vector<std::uint32_t>& e) const {
        std::uint64_t total = 0;
        for (auto x : e) total += x;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] >= bounds[i] && total > bounds[i]) return true;
        return false;
    }

    void add_to(SPoly& acc, const std::vector<std::uint32_t>& e, Scalar c) const {
        if (c.is_zero() || vanishes(e)) return;
        auto& slot = acc[e];
        slot = F.add(slot, c);
        if (slot.is_zero()) acc.erase(e);
    }

    SPoly mul(const SPoly& a, const SPoly& b) const {
        SPoly out;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                std::vector<std::uint32_t> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                add_to(out, e, F.mul(ca, cb));
            }
        return out;
    }

    // Characteristic p: (sum c x^a)^p = sum c^p x^{pa}.
    SPoly frobenius_power(const SPoly& a) const {
        SPoly out;
        const std::uint32_t p = F.characteristic();
        for (const auto& [e, c] : a) {
            std::vector<std::uint32_t> pe(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) pe[i] = e[i] * p;
            add_to(out, pe, F.frobenius(c));
        }
        return out;
    }
};

inline void check_spec_shape(const AlgebraMapSpec& spec) {
    const auto& alg = spec.alg;
    if (alg.p() != spec.field.characteristic())
        fail(ErrorCode::CharacteristicMismatch, "field characteristic differs from the algebra's");
    for (const auto* poly : {&spec.f, &spec.g})
        for (const auto& [e, c] : *poly) {
            if (e.size() != alg.n()) fail(ErrorCode::DimensionMismatch, "exponent vector has the wrong length");
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] >= alg.bound(i)) fail(ErrorCode::BadParameters, "exponent exceeds the algebra's bound");
            if (c.code >= spec.field.order()) fail(ErrorCode::Parse, "coefficient outside the field");
        }
}

}  // namespace detail

/**
 * The tuple b with f^p - g^2 sigma^2 = sum b_i s_i^{bound_i} + b_{n+1} (s_n^p - sigma^2)
 * modulo m I (Witt), or the analogue in the basis (s_1^p, .., s_n^p, sigma^2)
 * for the exterior family, where b_{n+1} = -g(0)^2.
 */
inline Vec coefficient_tuple(const AlgebraMapSpec& spec) {
    detail::check_spec_shape(spec);
    const auto& alg = spec.alg;
    const auto& F = spec.field;
    const std::uint32_t n = alg.n();
    const std::uint32_t p = alg.p();
    detail::TruncatedRing ring{F, alg.bounds()};
    SPoly h = ring.frobenius_power(spec.f);
    const std::vector<std::uint32_t> zero(n, 0);
    const Scalar g0 = spec.g.count(zero) ? spec.g.at(zero) : kZero;
    if (alg.family() == Family::Witt) {
        std::vector<std::uint32_t> snp(n, 0);
        snp[n - 1] = p;
        const SPoly corr = ring.mul(ring.mul(spec.g, spec.g), SPoly{{snp, kOne}});
        for (const auto& [e, c] : corr) ring.add_to(h, e, F.neg(c));
    } else if (alg.family() == Family::ElemAbelian) {
        for (const auto& [e, c] : spec.g)
            if (!c.is_zero()) fail(ErrorCode::IncompatiblePair, "elementary abelian maps send tau to zero");
    }
    Vec b(point_length(alg));
    for (const auto& [e, c] : h) {
        std::size_t which = n;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint32_t> pure(n, 0);
            pure[i] = alg.bound(i);
            if (e == pure) which = i;
        }
        if (which == n) fail(ErrorCode::IncompatiblePair, "t^p and tau^2 have different images: the pair is not an algebra map");
        b[which] = c;
    }
    if (alg.family() == Family::Witt) b[n] = F.mul(g0, g0);
    if (alg.family() == Family::ExteriorLike) b[n] = F.neg(F.mul(g0, g0));
    return b;
}

inline bool is_pi_point(const AlgebraMapSpec& spec) {
    for (auto c : coefficient_tuple(spec))
        if (!c.is_zero()) return true;
    return false;
}

/// Standard representative whose Frobenius image is the coefficient tuple; may live over a quadratic extension.
inline PiPointRep normalize(const AlgebraMapSpec& spec) {
    Vec b = coefficient_tuple(spec);
    bool zero = true;
    for (auto c : b) zero = zero && c.is_zero();
    if (zero) fail(ErrorCode::NotAPiPoint, "coefficient tuple vanishes: the map factors through a non-flat quotient");
    const auto& alg = spec.alg;
    FiniteField K = spec.field;
    const std::uint32_t n = alg.n();
    PiPointRep a{alg.family(), K, Vec(b.size())};
    if (alg.family() != Family::ElemAbelian) {
        Scalar target = alg.family() == Family::Witt ? b[n] : K.neg(b[n]);
        if (!K.square_root(target)) {
            const FiniteField big = FiniteField::create(K.characteristic(), 2 * K.degree());
            const auto emb = embedding_map(K, big);
            for (auto& c : b) c = emb[c.code];
            target = emb[target.code];
            K = big;
        }
        const Scalar root = *K.square_root(target);
        a.coords[n] = alg.family() == Family::Witt ? K.pth_root(root) : root;
    }
    a.field = K;
    for (std::uint32_t i = 0; i < n; ++i) a.coords[i] = K.pth_root(b[i]);
    return a;
}

/// Normalize so the first nonzero coordinate is 1.
inline Vec projective_normalize(const FiniteField& F, Vec v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            const Scalar inv = F.inv(v[i]);
            for (auto& x : v) x = F.mul(x, inv);
            return v;
        }
    fail(ErrorCode::ZeroPoint, "the zero tuple has no projective image");
}

/// Affine tuple (a_1^p, .., a_n^p, last) before projective normalization.
inline Vec frobenius_tuple(const PiPointRep& a) {
    const auto& F = a.field;
    Vec out;
    const std::size_t n = a.family == Family::ElemAbelian ? a.coords.size() : a.coords.size() - 1;
    for (std::size_t i = 0; i < n; ++i) out.push_back(F.frobenius(a.coords[i]));
    if (a.family == Family::Witt) out.push_back(F.pow(a.coords[n], 2 * F.characteristic()));
    if (a.family == Family::ExteriorLike) out.push_back(F.neg(F.mul(a.coords[n], a.coords[n])));
    return out;
}

inline Vec frobenius_image(const PiPointRep& a) {
    if (a.is_zero()) fail(ErrorCode::ZeroPoint, "the zero tuple is not a pi-point");
    return projective_normalize(a.field, frobenius_tuple(a));
}

inline bool equivalent(const PiPointRep& a, const PiPointRep& b) {
    if (a.is_zero() || b.is_zero()) fail(ErrorCode::ZeroPoint, "the zero tuple is not a pi-point");
    if (a.family != b.family || a.coords.size() != b.coords.size())
        fail(ErrorCode::AlgebraMismatch, "points for different algebras");
    const FiniteField K = common_extension(a.field, b.field);
    auto lift = [&](const PiPointRep& x) {
        const auto emb = embedding_map(x.field, K);
        Vec img = frobenius_image(x);
        for (auto& c : img) c = emb[c.code];
        return img;
    };
    return lift(a) == lift(b);
}

/**
 * Generators of the homogeneous prime attached to a, in the variables
 * u_i (odd), x_i and zeta of the cohomology ring. With b = F(a):
 * b_{n+1} != 0 gives x_i - (b_i / b_{n+1}) zeta^2 and u_i; otherwise zeta,
 * the 2x2 minors b_i x_j - b_j x_i scaled to a monic leading term, and u_i.
 */
inline std::vector<std::string> prime_ideal_generators(const PiPointRep& a) {
    const auto& F = a.field;
    const Vec b = frobenius_image(a);
    const bool has_zeta = a.family != Family::ElemAbelian;
    const std::size_t n = has_zeta ? b.size() - 1 : b.size();
    std::vector<std::string> out;
    auto coeff_term = [&](Scalar c, const std::string& var) {
        return c == kOne ? var : F.to_string(c) + "*" + var;
    };
    auto x = [](std::size_t i) { return "x_" + std::to_string(i + 1); };
    if (has_zeta && !b[n].is_zero()) {
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar c = F.div(b[i], b[n]);
            out.push_back(c.is_zero() ? x(i) : x(i) + " - " + coeff_term(c, "zeta^2"));
        }
    } else {
        if (has_zeta) out.push_back("zeta");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                // b_i x_j - b_j x_i, divided by its first nonzero coefficient (x_i before x_j).
                Scalar ci = F.neg(b[j]);
                Scalar cj = b[i];
                if (ci.is_zero() && cj.is_zero()) continue;
                const Scalar lead = ci.is_zero() ? cj : ci;
                ci = F.div(ci, lead);
                cj = F.div(cj, lead);
                std::string term;
                if (!ci.is_zero()) term = coeff_term(ci, x(i));
                if (!cj.is_zero()) {
                    if (term.empty()) term = coeff_term(cj, x(j));
                    else {
                        const Scalar negc = F.neg(cj);
                        term += " - " + coeff_term(negc, x(j));
                    }
                }
                out.push_back(term);
            }
    }
    for (std::size_t i = 0; i < n; ++i) out.push_back("u_" + std::to_string(i + 1));
    return out;
}

}  // namespace superpoint
