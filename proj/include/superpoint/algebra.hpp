#pragma once

/**
 * @file algebra.hpp
 * @brief Presentations of the three elementary group algebra families.
 *
 * Witt:          k[s_1..s_n, sigma] / (s_i^p (i < n), s_n^{p^m}, sigma^2 - s_n^p)
 * ExteriorLike:  k[s_1..s_n, sigma] / (s_i^p, sigma^2)
 * ElemAbelian:   k[s_1..s_n] / (s_i^p)
 *
 * Basis monomials s^a sigma^eps are enumerated lexicographically on
 * (a_1, ..., a_n, eps), so a monomial's index is its mixed-radix value with
 * eps as the least significant digit. Multiplication is commutative with no
 * sign rule.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superpoint/field.hpp"

namespace superpoint {

enum class Family { Witt, ExteriorLike, ElemAbelian };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Witt: return "witt";
        case Family::ExteriorLike: return "exterior";
        case Family::ElemAbelian: return "elem_abelian";
    }
    return "unknown";
}

inline Family parse_family(const std::string& s) {
    if (s == "witt") return Family::Witt;
    if (s == "exterior") return Family::ExteriorLike;
    if (s == "elem_abelian") return Family::ElemAbelian;
    fail(ErrorCode::Parse, "unknown algebra family '" + s + "'");
}

struct Monomial {
    std::vector<std::uint32_t> exps;
    std::uint32_t eps = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

namespace detail {

struct AlgebraData {
    std::uint32_t p = 0;
    Family family = Family::Witt;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> bounds;  // exponent bound per even generator
    std::uint32_t eps_radix = 1;        // 2 when sigma is present
    std::size_t dim = 0;
    std::vector<Monomial> basis;
    std::vector<std::int32_t> product;  // dim x dim, -1 for zero
};

}  // namespace detail

class AlgebraPresentation {
public:
    AlgebraPresentation() = default;

    static AlgebraPresentation create(std::uint32_t p, Family family, std::uint32_t n, std::uint32_t m = 0) {
        if (p == 2 || !detail::is_prime(p)) fail(ErrorCode::CompositeP, "characteristic must be an odd prime");
        switch (family) {
            case Family::Witt:
                if (n < 1 || m < 2) fail(ErrorCode::BadParameters, "witt family needs n >= 1 and m >= 2");
                break;
            case Family::ExteriorLike:
                if (m != 0) fail(ErrorCode::BadParameters, "exterior family takes no m");
                break;
            case Family::ElemAbelian:
                if (n < 1) fail(ErrorCode::BadParameters, "elementary abelian family needs n >= 1");
                if (m != 0) fail(ErrorCode::BadParameters, "elementary abelian family takes no m");
                break;
        }
        auto d = std::make_shared<detail::AlgebraData>();
        d->p = p;
        d->family = family;
        d->n = n;
        d->m = m;
        d->bounds.assign(n, p);
        if (family == Family::Witt) {
            std::uint64_t top = 1;
            for (std::uint32_t i = 0; i < m; ++i) top *= p;
            d->bounds[n - 1] = static_cast<std::uint32_t>(top);
        }
        d->eps_radix = family == Family::ElemAbelian ? 1 : 2;
        std::uint64_t dim = d->eps_radix;
        for (auto b : d->bounds) {
            dim *= b;
            if (dim > kMaxDim) fail(ErrorCode::BadParameters, "algebra dimension too large");
        }
        d->dim = static_cast<std::size_t>(dim);
        d->basis.reserve(d->dim);
        for (std::size_t idx = 0; idx < d->dim; ++idx) d->basis.push_back(decode(*d, idx));
        if (d->dim <= kTableDim) {
            d->product.assign(d->dim * d->dim, -1);
            for (std::size_t i = 0; i < d->dim; ++i)
                for (std::size_t j = 0; j < d->dim; ++j) d->product[i * d->dim + j] = slow_product(*d, i, j);
        }
        AlgebraPresentation A;
        A.data_ = std::move(d);
        return A;
    }

    static constexpr std::size_t kMaxDim = 1u << 16;
    static constexpr std::size_t kTableDim = 2048;

    bool valid() const { return data_ != nullptr; }
    std::uint32_t p() const { return data_->p; }
    Family family() const { return data_->family; }
    std::uint32_t n() const { return data_->n; }
    std::uint32_t m() const { return data_->m; }
    bool has_sigma() const { return data_->family != Family::ElemAbelian; }
    std::size_t dim() const { return data_->dim; }
    std::uint32_t bound(std::size_t i) const { return data_->bounds[i]; }
    const std::vector<std::uint32_t>& bounds() const { return data_->bounds; }
    const std::vector<Monomial>& basis() const { return data_->basis; }
    const Monomial& monomial(std::size_t idx) const { return data_->basis[idx]; }

    /// Number of algebra generators: the s_i plus sigma when present.
    std::size_t generator_count() const { return data_->n + (has_sigma() ? 1 : 0); }

    std::uint32_t parity(std::size_t idx) const { return data_->basis[idx].eps; }

    std::optional<std::size_t> index_of(const Monomial& mono) const {
        const auto& d = *data_;
        if (mono.exps.size() != d.n) return std::nullopt;
        if (mono.eps >= d.eps_radix) return std::nullopt;
        std::size_t idx = 0;
        for (std::uint32_t i = 0; i < d.n; ++i) {
            if (mono.exps[i] >= d.bounds[i]) return std::nullopt;
            idx = idx * d.bounds[i] + mono.exps[i];
        }
        return idx * d.eps_radix + mono.eps;
    }

    std::size_t unit_index() const { return 0; }

    /// Index of the basis monomial s_i (0-based i).
    std::size_t s_index(std::size_t i) const {
        Monomial mono{std::vector<std::uint32_t>(data_->n, 0), 0};
        mono.exps[i] = 1;
        return *index_of(mono);
    }

    std::size_t sigma_index() const {
        if (!has_sigma()) fail(ErrorCode::BadParameters, "elementary abelian algebras have no odd generator");
        return 1;
    }

    /// Index of the i-th generator: s_1..s_n, then sigma.
    std::size_t generator_index(std::size_t i) const { return i < data_->n ? s_index(i) : sigma_index(); }

    /// Product of two basis monomials: another basis monomial (coefficient 1) or zero.
    std::optional<std::size_t> product(std::size_t a, std::size_t b) const {
        const auto& d = *data_;
        const std::int32_t r = d.product.empty() ? slow_product(d, a, b) : d.product[a * d.dim + b];
        if (r < 0) return std::nullopt;
        return static_cast<std::size_t>(r);
    }

    std::string generator_name(std::size_t i) const {
        return i < data_->n ? "s" + std::to_string(i + 1) : "sigma";
    }

    std::string monomial_string(std::size_t idx) const {
        const auto& mono = data_->basis[idx];
        std::string out;
        for (std::uint32_t i = 0; i < data_->n; ++i) {
            if (mono.exps[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += "s" + std::to_string(i + 1);
            if (mono.exps[i] > 1) out += "^" + std::to_string(mono.exps[i]);
        }
        if (mono.eps) out += out.empty() ? "sigma" : "*sigma";
        return out.empty() ? "1" : out;
    }

    /// Human-readable defining relations.
    std::vector<std::string> relations() const {
        const auto& d = *data_;
        std::vector<std::string> out;
        for (std::uint32_t i = 0; i < d.n; ++i)
            out.push_back("s" + std::to_string(i + 1) + "^" + std::to_string(d.bounds[i]));
        if (d.family == Family::Witt) out.push_back("sigma^2 - s" + std::to_string(d.n) + "^" + std::to_string(d.p));
        if (d.family == Family::ExteriorLike) out.push_back("sigma^2");
        return out;
    }

    std::string description() const {
        const auto& d = *data_;
        std::string out = family_name(d.family) + "(p=" + std::to_string(d.p) + ", n=" + std::to_string(d.n);
        if (d.family == Family::Witt) out += ", m=" + std::to_string(d.m);
        return out + ")";
    }

    friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->p == b.data_->p && a.data_->family == b.data_->family && a.data_->n == b.data_->n &&
               a.data_->m == b.data_->m;
    }

private:
    static Monomial decode(const detail::AlgebraData& d, std::size_t idx) {
        Monomial mono{std::vector<std::uint32_t>(d.n, 0), 0};
        mono.eps = static_cast<std::uint32_t>(idx % d.eps_radix);
        idx /= d.eps_radix;
        for (std::uint32_t i = d.n; i-- > 0;) {
            mono.exps[i] = static_cast<std::uint32_t>(idx % d.bounds[i]);
            idx /= d.bounds[i];
        }
        return mono;
    }

    static std::int32_t slow_product(const detail::AlgebraData& d, std::size_t a, std::size_t b) {
        const Monomial& x = d.basis[a];
        const Monomial& y = d.basis[b];
        std::vector<std::uint64_t> exps(d.n);
        for (std::uint32_t i = 0; i < d.n; ++i) exps[i] = std::uint64_t{x.exps[i]} + y.exps[i];
        std::uint32_t eps = x.eps + y.eps;
        if (eps == 2) {
            if (d.family == Family::ExteriorLike) return -1;
            eps = 0;
            exps[d.n - 1] += d.p;  // sigma^2 = s_n^p
        }
        std::size_t idx = 0;
        for (std::uint32_t i = 0; i < d.n; ++i) {
            if (exps[i] >= d.bounds[i]) return -1;
            idx = idx * d.bounds[i] + exps[i];
        }
        return static_cast<std::int32_t>(idx * d.eps_radix + eps);
    }

    std::shared_ptr<const detail::AlgebraData> data_;
};

/// An element of kE over a chosen coefficient field, stored densely in the monomial basis.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(AlgebraPresentation alg, FiniteField field)
        : alg_(std::move(alg)), field_(std::move(field)), coeffs_(alg_.dim()) {
        if (alg_.p() != field_.characteristic())
            fail(ErrorCode::CharacteristicMismatch, "field characteristic differs from the algebra's");
    }

    static AlgebraElement monomial(const AlgebraPresentation& alg, const FiniteField& field, std::size_t idx,
                                   Scalar c = kOne) {
        AlgebraElement x(alg, field);
        x.coeffs_.at(idx) = c;
        return x;
    }
    static AlgebraElement one(const AlgebraPresentation& alg, const FiniteField& field) {
        return monomial(alg, field, alg.unit_index());
    }
    static AlgebraElement generator(const AlgebraPresentation& alg, const FiniteField& field, std::size_t i) {
        return monomial(alg, field, alg.generator_index(i));
    }

    const AlgebraPresentation& algebra() const { return alg_; }
    const FiniteField& field() const { return field_; }
    const Vec& coeffs() const { return coeffs_; }
    Scalar coeff(std::size_t idx) const { return coeffs_[idx]; }
    void set(std::size_t idx, Scalar c) { coeffs_.at(idx) = c; }

    bool is_zero() const {
        for (auto c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Nonzero terms as (monomial index, coefficient), in basis order.
    std::vector<std::pair<std::size_t, Scalar>> terms() const {
        std::vector<std::pair<std::size_t, Scalar>> out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) out.emplace_back(i, coeffs_[i]);
        return out;
    }

    /// Parity when homogeneous, none for mixed or zero elements.
    std::optional<std::uint32_t> parity() const {
        std::optional<std::uint32_t> par;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (par && *par != alg_.parity(i)) return std::nullopt;
            par = alg_.parity(i);
        }
        return par;
    }

    AlgebraElement operator+(const AlgebraElement& o) const {
        check_compatible(o);
        AlgebraElement r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
        return r;
    }
    AlgebraElement operator-(const AlgebraElement& o) const {
        check_compatible(o);
        AlgebraElement r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
        return r;
    }
    AlgebraElement scaled(Scalar c) const {
        AlgebraElement r = *this;
        for (auto& x : r.coeffs_) x = field_.mul(c, x);
        return r;
    }

    AlgebraElement operator*(const AlgebraElement& o) const {
        check_compatible(o);
        AlgebraElement r(alg_, field_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < coeffs_.size(); ++j) {
                if (o.coeffs_[j].is_zero()) continue;
                if (auto k = alg_.product(i, j)) r.coeffs_[*k] = field_.add(r.coeffs_[*k], field_.mul(coeffs_[i], o.coeffs_[j]));
            }
        }
        return r;
    }

    AlgebraElement pow(std::uint64_t k) const {
        AlgebraElement r = one(alg_, field_);
        for (std::uint64_t i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::string to_string() const {
        std::string out;
        for (auto [idx, c] : terms()) {
            if (!out.empty()) out += " + ";
            const std::string mono = alg_.monomial_string(idx);
            if (c == kOne) out += mono;
            else if (mono == "1") out += field_.to_string(c);
            else out += field_.to_string(c) + "*" + mono;
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.alg_ == b.alg_ && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_compatible(const AlgebraElement& o) const {
        if (!(alg_ == o.alg_)) fail(ErrorCode::AlgebraMismatch, "elements of different algebras");
        if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "elements over different fields");
    }

    AlgebraPresentation alg_;
    FiniteField field_;
    Vec coeffs_;
};

/// Free-function spelling of the product, which also checks the algebras agree.
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

}  // namespace superpoint
