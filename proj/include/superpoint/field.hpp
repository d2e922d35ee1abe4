#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in finite fields F_{p^e}, p an odd prime.
 *
 * Elements are stored by their base-p integer encoding: the residue
 * c_0 + c_1 x + ... + c_{e-1} x^{e-1} modulo the defining polynomial is
 * encoded as c_0 + c_1 p + ... + c_{e-1} p^{e-1}. The encoding doubles as
 * the canonical total order on elements, so zero is 0 and one is 1 in
 * every field.
 *
 * Multiplication goes through discrete log tables relative to a primitive
 * element; addition uses full tables for q <= 256 and Zech logarithms
 * otherwise.
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "superpoint/error.hpp"

namespace superpoint {

struct Scalar {
    std::uint32_t code = 0;

    constexpr bool is_zero() const { return code == 0; }
    friend constexpr auto operator<=>(const Scalar&, const Scalar&) = default;
};

inline constexpr Scalar kZero{0};
inline constexpr Scalar kOne{1};

using Vec = std::vector<Scalar>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over F_p, coefficients low degree first, no trailing zeros.
using PolyP = std::vector<std::int64_t>;

inline void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, b = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline PolyP poly_mod(PolyP a, const PolyP& m, std::int64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::int64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const std::int64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

inline PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

inline PolyP poly_gcd(PolyP a, PolyP b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin-style test: f of degree e is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= e/2.
inline bool is_irreducible(const PolyP& f, std::int64_t p) {
    const std::size_t e = f.size() - 1;
    if (e == 1) return true;
    PolyP xpow = {0, 1};
    for (std::size_t i = 1; i <= e / 2; ++i) {
        PolyP acc = {1};
        PolyP base = xpow;
        for (std::int64_t k = p; k > 0; k >>= 1) {
            if (k & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
        }
        xpow = acc;
        PolyP diff = xpow;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;  // length e + 1, monic
    std::vector<std::uint32_t> exp;      // 2(q - 1) entries
    std::vector<std::uint32_t> log;      // q entries, log[0] unused
    std::vector<std::int64_t> zech;      // log(1 + g^k), -1 when 1 + g^k = 0
    std::vector<std::uint32_t> neg;
    std::vector<std::uint16_t> add_tab;  // only for q <= 256
    std::vector<std::uint16_t> mul_tab;
    bool small = false;
    std::uint32_t primitive = 0;

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t r = 0, place = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            r += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        return r;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (small) return add_tab[a * q + b];
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint32_t la = log[a];
        std::uint32_t d = log[b] + (q - 1) - la;
        if (d >= q - 1) d -= q - 1;
        const std::int64_t z = zech[d];
        if (z < 0) return 0;
        return exp[la + static_cast<std::uint32_t>(z)];
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (small) return mul_tab[a * q + b];
        if (a == 0 || b == 0) return 0;
        return exp[log[a] + log[b]];
    }
};

}  // namespace detail

/**
 * Handle to an immutable finite field. Copies share the underlying tables;
 * two handles compare equal when p, e and the modulus agree.
 */
class FiniteField {
public:
    FiniteField() = default;

    /// Largest field order for which tables are built.
    static constexpr std::uint32_t kMaxOrder = 1u << 22;

    static FiniteField create(std::uint32_t p, std::uint32_t e = 1,
                              std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        if (p == 2 || !detail::is_prime(p)) fail(ErrorCode::CompositeP, "characteristic must be an odd prime, got " + std::to_string(p));
        if (e < 1) fail(ErrorCode::BadParameters, "extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            q *= p;
            if (q > kMaxOrder) fail(ErrorCode::BadParameters, "field order exceeds table limit");
        }
        std::vector<std::uint32_t> mod;
        if (e == 1) {
            if (modulus && !(modulus->size() == 2 && (*modulus)[1] == 1 && (*modulus)[0] == 0) && !modulus->empty())
                fail(ErrorCode::BadParameters, "prime fields take no modulus (or x)");
            mod = {0, 1};
        } else if (modulus) {
            mod = *modulus;
            if (mod.size() != e + 1 || mod.back() != 1) fail(ErrorCode::ReducibleModulus, "modulus must be monic of degree e");
            for (auto c : mod)
                if (c >= p) fail(ErrorCode::BadParameters, "modulus coefficient out of range");
            detail::PolyP f(mod.begin(), mod.end());
            if (!detail::is_irreducible(f, p)) fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
        } else {
            mod = default_modulus(p, e);
        }
        FiniteField F;
        F.data_ = build(p, e, static_cast<std::uint32_t>(q), std::move(mod));
        return F;
    }

    /// Smallest monic irreducible of degree e, ordering by the base-p encoding
    /// of (c_0, ..., c_{e-1}) with c_{e-1} most significant.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t e) {
        if (e == 1) return {0, 1};
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < e; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            detail::PolyP f(e + 1, 0);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < e; ++i) {
                f[i] = static_cast<std::int64_t>(c % p);
                c /= p;
            }
            f[e] = 1;
            if (f[0] == 0) continue;
            if (detail::is_irreducible(f, p)) return {f.begin(), f.end()};
        }
        fail(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
    }

    bool valid() const { return data_ != nullptr; }
    std::uint32_t characteristic() const { return data_->p; }
    std::uint32_t degree() const { return data_->e; }
    std::uint32_t order() const { return data_->q; }
    const std::vector<std::uint32_t>& modulus() const { return data_->modulus; }
    const detail::FieldData& data() const { return *data_; }

    Scalar from_int(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(data_->p);
        return Scalar{static_cast<std::uint32_t>(((v % p) + p) % p)};
    }
    Scalar from_code(std::uint64_t code) const {
        if (code >= data_->q) fail(ErrorCode::Parse, "scalar code out of range for field of order " + std::to_string(data_->q));
        return Scalar{static_cast<std::uint32_t>(code)};
    }
    Scalar from_coords(const std::vector<std::uint32_t>& coords) const {
        if (coords.size() != data_->e) fail(ErrorCode::Parse, "scalar coordinate vector must have length e");
        std::uint64_t code = 0, place = 1;
        for (auto c : coords) {
            if (c >= data_->p) fail(ErrorCode::Parse, "scalar coordinate out of range");
            code += c * place;
            place *= data_->p;
        }
        return Scalar{static_cast<std::uint32_t>(code)};
    }
    std::vector<std::uint32_t> coords(Scalar x) const {
        std::vector<std::uint32_t> out(data_->e);
        std::uint32_t c = x.code;
        for (auto& d : out) {
            d = c % data_->p;
            c /= data_->p;
        }
        return out;
    }

    Scalar add(Scalar a, Scalar b) const { return Scalar{data_->add(a.code, b.code)}; }
    Scalar neg(Scalar a) const { return Scalar{data_->neg[a.code]}; }
    Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
    Scalar mul(Scalar a, Scalar b) const { return Scalar{data_->mul(a.code, b.code)}; }
    Scalar inv(Scalar a) const {
        if (a.is_zero()) fail(ErrorCode::BadParameters, "inverse of zero");
        const auto& d = *data_;
        return Scalar{d.exp[(d.q - 1 - d.log[a.code]) % (d.q - 1)]};
    }
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    Scalar pow(Scalar a, std::uint64_t k) const {
        if (k == 0) return kOne;
        if (a.is_zero()) return kZero;
        const auto& d = *data_;
        return Scalar{d.exp[(static_cast<std::uint64_t>(d.log[a.code]) * (k % (d.q - 1))) % (d.q - 1)]};
    }

    Scalar frobenius(Scalar a) const { return pow(a, data_->p); }

    /// Unique y with y^p = a.
    Scalar pth_root(Scalar a) const {
        Scalar y = a;
        for (std::uint32_t i = 1; i < data_->e; ++i) y = frobenius(y);
        return y;
    }

    /// Some y with y^2 = a (the smaller encoding of the two), or none.
    std::optional<Scalar> square_root(Scalar a) const {
        if (a.is_zero()) return kZero;
        const auto& d = *data_;
        const std::uint32_t l = d.log[a.code];
        if (l % 2 != 0) return std::nullopt;
        const Scalar r1{d.exp[l / 2]};
        const Scalar r2{d.exp[l / 2 + (d.q - 1) / 2]};
        return std::min(r1, r2);
    }

    Scalar primitive_element() const { return Scalar{data_->primitive}; }

    /// Human-readable element: an integer for prime fields, a polynomial in g otherwise.
    std::string to_string(Scalar a) const {
        if (data_->e == 1) return std::to_string(a.code);
        const auto cs = coords(a);
        std::string out;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i] == 0) continue;
            if (!out.empty()) out += " + ";
            if (i == 0) out += std::to_string(cs[i]);
            else {
                if (cs[i] != 1) out += std::to_string(cs[i]) + "*";
                out += (i == 1) ? "g" : "g^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : "(" + out + ")";
    }

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->p == b.data_->p && a.data_->e == b.data_->e && a.data_->modulus == b.data_->modulus;
    }

private:
    static std::shared_ptr<const detail::FieldData> build(std::uint32_t p, std::uint32_t e, std::uint32_t q,
                                                          std::vector<std::uint32_t> mod) {
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->e = e;
        d->q = q;
        d->modulus = std::move(mod);
        const detail::PolyP m(d->modulus.begin(), d->modulus.end());

        auto to_poly = [&](std::uint32_t code) {
            detail::PolyP a(e, 0);
            for (std::uint32_t i = 0; i < e; ++i) {
                a[i] = code % p;
                code /= p;
            }
            detail::trim(a);
            return a;
        };
        auto to_code = [&](const detail::PolyP& a) {
            std::uint32_t code = 0, place = 1;
            for (std::size_t i = 0; i < a.size(); ++i) {
                code += static_cast<std::uint32_t>(a[i]) * place;
                place *= p;
            }
            return code;
        };
        auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
            return to_code(detail::poly_mulmod(to_poly(a), to_poly(b), m, p));
        };

        // Primitive element: smallest code of multiplicative order q - 1.
        std::uint32_t g = 0;
        for (std::uint32_t cand = 1; cand < q && g == 0; ++cand) {
            std::uint32_t x = cand, order = 1;
            while (x != 1) {
                x = slow_mul(x, cand);
                ++order;
            }
            if (order == q - 1) g = cand;
        }
        d->primitive = g;
        d->exp.assign(2 * (q - 1), 0);
        d->log.assign(q, 0);
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            d->exp[i] = x;
            d->log[x] = i;
            x = slow_mul(x, g);
        }
        for (std::uint32_t i = q - 1; i < 2 * (q - 1); ++i) d->exp[i] = d->exp[i - (q - 1)];

        d->neg.assign(q, 0);
        for (std::uint32_t a = 0; a < q; ++a) {
            std::uint32_t r = 0, place = 1, c = a;
            for (std::uint32_t i = 0; i < e; ++i) {
                r += ((p - c % p) % p) * place;
                c /= p;
                place *= p;
            }
            d->neg[a] = r;
        }
        d->zech.assign(q - 1, -1);
        for (std::uint32_t k = 0; k < q - 1; ++k) {
            const std::uint32_t s = d->add_digits(1, d->exp[k]);
            d->zech[k] = (s == 0) ? -1 : static_cast<std::int64_t>(d->log[s]);
        }
        if (q <= 256) {
            d->add_tab.resize(static_cast<std::size_t>(q) * q);
            d->mul_tab.resize(static_cast<std::size_t>(q) * q);
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b) {
                    d->add_tab[a * q + b] = static_cast<std::uint16_t>(d->add_digits(a, b));
                    d->mul_tab[a * q + b] = static_cast<std::uint16_t>((a == 0 || b == 0) ? 0 : d->exp[d->log[a] + d->log[b]]);
                }
            d->small = true;
        }
        return d;
    }

    std::shared_ptr<const detail::FieldData> data_;
};

/**
 * Image of every element of `small` inside `big`, indexed by encoding. The
 * generator x of `small` is sent to the root of its modulus in `big` with the
 * smallest encoding, which makes the embedding deterministic.
 */
inline std::vector<Scalar> embedding_map(const FiniteField& small, const FiniteField& big) {
    if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0)
        fail(ErrorCode::FieldMismatch, "no embedding F_{p^" + std::to_string(small.degree()) + "} -> F_{p^" +
                                           std::to_string(big.degree()) + "}");
    std::vector<Scalar> map(small.order());
    if (small == big || small.degree() == 1) {
        for (std::uint32_t c = 0; c < small.order(); ++c) map[c] = Scalar{c};
        return map;
    }
    const auto& mod = small.modulus();
    std::optional<Scalar> root;
    for (std::uint32_t c = 0; c < big.order() && !root; ++c) {
        Scalar acc = kZero;
        for (auto it = mod.rbegin(); it != mod.rend(); ++it) acc = big.add(big.mul(acc, Scalar{c}), big.from_int(*it));
        if (acc.is_zero()) root = Scalar{c};
    }
    for (std::uint32_t c = 0; c < small.order(); ++c) {
        const auto cs = small.coords(Scalar{c});
        Scalar acc = kZero;
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = big.add(big.mul(acc, *root), big.from_int(*it));
        map[c] = acc;
    }
    return map;
}

/// Default field of degree lcm(a.degree, b.degree); both embed into it.
inline FiniteField common_extension(const FiniteField& a, const FiniteField& b) {
    if (a.characteristic() != b.characteristic()) fail(ErrorCode::FieldMismatch, "fields of different characteristic");
    if (a == b) return a;
    const auto l = std::lcm(a.degree(), b.degree());
    if (l == a.degree()) return a;
    if (l == b.degree()) return b;
    return FiniteField::create(a.characteristic(), l);
}

}  // namespace superpoint
