#pragma once

/**
 * @file io.hpp
 * @brief JSON encodings of fields, algebras, modules, points, maps,
 *        varieties and resolutions.
 *
 * Scalars are plain integers over prime fields and length-e coordinate
 * arrays otherwise; on input an integer is also read as the base-p code.
 * Matrices are row-major nested arrays acting on column vectors. Every
 * object is an ordered map, so dumps have sorted keys.
 */

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "superpoint/resolution.hpp"
#include "superpoint/variety.hpp"

namespace superpoint::io {

using Json = nlohmann::json;

inline const Json& require(const Json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorCode::Parse, "missing key '" + key + "'");
    return j.at(key);
}

inline std::uint64_t as_uint(const Json& j, const std::string& what) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(ErrorCode::Parse, what + " must be a non-negative integer");
    return j.get<std::uint64_t>();
}

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    }
}

// ---- scalars and matrices ----

inline Json scalar_to_json(const FiniteField& F, Scalar x) {
    if (F.degree() == 1) return x.code;
    return F.coords(x);
}

inline Scalar scalar_from_json(const FiniteField& F, const Json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0) fail(ErrorCode::Parse, "negative scalar code");
        return F.from_code(static_cast<std::uint64_t>(v));
    }
    if (j.is_array()) {
        std::vector<std::uint32_t> cs;
        for (const auto& c : j) cs.push_back(static_cast<std::uint32_t>(as_uint(c, "scalar coordinate")));
        return F.from_coords(cs);
    }
    fail(ErrorCode::Parse, "scalar must be an integer or a coordinate array");
}

inline Json vec_to_json(const FiniteField& F, const Vec& v) {
    Json out = Json::array();
    for (auto x : v) out.push_back(scalar_to_json(F, x));
    return out;
}

inline Vec vec_from_json(const FiniteField& F, const Json& j) {
    if (!j.is_array()) fail(ErrorCode::Parse, "vector must be an array");
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(F, x));
    return v;
}

inline Json mat_to_json(const FiniteField& F, const Mat& A) {
    Json out = Json::array();
    for (std::size_t r = 0; r < A.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < A.cols(); ++c) row.push_back(scalar_to_json(F, A(r, c)));
        out.push_back(row);
    }
    return out;
}

inline Mat mat_from_json(const FiniteField& F, const Json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) fail(ErrorCode::DimensionMismatch, "matrix must have " + std::to_string(rows) + " rows");
    Mat A(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols)
            fail(ErrorCode::DimensionMismatch, "matrix row must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) A(r, c) = scalar_from_json(F, row[c]);
    }
    return A;
}

// ---- fields and algebras ----

inline Json field_to_json(const FiniteField& F) {
    Json out{{"p", F.characteristic()}, {"degree", F.degree()}};
    if (F.degree() > 1) out["modulus"] = F.modulus();
    return out;
}

/// Field description; `p` comes from the surrounding algebra unless the object lists it.
inline FiniteField field_from_json(const Json& j, std::uint32_t p) {
    if (j.is_null()) return FiniteField::create(p, 1);
    if (!j.is_object()) fail(ErrorCode::Parse, "field must be an object");
    if (j.contains("p") && as_uint(j.at("p"), "field p") != p) fail(ErrorCode::CharacteristicMismatch, "field p differs from the algebra's");
    const auto e = j.contains("degree") ? static_cast<std::uint32_t>(as_uint(j.at("degree"), "field degree")) : 1u;
    std::optional<std::vector<std::uint32_t>> mod;
    if (j.contains("modulus")) {
        if (!j.at("modulus").is_array()) fail(ErrorCode::Parse, "modulus must be an array");
        std::vector<std::uint32_t> m;
        for (const auto& c : j.at("modulus")) m.push_back(static_cast<std::uint32_t>(as_uint(c, "modulus coefficient")));
        mod = m;
    }
    return FiniteField::create(p, e, mod);
}

inline Json algebra_to_json(const AlgebraPresentation& A) {
    Json out{{"p", A.p()}, {"family", family_name(A.family())}, {"n", A.n()}};
    if (A.family() == Family::Witt) out["m"] = A.m();
    return out;
}

inline AlgebraPresentation algebra_from_json(const Json& j) {
    const auto p = static_cast<std::uint32_t>(as_uint(require(j, "p"), "p"));
    const auto& fam = require(j, "family");
    if (!fam.is_string()) fail(ErrorCode::Parse, "family must be a string");
    const Family family = parse_family(fam.get<std::string>());
    const auto n = static_cast<std::uint32_t>(as_uint(require(j, "n"), "n"));
    std::uint32_t m = 0;
    if (family == Family::Witt) m = static_cast<std::uint32_t>(as_uint(require(j, "m"), "m"));
    else if (j.contains("m")) fail(ErrorCode::BadParameters, "only the witt family takes m");
    return AlgebraPresentation::create(p, family, n, m);
}

// ---- modules ----

inline Json module_to_json(const GradedModule& M) {
    Json actions = Json::object();
    for (std::size_t i = 0; i < M.s.size(); ++i) actions["s" + std::to_string(i + 1)] = mat_to_json(M.field, M.s[i]);
    if (M.sigma) actions["sigma"] = mat_to_json(M.field, *M.sigma);
    Json field = field_to_json(M.field);
    field.erase("p");
    return Json{{"algebra", algebra_to_json(M.alg)},
                {"field", field},
                {"dim", M.dim()},
                {"parity", M.parity},
                {"actions", actions}};
}

inline GradedModule module_from_json(const Json& j) {
    GradedModule M;
    M.alg = algebra_from_json(require(j, "algebra"));
    M.field = field_from_json(j.contains("field") ? j.at("field") : Json(), M.alg.p());
    const std::size_t d = as_uint(require(j, "dim"), "dim");
    const auto& par = require(j, "parity");
    if (!par.is_array() || par.size() != d) fail(ErrorCode::DimensionMismatch, "parity vector must have dim entries");
    for (const auto& x : par) {
        const auto v = as_uint(x, "parity entry");
        if (v > 1) fail(ErrorCode::Parse, "parity entries must be 0 or 1");
        M.parity.push_back(static_cast<std::uint32_t>(v));
    }
    const auto& acts = require(j, "actions");
    if (!acts.is_object()) fail(ErrorCode::Parse, "actions must be an object");
    for (auto it = acts.begin(); it != acts.end(); ++it) {
        const std::string& k = it.key();
        bool known = k == "sigma";
        for (std::uint32_t i = 0; i < M.alg.n(); ++i) known = known || k == "s" + std::to_string(i + 1);
        if (!known) fail(ErrorCode::Parse, "unknown action '" + k + "'");
    }
    for (std::uint32_t i = 0; i < M.alg.n(); ++i)
        M.s.push_back(mat_from_json(M.field, require(acts, "s" + std::to_string(i + 1)), d, d));
    if (M.alg.has_sigma()) M.sigma = mat_from_json(M.field, require(acts, "sigma"), d, d);
    else if (acts.contains("sigma")) fail(ErrorCode::Parse, "sigma is not allowed for elem_abelian");
    check_shape(M);
    return M;
}

// ---- algebra elements and polynomials ----

inline std::string exponent_key(const std::vector<std::uint32_t>& exps) {
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) out += (i ? "," : "") + std::to_string(exps[i]);
    return out;
}

inline std::vector<std::uint32_t> parse_exponent_key(const std::string& key) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::Parse, "bad exponent key '" + key + "'");
        out.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    }
    return out;
}

/// {"a_1,..,a_n,eps": coefficient}; elementary abelian keys omit eps.
inline Json element_to_json(const AlgebraElement& x) {
    Json out = Json::object();
    const auto& alg = x.algebra();
    for (auto [idx, c] : x.terms()) {
        auto exps = alg.monomial(idx).exps;
        if (alg.has_sigma()) exps.push_back(alg.monomial(idx).eps);
        out[exponent_key(exps)] = scalar_to_json(x.field(), c);
    }
    return out;
}

inline AlgebraElement element_from_json(const AlgebraPresentation& alg, const FiniteField& F, const Json& j) {
    if (!j.is_object()) fail(ErrorCode::Parse, "algebra element must be an object");
    AlgebraElement x(alg, F);
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto exps = parse_exponent_key(it.key());
        Monomial mono;
        if (alg.has_sigma()) {
            if (exps.size() != alg.n() + 1) fail(ErrorCode::Parse, "monomial key needs n + 1 entries");
            mono.eps = exps.back();
            exps.pop_back();
        } else if (exps.size() != alg.n()) {
            fail(ErrorCode::Parse, "monomial key needs n entries");
        }
        mono.exps = exps;
        const auto idx = alg.index_of(mono);
        if (!idx) fail(ErrorCode::BadParameters, "monomial '" + it.key() + "' is outside the basis");
        x.set(*idx, F.add(x.coeff(*idx), scalar_from_json(F, it.value())));
    }
    return x;
}

inline Json spoly_to_json(const FiniteField& F, const SPoly& f) {
    Json out = Json::object();
    for (const auto& [e, c] : f) out[exponent_key(e)] = scalar_to_json(F, c);
    return out;
}

inline SPoly spoly_from_json(const AlgebraPresentation& alg, const FiniteField& F, const Json& j) {
    if (j.is_null()) return {};
    if (!j.is_object()) fail(ErrorCode::Parse, "polynomial must be an object");
    SPoly out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto exps = parse_exponent_key(it.key());
        if (exps.size() != alg.n()) fail(ErrorCode::Parse, "polynomial key needs n entries");
        const Scalar c = scalar_from_json(F, it.value());
        auto& slot = out[exps];
        slot = F.add(slot, c);
        if (slot.is_zero()) out.erase(exps);
    }
    return out;
}

inline Json spec_to_json(const AlgebraMapSpec& s) {
    Json field = field_to_json(s.field);
    field.erase("p");
    return Json{{"algebra", algebra_to_json(s.alg)},
                {"field", field},
                {"f", spoly_to_json(s.field, s.f)},
                {"g", spoly_to_json(s.field, s.g)}};
}

inline AlgebraMapSpec spec_from_json(const Json& j) {
    AlgebraMapSpec s;
    s.alg = algebra_from_json(require(j, "algebra"));
    s.field = field_from_json(j.contains("field") ? j.at("field") : Json(), s.alg.p());
    s.f = spoly_from_json(s.alg, s.field, j.contains("f") ? j.at("f") : Json());
    s.g = spoly_from_json(s.alg, s.field, j.contains("g") ? j.at("g") : Json());
    return s;
}

// ---- points, varieties, resolutions ----

inline PiPointRep point_from_json(const AlgebraPresentation& alg, const FiniteField& F, const Json& j) {
    PiPointRep a{alg.family(), F, vec_from_json(F, j)};
    if (a.coords.size() != point_length(alg))
        fail(ErrorCode::DimensionMismatch, "point needs " + std::to_string(point_length(alg)) + " coordinates");
    return a;
}

inline Json points_to_json(const FiniteField& F, const std::vector<Vec>& pts) {
    Json out = Json::array();
    for (const auto& a : pts) out.push_back(vec_to_json(F, a));
    return out;
}

inline Json variety_to_json(const RankVariety& V) {
    return Json{{"field", field_to_json(V.field)}, {"points", points_to_json(V.field, V.points)}};
}

inline RankVariety variety_from_json(const Json& j) {
    const auto& fj = require(j, "field");
    RankVariety V;
    V.field = field_from_json(fj, static_cast<std::uint32_t>(as_uint(require(fj, "p"), "p")));
    const auto& pts = require(j, "points");
    if (!pts.is_array()) fail(ErrorCode::Parse, "points must be an array");
    for (const auto& a : pts) V.points.push_back(vec_from_json(V.field, a));
    return V;
}

inline Json resolution_to_json(const Resolution& res) {
    Json diffs = Json::array();
    for (std::size_t j = 1; j < res.ranks.size(); ++j) {
        Json mat = Json::array();
        for (const auto& row : res.differential(j)) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(element_to_json(x));
            mat.push_back(r);
        }
        diffs.push_back(mat);
    }
    Json cover = Json::array();
    for (const auto& v : res.images[0]) cover.push_back(vec_to_json(res.module.field, v));
    return Json{{"ranks", res.ranks}, {"parities", res.generator_parities}, {"differentials", diffs}, {"generators", cover}};
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace superpoint::io
