#pragma once

/**
 * @file resolution.hpp
 * @brief Minimal free resolutions over kE, syzygies and Carlson modules.
 *
 * The free module F_j of rank r_j has underlying space kE^{r_j}; generator
 * g with parity offset o_g spans the block g * dim(kE) .. (g+1) * dim(kE) - 1,
 * on which kE acts by left multiplication and the basis monomial x has
 * parity |x| + o_g. Kernels are held as fully reduced echelon subspaces of
 * these underlying spaces, whose bases are homogeneous.
 */

#include <cstdint>
#include <vector>

#include "superpoint/module.hpp"

namespace superpoint {

/// kE^r with the given generator parities, as a graded module.
inline GradedModule free_module(const AlgebraPresentation& alg, const FiniteField& field,
                                const std::vector<std::uint32_t>& gen_parity) {
    const GradedModule R = regular_module(alg, field);
    const std::size_t d = alg.dim();
    const std::size_t r = gen_parity.size();
    GradedModule F;
    F.field = field;
    F.alg = alg;
    for (std::size_t g = 0; g < r; ++g)
        for (std::size_t i = 0; i < d; ++i) F.parity.push_back((R.parity[i] + gen_parity[g]) % 2);
    auto blocks = [&](const Mat& X) {
        Mat B(r * d, r * d);
        for (std::size_t g = 0; g < r; ++g)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) B(g * d + i, g * d + j) = X(i, j);
        return B;
    };
    for (const auto& x : R.s) F.s.push_back(blocks(x));
    if (R.sigma) F.sigma = blocks(*R.sigma);
    return F;
}

struct Resolution {
    GradedModule module;
    std::vector<std::size_t> ranks;                          // r_0 .. r_L
    std::vector<std::vector<std::uint32_t>> generator_parities;
    /// maps[0]: F_0 -> M; maps[j]: F_j -> F_{j-1}, on underlying spaces.
    std::vector<Mat> maps;
    /// images[j][g]: image of generator g of F_j (a vector of M for j = 0).
    std::vector<std::vector<Vec>> images;

    std::size_t length() const { return ranks.empty() ? 0 : ranks.size() - 1; }

    GradedModule free(std::size_t j) const { return free_module(module.alg, module.field, generator_parities.at(j)); }

    /// d_j as an r_{j-1} x r_j matrix of algebra elements, for j >= 1.
    std::vector<std::vector<AlgebraElement>> differential(std::size_t j) const {
        const auto& alg = module.alg;
        const std::size_t d = alg.dim();
        std::vector<std::vector<AlgebraElement>> out(ranks.at(j - 1),
                                                     std::vector<AlgebraElement>(ranks.at(j), AlgebraElement(alg, module.field)));
        for (std::size_t c = 0; c < ranks[j]; ++c) {
            const Vec& v = images[j][c];
            for (std::size_t r = 0; r < ranks[j - 1]; ++r)
                for (std::size_t i = 0; i < d; ++i) out[r][c].set(i, v[r * d + i]);
        }
        return out;
    }
};

namespace detail {

// Underlying matrix of the map out of a free module sending generator g to images[g].
inline Mat free_map_matrix(const GradedModule& target, const std::vector<Vec>& images) {
    const std::size_t d = target.alg.dim();
    std::vector<Vec> cols;
    cols.reserve(images.size() * d);
    for (const auto& v : images)
        for (auto& w : monomial_orbit(target, v)) cols.push_back(std::move(w));
    return Mat::from_columns(target.dim(), cols);
}

inline std::uint32_t vector_parity(const GradedModule& M, const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return M.parity[i];
    return 0;
}

// Homogeneous echelon basis of ker(A).
inline Subspace kernel_space(const FiniteField& F, const Mat& A) {
    const Mat K = kernel_basis(F, A);
    Subspace S(F, A.cols());
    for (std::size_t c = 0; c < K.cols(); ++c) S.insert(K.column(c));
    return S;
}

// Minimal homogeneous generators of a submodule S of M.
inline std::vector<Vec> submodule_generators(const GradedModule& M, const Subspace& S) {
    const auto basis = S.sorted_basis();
    Subspace span(M.field, M.dim());
    for (const auto& v : basis)
        for (std::size_t g = 0; g < M.generator_count(); ++g) span.insert(apply(M.field, M.action(g), v));
    std::vector<Vec> gens;
    for (const auto& v : basis)
        if (span.insert(v)) gens.push_back(v);
    return gens;
}

}  // namespace detail

/// Minimal free resolution F_L -> ... -> F_0 -> M.
inline Resolution minimal_resolution(const GradedModule& M, std::size_t length) {
    check_shape(M);
    Resolution res;
    res.module = M;
    std::vector<Vec> gens = minimal_generators(M);
    GradedModule target = M;
    for (std::size_t j = 0; j <= length; ++j) {
        std::vector<std::uint32_t> par;
        for (const auto& v : gens) par.push_back(detail::vector_parity(target, v));
        res.ranks.push_back(gens.size());
        res.generator_parities.push_back(par);
        res.maps.push_back(detail::free_map_matrix(target, gens));
        res.images.push_back(gens);
        if (j == length) break;
        GradedModule Fj = free_module(M.alg, M.field, par);
        const Subspace K = detail::kernel_space(M.field, res.maps.back());
        gens = detail::submodule_generators(Fj, K);
        target = std::move(Fj);
    }
    return res;
}

inline std::size_t betti(const GradedModule& M, std::size_t i) { return minimal_resolution(M, i).ranks[i]; }

/// Omega^j(M) = ker(F_{j-1} -> F_{j-2}) realized inside F_{j-1}; Omega^0(M) = M.
inline GradedModule syzygy_from(const Resolution& res, std::size_t j) {
    if (j == 0) return res.module;
    if (j > res.length() + 1) fail(ErrorCode::BadParameters, "resolution too short for the requested syzygy");
    const GradedModule F = res.free(j - 1);
    return submodule(F, detail::kernel_space(F.field, res.maps[j - 1]));
}

inline GradedModule syzygy(const GradedModule& M, std::size_t j) {
    if (j == 0) return M;
    return syzygy_from(minimal_resolution(M, j - 1), j);
}

/// A class in even cohomological degree given by its values on the generators of F_degree.
struct CohomologyClassRep {
    std::size_t degree = 0;
    Vec coeffs;
};

struct CarlsonData {
    GradedModule omega;       // Omega^{2d}(k) inside F_{2d-1}
    GradedModule module;      // L_xi
    Mat inclusion;            // L_xi -> Omega^{2d}(k)
    Mat projection;           // Omega^{2d}(k) -> k, the map induced by xi
};

/**
 * L_xi for a class xi on the generators of F_{2d} in the minimal resolution
 * of the trivial module: the kernel of the map Omega^{2d}(k) -> k sending
 * d(x) to xi(x), where xi reads the unit coefficient of each generator block.
 */
inline CarlsonData carlson_data(const AlgebraPresentation& alg, const FiniteField& field, const CohomologyClassRep& xi) {
    const std::size_t deg = xi.degree;
    if (deg % 2 != 0 || deg == 0) fail(ErrorCode::BadParameters, "cohomological degree must be positive and even");
    const Resolution res = minimal_resolution(trivial_module(alg, field), deg);
    const std::size_t r = res.ranks[deg];
    if (xi.coeffs.size() != r)
        fail(ErrorCode::DimensionMismatch, "class needs " + std::to_string(r) + " coefficients in this degree");
    bool zero = true;
    for (std::size_t g = 0; g < r; ++g) {
        if (xi.coeffs[g].is_zero()) continue;
        zero = false;
        if (res.generator_parities[deg][g] != 0)
            fail(ErrorCode::OddInternalDegree, "class is nonzero on an odd generator");
    }
    if (zero) fail(ErrorCode::ZeroClass, "class is zero");

    const auto& F = field;
    const GradedModule Fprev = res.free(deg - 1);
    const Subspace omega_space = detail::kernel_space(F, res.maps[deg - 1]);
    CarlsonData out;
    out.omega = submodule(Fprev, omega_space);
    const auto basis = omega_space.sorted_basis();
    const std::size_t d = alg.dim();

    // xi-hat on each basis vector of Omega, through a preimage under d_{2d}.
    const Mat& D = res.maps[deg];
    Mat Y = Mat::from_columns(Fprev.dim(), basis);
    auto X = solve_many(F, D, Y);
    if (!X) fail(ErrorCode::RelationViolation, "resolution is not exact at the syzygy");
    Mat proj(1, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        Scalar acc = kZero;
        for (std::size_t g = 0; g < r; ++g) acc = F.add(acc, F.mul(xi.coeffs[g], (*X)(g * d + alg.unit_index(), c)));
        proj(0, c) = acc;
    }
    out.projection = proj;
    const Mat Kc = kernel_basis(F, proj);
    Subspace L(F, out.omega.dim());
    for (std::size_t c = 0; c < Kc.cols(); ++c) L.insert(Kc.column(c));
    out.module = submodule(out.omega, L);
    out.inclusion = Mat::from_columns(out.omega.dim(), L.sorted_basis());
    return out;
}

inline GradedModule carlson_module(const AlgebraPresentation& alg, const FiniteField& field, const CohomologyClassRep& xi) {
    return carlson_data(alg, field, xi).module;
}

}  // namespace superpoint
