#pragma once

/**
 * @file random.hpp
 * @brief Seeded generator of valid graded modules.
 *
 * Modules are direct sums of structured pieces (quotients of kE and kE^2 by
 * random homogeneous relations, ideals of kE, k and kE itself), with random
 * parity shifts and an optional random homogeneous change of basis. Every
 * piece is a genuine module, so the output always validates.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "superpoint/resolution.hpp"

namespace superpoint {

struct RandomModuleSpec {
    std::uint64_t seed = 0;
    std::size_t dim = 6;                 // upper bound on the dimension
    AlgebraPresentation alg;
    FiniteField field;
    double shift_probability = 0.5;      // chance that a piece is parity shifted
    bool mix_basis = true;               // conjugate by a random homogeneous basis change
};

namespace detail {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
    bool chance(double p) { return static_cast<double>(gen_() % 1'000'000) < p * 1'000'000.0; }
    Scalar scalar(const FiniteField& F) { return Scalar{static_cast<std::uint32_t>(below(F.order()))}; }
    Scalar nonzero(const FiniteField& F) { return Scalar{static_cast<std::uint32_t>(1 + below(F.order() - 1))}; }

private:
    std::mt19937_64 gen_;
};

// Random homogeneous vector of the free module `F` lying in its radical.
inline Vec random_radical_vector(SeededRng& rng, const GradedModule& F, std::size_t rank) {
    const auto& alg = F.alg;
    const std::size_t d = alg.dim();
    const std::uint32_t par = static_cast<std::uint32_t>(rng.below(2));
    Vec v(F.dim());
    const std::size_t terms = 1 + rng.below(3);
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t g = rng.below(rank);
        if (d <= 1) break;
        for (int tries = 0; tries < 16; ++tries) {
            const std::size_t idx = 1 + rng.below(d - 1);
            if (F.parity[g * d + idx] != par) continue;
            v[g * d + idx] = F.field.add(v[g * d + idx], rng.nonzero(F.field));
            break;
        }
    }
    return v;
}

// Quotient of kE^rank by random relations until its dimension is at most `target`.
inline GradedModule random_quotient(SeededRng& rng, const AlgebraPresentation& alg, const FiniteField& field,
                                    std::size_t rank, std::size_t target) {
    std::vector<std::uint32_t> par(rank);
    for (auto& x : par) x = static_cast<std::uint32_t>(rng.below(2));
    const GradedModule F = free_module(alg, field, par);
    std::vector<Vec> rels;
    Subspace R(field, F.dim());
    while (F.dim() - R.dim() > target) {
        rels.push_back(random_radical_vector(rng, F, rank));
        R = submodule_closure(F, rels);
    }
    return quotient(F, R);
}

// An ideal of kE generated by one random homogeneous element, if small enough.
inline std::optional<GradedModule> random_ideal(SeededRng& rng, const AlgebraPresentation& alg, const FiniteField& field,
                                                std::size_t target) {
    const GradedModule R = regular_module(alg, field);
    const Vec v = random_radical_vector(rng, R, 1);
    bool zero = true;
    for (auto c : v) zero = zero && c.is_zero();
    if (zero) return std::nullopt;
    const Subspace I = submodule_closure(R, {v});
    if (I.dim() == 0 || I.dim() > target) return std::nullopt;
    return submodule(R, I);
}

inline GradedModule random_piece(SeededRng& rng, const AlgebraPresentation& alg, const FiniteField& field,
                                 std::size_t budget) {
    const std::size_t dA = alg.dim();
    const auto kind = rng.below(10);
    if (kind == 0) return trivial_module(alg, field);
    if (kind == 1 && dA <= budget) return regular_module(alg, field);
    if (kind <= 3) {
        if (auto I = random_ideal(rng, alg, field, budget)) return *I;
    }
    if (kind <= 5 && budget >= 2) return random_quotient(rng, alg, field, 2, budget);
    return random_quotient(rng, alg, field, 1, budget);
}

inline Mat random_homogeneous_basis(SeededRng& rng, const FiniteField& F, const std::vector<std::uint32_t>& parity) {
    const std::size_t d = parity.size();
    for (;;) {
        Mat P(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                if (parity[r] == parity[c]) P(r, c) = rng.scalar(F);
        if (rank(F, P) == d) return P;
    }
}

}  // namespace detail

/// Deterministic in the seed; the dimension is between 1 and spec.dim.
inline GradedModule module_random(const RandomModuleSpec& spec) {
    if (spec.dim < 1) fail(ErrorCode::BadParameters, "target dimension must be at least 1");
    if (spec.alg.p() != spec.field.characteristic())
        fail(ErrorCode::CharacteristicMismatch, "field characteristic differs from the algebra's");
    detail::SeededRng rng(spec.seed);
    const auto& alg = spec.alg;
    const auto& field = spec.field;
    std::optional<GradedModule> M;
    auto push = [&](GradedModule piece) {
        if (rng.chance(spec.shift_probability)) piece = parity_shift(piece);
        M = M ? direct_sum(*M, piece) : piece;
    };
    if (alg.dim() <= spec.dim && rng.below(6) == 0) {
        // Free: a direct sum of shifted copies of kE.
        const std::size_t copies = 1 + rng.below(spec.dim / alg.dim());
        for (std::size_t i = 0; i < copies; ++i) push(regular_module(alg, field));
    } else {
        std::size_t remaining = 1 + rng.below(spec.dim);
        if (rng.below(3) != 0) remaining = spec.dim;
        while (remaining > 0) {
            GradedModule piece = detail::random_piece(rng, alg, field, remaining);
            remaining -= piece.dim();
            push(std::move(piece));
            if (remaining > 0 && rng.below(4) == 0) break;
        }
    }
    if (spec.mix_basis && rng.below(2) == 0) {
        const Mat P = detail::random_homogeneous_basis(rng, field, M->parity);
        M = change_basis(*M, P, M->parity);
    }
    return *M;
}

}  // namespace superpoint
