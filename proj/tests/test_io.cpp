#include <gtest/gtest.h>

#include "superpoint/checks.hpp"
#include "superpoint/io.hpp"

using namespace superpoint;
using io::Json;

namespace {

template <class Fn>
void expect_error(Fn fn, ErrorCode code) {
    try {
        fn();
        FAIL() << "no error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

TEST(Io, ScalarEncodings) {
    auto F3 = FiniteField::create(3);
    EXPECT_EQ(io::scalar_to_json(F3, Scalar{2}), Json(2));
    auto F9 = FiniteField::create(3, 2);
    EXPECT_EQ(io::scalar_to_json(F9, Scalar{7}), Json::parse("[1,2]"));
    EXPECT_EQ(io::scalar_from_json(F9, Json::parse("[1,2]")), Scalar{7});
    // integer codes are accepted for extension fields too
    EXPECT_EQ(io::scalar_from_json(F9, Json(7)), Scalar{7});
    expect_error([&] { io::scalar_from_json(F3, Json(3)); }, ErrorCode::Parse);
    expect_error([&] { io::scalar_from_json(F9, Json::parse("[1,2,0]")); }, ErrorCode::Parse);
    expect_error([&] { io::scalar_from_json(F3, Json("x")); }, ErrorCode::Parse);
}

TEST(Io, ModuleRoundTrips) {
    for (const auto& alg : checks::corpus_algebras())
        for (std::uint32_t e : {1u, 2u}) {
            auto F = FiniteField::create(3, e);
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                auto M = module_random({seed, 8, alg, F});
                const std::string text = io::dump(io::module_to_json(M));
                auto back = io::module_from_json(io::parse_text(text));
                EXPECT_EQ(back, M);
                EXPECT_EQ(io::dump(io::module_to_json(back)), text);
            }
        }
}

TEST(Io, ModuleFormat) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    auto F = FiniteField::create(3);
    const Json j = io::module_to_json(checks::quotient_by_generator(alg, F, 0));
    EXPECT_EQ(j.dump(),
              R"({"actions":{"s1":[[0,0],[0,0]],"sigma":[[0,0],[1,0]]},"algebra":{"family":"witt","m":2,"n":1,"p":3},)"
              R"("dim":2,"field":{"degree":1},"parity":[0,1]})");
    auto F9 = FiniteField::create(3, 2);
    const Json k9 = io::module_to_json(trivial_module(alg, F9));
    EXPECT_EQ(k9["field"], Json::parse(R"({"degree":2,"modulus":[1,0,1]})"));
    EXPECT_EQ(k9["actions"]["s1"], Json::parse("[[[0,0]]]"));
}

TEST(Io, ModuleParseErrors) {
    const std::string good =
        R"({"actions":{"s1":[[0,0],[0,0]],"sigma":[[0,0],[1,0]]},"algebra":{"family":"witt","m":2,"n":1,"p":3},"dim":2,"parity":[0,1]})";
    EXPECT_NO_THROW(io::module_from_json(io::parse_text(good)));  // a missing field means the prime field
    expect_error([] { io::parse_text("{not json"); }, ErrorCode::Parse);
    auto mutate = [&](const std::string& pointer, const Json& value) {
        Json j = Json::parse(good);
        j[Json::json_pointer(pointer)] = value;
        return j;
    };
    expect_error([&] { io::module_from_json(mutate("/parity", Json::parse("[0,2]"))); }, ErrorCode::Parse);
    expect_error([&] { io::module_from_json(mutate("/parity", Json::parse("[0]"))); }, ErrorCode::DimensionMismatch);
    expect_error([&] { io::module_from_json(mutate("/actions/s2", Json::parse("[[0,0],[0,0]]"))); }, ErrorCode::Parse);
    expect_error([&] { io::module_from_json(mutate("/actions/s1", Json::parse("[[0,0]]"))); }, ErrorCode::DimensionMismatch);
    expect_error([&] { io::module_from_json(mutate("/actions/s1", Json::parse("[[0,5],[0,0]]"))); }, ErrorCode::Parse);
    expect_error([&] { io::module_from_json(mutate("/algebra/family", "spin")); }, ErrorCode::Parse);
    Json ea = Json::parse(good);
    ea["algebra"] = Json::parse(R"({"family":"elem_abelian","n":1,"p":3})");
    expect_error([&] { io::module_from_json(ea); }, ErrorCode::Parse);
    expect_error([&] { io::module_from_json(mutate("/field", Json::parse(R"({"degree":2,"modulus":[2,0,1]})"))); },
                 ErrorCode::ReducibleModulus);
}

TEST(Io, AlgebraFormat) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    EXPECT_EQ(io::algebra_to_json(alg).dump(), R"({"family":"witt","m":2,"n":1,"p":3})");
    EXPECT_EQ(io::algebra_from_json(io::algebra_to_json(alg)), alg);
    auto ext = AlgebraPresentation::create(5, Family::ExteriorLike, 2);
    EXPECT_EQ(io::algebra_to_json(ext).dump(), R"({"family":"exterior","n":2,"p":5})");
    EXPECT_EQ(io::algebra_from_json(io::algebra_to_json(ext)), ext);
    expect_error([] { io::algebra_from_json(Json::parse(R"({"family":"exterior","n":2,"p":5,"m":2})")); },
                 ErrorCode::BadParameters);
}

TEST(Io, VarietyRoundTrips) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    for (std::uint32_t e : {1u, 2u}) {
        auto V = rank_variety(checks::quotient_by_generator(alg, FiniteField::create(3), 1), e);
        const Json j = io::variety_to_json(V);
        EXPECT_EQ(io::variety_from_json(io::parse_text(io::dump(j))), V);
    }
    const Json j = io::variety_to_json(rank_variety(checks::quotient_by_generator(alg, FiniteField::create(3), 1), 1));
    EXPECT_EQ(j.dump(), R"({"field":{"degree":1,"p":3},"points":[[0,0],[1,0],[2,0]]})");
}

TEST(Io, SpecAndElementRoundTrips) {
    auto alg = AlgebraPresentation::create(3, Family::Witt, 1, 2);
    auto F = FiniteField::create(3, 2);
    detail::SeededRng rng(2);
    for (int t = 0; t < 20; ++t) {
        auto spec = checks::random_witt_spec(rng, alg, F);
        auto back = io::spec_from_json(io::parse_text(io::dump(io::spec_to_json(spec))));
        EXPECT_EQ(back.f, spec.f);
        EXPECT_EQ(back.g, spec.g);
        EXPECT_EQ(back.field, spec.field);
    }
    auto x = AlgebraElement::generator(alg, F, 1) * AlgebraElement::generator(alg, F, 0).pow(2);
    EXPECT_EQ(io::element_to_json(x).dump(), R"({"2,1":[1,0]})");
    EXPECT_EQ(io::element_from_json(alg, F, io::element_to_json(x)), x);
    expect_error([&] { io::element_from_json(alg, F, Json::parse(R"({"9,0":1})")); }, ErrorCode::BadParameters);
    expect_error([&] { io::element_from_json(alg, F, Json::parse(R"({"1":1})")); }, ErrorCode::Parse);
    expect_error([&] { io::spoly_from_json(alg, F, Json::parse(R"({"a":1})")); }, ErrorCode::Parse);
}

TEST(Io, ResolutionFormat) {
    auto alg = AlgebraPresentation::create(3, Family::ElemAbelian, 1);
    auto res = minimal_resolution(trivial_module(alg, FiniteField::create(3)), 2);
    EXPECT_EQ(io::resolution_to_json(res).dump(),
              R"({"differentials":[[[{"1":1}]],[[{"2":1}]]],"generators":[[1]],"parities":[[0],[0],[0]],"ranks":[1,1,1]})");
}
