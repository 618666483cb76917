#include "gca/json_io.hpp"

#include "gca/constructions.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gca;

namespace {

template <class K>
const GradedAlgebra<K>& as(const AlgebraDocument& doc) {
    return std::get<GradedAlgebra<K>>(doc.algebra);
}

} // namespace

TEST_CASE("serialize/parse round trip is structurally lossless") {
    auto q = quaternions();
    auto doc = parse_document(serialize(q));
    CHECK(as<Rational>(doc).same_structure(q));

    auto c = clifford_complex(2);
    auto doc2 = parse_document(serialize(c));
    CHECK(as<GaussianRational>(doc2).same_structure(c));
}

TEST_CASE("serialize -> parse -> serialize is byte-identical") {
    auto check_bytes = [](const std::string& text) {
        auto doc = parse_document(text);
        CHECK(serialize(doc) == text);
    };
    check_bytes(serialize(quaternions()));
    check_bytes(serialize(clifford<Rational>(2, 1)));
    check_bytes(serialize(clifford_complex(3)));
    auto F = standard_cocycle(3);
    check_bytes(serialize(twisted_group_algebra<Rational>(3, F), F.form()));
    check_bytes(serialize(even_twisted_subalgebra<Rational>(3, F), F.form()));
    auto nb = matrix_units_basis(2);
    check_bytes(serialize(matrix_algebra<Rational>(2, nb.mats, nb.labels)));
}

TEST_CASE("the cocycle matrix rides along") {
    auto F = standard_cocycle(3);
    auto text = serialize(twisted_group_algebra<Rational>(3, F), F.form());
    auto doc = parse_document(text);
    REQUIRE(doc.cocycle.has_value());
    CHECK(*doc.cocycle == F.form());
}

TEST_CASE("parser normalizes scalars to lowest terms") {
    auto base = nlohmann::json::parse(serialize(clifford<Rational>(1, 0)));
    base["structure"][1][3] = {{"num", 2}, {"den", 2}};
    auto doc = parse_document(base.dump());
    CHECK(as<Rational>(doc).same_structure(clifford<Rational>(1, 0)));
}

TEST_CASE("parser rejects malformed documents") {
    const std::string good = serialize(quaternions());
    auto mutate = [&good](auto&& f) {
        auto j = nlohmann::json::parse(good);
        f(j);
        return j.dump();
    };

    CHECK_THROWS_AS(parse_document("{"), std::runtime_error);
    CHECK_THROWS_AS(parse_document("[]"), std::runtime_error);
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["field"] = "real"; })), std::runtime_error);
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["n"] = 5; })), std::runtime_error);
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["basis"][1]["degree"] = nullptr; })),
                    std::runtime_error); // mixed graded / ungraded
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["basis"][1]["label"] = "eps"; })),
                    std::runtime_error); // duplicate label
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["structure"][0][2] = 9; })),
                    std::runtime_error); // index out of range
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) {
                        j["structure"][0][3] = {{"num", 0}, {"den", 1}};
                    })),
                    std::runtime_error); // zero structure constant
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) {
                        j["structure"][0][3] = {{"num", 1}, {"den", 0}};
                    })),
                    std::runtime_error); // zero denominator
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["unit"][0] = {{"num", 2}, {"den", 1}}; })),
                    std::runtime_error); // unit law broken
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["basis"][0]["degree"] = {0, 1}; })),
                    std::runtime_error); // degree dimension mismatch
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) { j["cocycle"] = {{0, 1}, {1, 0}}; })),
                    std::runtime_error); // cocycle dim != grading dim
    CHECK_THROWS_AS(parse_document(mutate([](auto& j) {
                        j["structure"][0].erase(3);
                    })),
                    std::runtime_error); // entry arity
}

TEST_CASE("serializer refuses scalars beyond the 64-bit JSON range") {
    using QA = GradedAlgebra<Rational>;
    Rational huge(BigInt("123456789012345678901234567890"), BigInt(1));
    std::vector<QA::Entry> entries{
        {0, 0, 0, Rational(1)}, {0, 1, 1, Rational(1)}, {1, 0, 1, Rational(1)}, {1, 1, 0, huge}};
    QA a({"eps", "d"}, std::nullopt, std::move(entries), {Rational(1), Rational(0)});
    CHECK_THROWS_AS(serialize(a), std::runtime_error);
}

TEST_CASE("gaussian scalars round trip with re/im parts") {
    auto c = clifford_complex(1);
    auto text = serialize(c);
    CHECK(text.find("\"re\"") != std::string::npos);
    CHECK(text.find("\"im\"") != std::string::npos);
    auto doc = parse_document(text);
    CHECK(as<GaussianRational>(doc).same_structure(c));

    // rational documents must not use re/im scalars and vice versa
    auto j = nlohmann::json::parse(text);
    j["field"] = "rational";
    CHECK_THROWS_AS(parse_document(j.dump()), std::runtime_error);
}
