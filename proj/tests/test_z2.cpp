#include "gca/z2.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace gca;

namespace {
GroupElement g(std::uint64_t bits, unsigned n) { return GroupElement(bits, n); }
} // namespace

TEST_CASE("gp_add is bitwise xor in paper coordinates") {
    // (0,1,1) + (1,0,1) = (1,1,0): the group part of the i*j example
    CHECK(gp_add(g(0b110, 3), g(0b101, 3)) == g(0b011, 3));
    CHECK(gp_add(g(0b100, 3), g(0b000, 3)) == g(0b100, 3));
    for (unsigned n = 1; n <= 4; ++n)
        for (auto a : enumerate_group(n)) CHECK(gp_add(a, a) == GroupElement::zero(n));
}

TEST_CASE("gp_add rejects dimension mismatches") {
    CHECK_THROWS_AS(gp_add(g(1, 2), g(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(scalar_product(g(1, 2), g(1, 3)), std::invalid_argument);
}

TEST_CASE("GroupElement construction enforces its invariants") {
    CHECK_THROWS_AS(GroupElement(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(GroupElement(0, 63), std::invalid_argument);
    CHECK_THROWS_AS(GroupElement(0b100, 2), std::invalid_argument);
    CHECK_NOTHROW(GroupElement((std::uint64_t{1} << 62) - 1, 62));
}

TEST_CASE("scalar product matches the paper's footnote values") {
    CHECK(scalar_product(g(0b110, 3), g(0b101, 3)) == 1); // <i_bar, j_bar> = 1
    CHECK(scalar_product(g(0b110, 3), g(0b110, 3)) == 0); // <i_bar, i_bar> = 0
    for (auto a : enumerate_group(4)) CHECK(scalar_product(a, GroupElement::zero(4)) == 0);
}

TEST_CASE("group laws hold exhaustively for n <= 6") {
    for (unsigned n : {1u, 3u, 6u}) {
        auto all = enumerate_group(n);
        for (auto a : all)
            for (auto b : all) {
                CHECK(gp_add(a, b) == gp_add(b, a));
                CHECK(scalar_product(a, b) == scalar_product(b, a));
            }
        auto zero = GroupElement::zero(n);
        for (auto a : all) {
            CHECK(gp_add(a, zero) == a);
            CHECK(gp_add(a, a) == zero);
        }
        // associativity and bilinearity of the pairing
        for (auto a : all)
            for (auto b : all)
                for (auto c : all) {
                    CHECK(gp_add(gp_add(a, b), c) == gp_add(a, gp_add(b, c)));
                    CHECK(scalar_product(gp_add(a, b), c) ==
                          ((scalar_product(a, c) + scalar_product(b, c)) & 1));
                }
    }
}

TEST_CASE("parity counts 1-entries mod 2") {
    CHECK(parity(g(0b110, 3)) == 0);
    CHECK(parity(g(0b111, 3)) == 1);
    CHECK(parity(g(0b000, 3)) == 0);
}

TEST_CASE("enumerate_group lists all elements in bit-pattern order") {
    auto one = enumerate_group(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == g(0, 1));
    CHECK(one[1] == g(1, 1));

    // bit 0 is the first printed coordinate
    auto two = enumerate_group(2);
    REQUIRE(two.size() == 4);
    CHECK(to_string(two[0]) == "(0,0)");
    CHECK(to_string(two[1]) == "(1,0)");
    CHECK(to_string(two[2]) == "(0,1)");
    CHECK(to_string(two[3]) == "(1,1)");

    CHECK(enumerate_group(3).size() == 8);
    CHECK_THROWS_AS(enumerate_group(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_group(21), std::invalid_argument);
}

TEST_CASE("enumerate_even lists the even subgroup") {
    auto evens = enumerate_even(3);
    REQUIRE(evens.size() == 4);
    // exactly the quaternion degrees
    CHECK(evens[0] == g(0b000, 3));
    CHECK(evens[1] == g(0b011, 3));
    CHECK(evens[2] == g(0b101, 3));
    CHECK(evens[3] == g(0b110, 3));

    auto two = enumerate_even(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == g(0b00, 2));
    CHECK(two[1] == g(0b11, 2));

    CHECK_THROWS_AS(enumerate_even(1), std::invalid_argument);

    for (unsigned n : {2u, 4u, 6u}) {
        auto e = enumerate_even(n);
        CHECK(e.size() == (std::size_t{1} << (n - 1)));
        for (auto a : e) {
            CHECK(parity(a) == 0);
            for (auto b : e) {
                bool found = false;
                for (auto c : e)
                    if (c == gp_add(a, b)) found = true;
                CHECK(found); // closed under addition
            }
        }
    }
}

TEST_CASE("text form round-trips and the parser is strict") {
    for (auto a : enumerate_group(4)) CHECK(parse_group_element(to_string(a)) == a);
    GroupElement big((std::uint64_t{1} << 61) | 1, 62);
    CHECK(parse_group_element(to_string(big)) == big);

    CHECK(to_string(g(0b110, 3)) == "(0,1,1)");
    CHECK(parse_group_element("(0,1,1)") == g(0b110, 3));

    for (const char* bad : {"", "()", "(2)", "(0,1", "0,1)", "(0,1,)", "(0, 1)", "(,1)", "(01)"})
        CHECK_THROWS_AS(parse_group_element(bad), std::invalid_argument);
}
