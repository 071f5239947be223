#include "doctest.h"

#include <string>

#include "hilbert10/parse.hpp"
#include "support.hpp"

using namespace h10;
namespace ht = h10::testing;

namespace {

SparsePoly expand_source(const std::string& src) {
    const auto p = parse_poly(src).expand(1 << 16);
    REQUIRE(p.has_value());
    return *p;
}

}  // namespace

TEST_SUITE("parse") {

TEST_CASE("grammar walk of a representative source") {
    // oracle built by hand before parsing anything
    const SparsePoly x0 = SparsePoly::variable(0);
    const SparsePoly x1 = SparsePoly::variable(1);
    const SparsePoly x2 = SparsePoly::variable(2);
    const SparsePoly expected =
        SparsePoly::constant(3) * x1 * x1 * x2 - x0 + SparsePoly::constant(7);

    CHECK(expand_source("3*z1^2*z2 - a + 7") == expected);
    CHECK(expand_source(" 3 * z1 ^ 2 * z2-a+7 ") == expected);
    CHECK(expand_source("3*x1^2*x2 - a + 7") == expected);  // x<k> aliases z<k>
}

TEST_CASE("structure is preserved, not expanded") {
    const Expr e = parse_poly("(a+1)^2");
    REQUIRE(e.kind() == Expr::Kind::Pow);
    CHECK(e.exponent() == 2);
    CHECK(e.base().kind() == Expr::Kind::Add);

    // a degree this size must survive parsing without expansion
    const Expr big = parse_poly("(a+z1)^340282366920938463463374607431768211456");
    CHECK(big.degree_bound() == BigInt(1) << 128);
}

TEST_CASE("zero and signs") {
    CHECK(expand_source("0").is_zero());
    CHECK(expand_source("-0").is_zero());
    CHECK(expand_source("-2^2") == SparsePoly::constant(-4));   // minus binds the factor
    CHECK(expand_source("3--2") == SparsePoly::constant(5));    // term minus negated factor
    CHECK(expand_source("-a^2").insertion(std::vector<BigInt>{3}) == -9);
}

TEST_CASE("printer canonical forms") {
    const SparsePoly x0 = SparsePoly::variable(0);
    const SparsePoly x1 = SparsePoly::variable(1);
    CHECK(print_poly(x1 * x1 + SparsePoly::constant(2) * x1 + SparsePoly::constant(1)) ==
          "z1^2 + 2*z1 + 1");
    CHECK(print_poly(SparsePoly{}) == "0");
    CHECK(print_poly(-x0 + SparsePoly::constant(7)) == "-a + 7");
    CHECK(print_poly(SparsePoly::constant(3) * x1 * x1 * SparsePoly::variable(2) - x0 +
                     SparsePoly::constant(7)) == "3*z1^2*z2 - a + 7");
}

TEST_CASE("round-trip on random polynomials") {
    auto g = ht::make_rng(0xd1);
    for (int i = 0; i < 500; ++i) {
        const SparsePoly p = ht::random_poly(g, 4, 18, 7, 99);
        CHECK(expand_source(print_poly(p)) == p);
    }
}

TEST_CASE("rejected inputs carry positions") {
    auto pos = [](const std::string& src) {
        try {
            parse_poly(src);
        } catch (const ParseError& e) {
            return std::pair<unsigned, unsigned>{e.line(), e.column()};
        }
        FAIL("no parse error for \"" << src << "\"");
        return std::pair<unsigned, unsigned>{0, 0};
    };

    CHECK(pos("2^3^2") == std::pair<unsigned, unsigned>{1, 4});  // chained exponent
    CHECK(pos("z") == std::pair<unsigned, unsigned>{1, 1});      // bare z needs an index
    CHECK(pos("(a") == std::pair<unsigned, unsigned>{1, 3});
    CHECK(pos("a 1") == std::pair<unsigned, unsigned>{1, 3});
    CHECK(pos("3**4") == std::pair<unsigned, unsigned>{1, 3});
    CHECK(pos("") == std::pair<unsigned, unsigned>{1, 1});
    CHECK(pos("a^-2") == std::pair<unsigned, unsigned>{1, 3});   // exponent must be a nat
    CHECK(pos("a +\n z") == std::pair<unsigned, unsigned>{2, 2});
    CHECK(pos("a + b") == std::pair<unsigned, unsigned>{1, 5});

    const std::string msg = [] {
        try {
            parse_poly("(a");
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string{};
    }();
    CHECK(msg.starts_with("1:3:"));
}

TEST_CASE("parse is total on printer output") {
    auto g = ht::make_rng(0xd2);
    for (int i = 0; i < 300; ++i) {
        const SparsePoly p = ht::random_poly(g, 5, 25, 9, 1000000);
        CHECK_NOTHROW(parse_poly(print_poly(p)));
    }
}

}  // TEST_SUITE
