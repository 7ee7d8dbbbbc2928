#include <algorithm>
#include <set>

#include "doctest.h"
#include "hk/factorization.hpp"

using namespace hk;

namespace {

DecreasingFactorization F(const char* text, int n = 0) { return parse_factorization(text, n); }

// Every decreasing factorization with m factors over [n-1], built letter subset by letter subset.
std::vector<std::vector<Factor>> brute_factorizations(int n, int m) {
    std::vector<Factor> subsets;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Factor f;
        for (int a = n - 1; a >= 1; --a)
            if (mask >> (a - 1) & 1) f.push_back(a);
        subsets.push_back(f);
    }
    std::vector<std::vector<Factor>> out{{}};
    for (int k = 0; k < m; ++k) {
        std::vector<std::vector<Factor>> next;
        for (const auto& partial : out)
            for (const auto& s : subsets) {
                auto v = partial;
                v.push_back(s);
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("weight and excess") {
    CHECK(weight(F("(7532)(621)(6)")) == std::vector<int>{1, 3, 4});
    CHECK(weight(DecreasingFactorization::empty(3, 4)) == std::vector<int>{0, 0, 0});
    CHECK(weight(F("(21)(41)")) == std::vector<int>{2, 2});
    CHECK(excess(F("(21)(41)")) == 1);
    CHECK(eval(HeckeWord({2, 1, 4, 1}, 5)).length() == 3);
    CHECK(excess(F("(2)(21)(2)", 3)) == 1);
    CHECK(excess(F("(7532)(621)(6)")) == 2);  // 6 and 2 each repeat across commuting letters
    CHECK(excess(F("(21)(3)")) == 0);
}

TEST_CASE("factor accessors follow h^m ... h^1") {
    const auto f = F("(7532)(621)(6)");
    CHECK(f.m() == 3);
    CHECK(f.n() == 8);
    CHECK(f.h(3) == Factor{7, 5, 3, 2});
    CHECK(f.h(1) == Factor{6});
    CHECK(f.flatten().letters == std::vector<int>{7, 5, 3, 2, 6, 2, 1, 6});
    CHECK(insertion_word(f).letters == std::vector<int>{6, 1, 2, 6, 2, 3, 5, 7});
    CHECK_THROWS_AS(f.h(4), std::out_of_range);
}

TEST_CASE("biwords") {
    const auto b = to_biword(F("(1)(2)(31)()(32)"));
    CHECK(b.top == std::vector<int>{5, 4, 3, 3, 1, 1});
    CHECK(b.bottom == std::vector<int>{1, 2, 3, 1, 3, 2});
    CHECK(from_biword(b, 5, 4) == F("(1)(2)(31)()(32)", 4));

    CHECK(to_biword(DecreasingFactorization::empty(2, 3)) == HeckeBiword{});
    const auto d = to_biword(F("(21)(41)"));
    CHECK(d.top == std::vector<int>{2, 2, 1, 1});
    CHECK(d.bottom == std::vector<int>{2, 1, 4, 1});

    CHECK_THROWS_AS(validate_biword({{1, 2}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(validate_biword({{2, 2}, {1, 2}}), ValidationError);
    CHECK_THROWS_AS(validate_biword({{2, 2}, {1}}), ValidationError);
    CHECK_THROWS_AS(from_biword({{3}, {1}}, 2), ValidationError);
}

TEST_CASE("biword round trip") {
    for (int m = 1; m <= 3; ++m)
        for (const auto& f : all_factorizations(4, m, 5)) {
            CHECK(from_biword(to_biword(f), f.m(), f.n()) == f);
            CHECK(parse_factorization(format_factorization(f), f.n()) == f);
        }
}

TEST_CASE("enumerate") {
    const auto w = eval(parse_word("12132", 4));
    std::set<std::string> at_2220;
    for (const auto& f : enumerate(w, 4, 1))
        if (weight(f) == std::vector<int>{2, 2, 2, 0}) at_2220.insert(format_factorization(f));
    CHECK(at_2220 == std::set<std::string>{"()(21)(21)(32)", "()(21)(32)(32)"});

    const auto id = enumerate(HeckeElement::identity(3), 4, 0);
    REQUIRE(id.size() == 1);
    CHECK(id[0] == DecreasingFactorization::empty(4, 3));

    std::set<std::string> s1;
    for (const auto& f : enumerate(eval(HeckeWord({1}, 2)), 2, 1)) s1.insert(format_factorization(f));
    CHECK(s1 == std::set<std::string>{"(1)()", "()(1)", "(1)(1)"});

    CHECK_THROWS_AS(enumerate(HeckeElement::identity(3), 0, 0), std::invalid_argument);
}

TEST_CASE("enumerate agrees with brute force over all factor tuples") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) {
            const auto tuples = brute_factorizations(n, m);
            for (const auto& w : all_permutations(n))
                for (int ex = 0; ex <= 2; ++ex) {
                    std::set<DecreasingFactorization> expect;
                    for (const auto& t : tuples) {
                        DecreasingFactorization f(t, n);
                        if (eval(f.flatten()) == w && excess(f) <= ex) expect.insert(f);
                    }
                    const auto got = enumerate(w, m, ex);
                    CHECK(std::set<DecreasingFactorization>(got.begin(), got.end()) == expect);
                    CHECK(got.size() == expect.size());
                }
        }
}

TEST_CASE("factorization text") {
    CHECK(F("(7532)(621)(6)").written() == std::vector<Factor>{{7, 5, 3, 2}, {6, 2, 1}, {6}});
    CHECK(F("()(21)").written() == std::vector<Factor>{{}, {2, 1}});
    CHECK(F("(\\;)(21)") == F("()(21)"));
    CHECK(format_factorization(F("()(21)(32)")) == "()(21)(32)");
    CHECK(F("(10 3)(2)", 12).h(2) == Factor{10, 3});
    CHECK_THROWS_AS(F("(12)"), ValidationError);
    CHECK_THROWS_AS(F("(21"), ValidationError);
    CHECK_THROWS_AS(F(""), ValidationError);
    CHECK_THROWS_AS(F("(5)", 4), ValidationError);
}
