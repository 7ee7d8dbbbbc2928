#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "hk/hecke.hpp"

using namespace hk;

namespace {

// Demazure product computed on positions: w * s_i swaps the values at i, i+1 when they ascend.
std::vector<int> demazure_oracle(const std::vector<int>& word, int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    for (int i : word)
        if (w[i - 1] < w[i]) std::swap(w[i - 1], w[i]);
    return w;
}

bool has_321(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (p[a] > p[b] && p[b] > p[c]) return true;
    return false;
}

std::vector<std::vector<int>> words_upto(int n, int len) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t k = 0; k < out.size(); ++k) {
        if (static_cast<int>(out[k].size()) == len) continue;
        for (int a = 1; a < n; ++a) {
            auto w = out[k];
            w.push_back(a);
            out.push_back(w);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("demazure_apply") {
    const auto id = HeckeElement::identity(3);
    CHECK(demazure_apply(id, 1).perm == std::vector<int>{2, 1, 3});
    const auto s1 = demazure_apply(id, 1);
    CHECK(demazure_apply(s1, 1) == s1);

    // 1*2 then 1 reaches the element of largest length in S3
    const auto e = demazure_apply(eval(HeckeWord({1, 2}, 3)), 1);
    const auto all = all_permutations(3);
    const auto longest = *std::max_element(all.begin(), all.end(),
                                           [](const auto& a, const auto& b) { return a.length() < b.length(); });
    CHECK(e == longest);
    CHECK(e.perm == std::vector<int>{3, 2, 1});

    CHECK_THROWS_AS(demazure_apply(id, 3), std::invalid_argument);
    CHECK_THROWS_AS(demazure_apply(id, 0), std::invalid_argument);
}

TEST_CASE("eval relations") {
    CHECK(eval(HeckeWord({1, 2, 1}, 3)) == eval(HeckeWord({2, 1, 2}, 3)));
    CHECK(eval(HeckeWord({}, 3)) == HeckeElement::identity(3));
    CHECK(eval(HeckeWord({1, 1}, 3)) == eval(HeckeWord({1}, 3)));
    CHECK(eval(HeckeWord({1, 3}, 4)) == eval(HeckeWord({3, 1}, 4)));
}

TEST_CASE("eval agrees with a position-swapping oracle") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : words_upto(n, 6)) {
            const auto e = eval(HeckeWord(w, n));
            CHECK(e.perm == demazure_oracle(w, n));
            CHECK(e.length() <= static_cast<int>(w.size()));
        }
}

TEST_CASE("full commutativity") {
    CHECK_FALSE(is_fully_commutative(eval(parse_word("12132", 4))));
    CHECK(is_fully_commutative(HeckeElement::identity(5)));
    CHECK(is_fully_commutative(eval(parse_word("2132", 4))));

    const int catalan[] = {1, 1, 2, 5, 14, 42};
    for (int n = 1; n <= 5; ++n) {
        int count = 0;
        for (const auto& e : all_permutations(n)) {
            CHECK(is_fully_commutative(e) == !has_321(e.perm));
            count += is_fully_commutative(e);
        }
        CHECK(count == catalan[n]);
    }
}

TEST_CASE("equivalence") {
    CHECK(equivalent(parse_word("13242"), parse_word("31242")));
    CHECK_FALSE(equivalent(HeckeWord({1}, 3), HeckeWord({2}, 3)));
    CHECK(equivalent(parse_word("2132", 4), parse_word("2312", 4)));
    CHECK(demazure_oracle({2, 1, 3, 2}, 4) == demazure_oracle({2, 3, 1, 2}, 4));
    CHECK_THROWS_AS(equivalent(HeckeWord({1}, 3), HeckeWord({1}, 4)), std::invalid_argument);
}

TEST_CASE("reduced words and Bruhat order") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = all_permutations(n);
        const auto id = HeckeElement::identity(n);
        HeckeElement w0 = id;
        for (const auto& e : all)
            if (e.length() > w0.length()) w0 = e;
        for (const auto& e : all) {
            const HeckeWord r = reduced_word(e);
            CHECK(static_cast<int>(r.size()) == e.length());
            CHECK(eval(r) == e);
            CHECK(bruhat_leq(id, e));
            CHECK(bruhat_leq(e, w0));
            CHECK(bruhat_leq(e, e));
        }
    }
    const auto s1 = eval(HeckeWord({1}, 3)), s2 = eval(HeckeWord({2}, 3));
    CHECK_FALSE(bruhat_leq(s1, s2));
    CHECK_FALSE(bruhat_leq(s2, s1));
}

TEST_CASE("Bruhat order agrees with subwords of a reduced word") {
    // u <= v iff u is the Demazure product of some subword of a reduced word of v
    const int n = 4;
    for (const auto& v : all_permutations(n)) {
        const auto r = reduced_word(v).letters;
        std::set<std::vector<int>> below;
        for (unsigned mask = 0; mask < (1u << r.size()); ++mask) {
            std::vector<int> sub;
            for (std::size_t k = 0; k < r.size(); ++k)
                if (mask >> k & 1) sub.push_back(r[k]);
            below.insert(demazure_oracle(sub, n));
        }
        for (const auto& u : all_permutations(n)) CHECK(bruhat_leq(u, v) == (below.count(u.perm) > 0));
    }
}

TEST_CASE("word text") {
    CHECK(parse_word("13242").letters == std::vector<int>{1, 3, 2, 4, 2});
    CHECK(parse_word("13242").n == 5);
    CHECK(parse_word("1 3 2").letters == std::vector<int>{1, 3, 2});
    CHECK(parse_word("1,3,2", 6).n == 6);
    CHECK(parse_word(format_word(parse_word("12132"))) == parse_word("12132"));
    CHECK_THROWS_AS(parse_word("1x2"), ValidationError);
    CHECK_THROWS_AS(parse_word("14", 3), ValidationError);
    CHECK_THROWS_AS(HeckeWord({0}, 3), ValidationError);
}
