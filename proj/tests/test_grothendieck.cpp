#include "doctest.h"
#include "hk/generators.hpp"
#include "hk/grothendieck.hpp"

using namespace hk;

namespace {

BetaPolynomial poly(int vars, std::initializer_list<std::tuple<int, Exponent, std::int64_t>> terms) {
    BetaPolynomial p(vars);
    for (const auto& [b, x, c] : terms) p.add(b, x, c);
    return p;
}

// Sum of beta^ex x^wt over every tuple of m decreasing factors whose product is w.
BetaPolynomial brute_grothendieck(const HeckeElement& w, int m, int max_beta) {
    const int n = w.n();
    std::vector<Factor> subsets;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Factor f;
        for (int a = n - 1; a >= 1; --a)
            if (mask >> (a - 1) & 1) f.push_back(a);
        subsets.push_back(f);
    }
    BetaPolynomial out(m);
    std::vector<std::size_t> idx(m, 0);
    while (true) {
        std::vector<Factor> written;
        for (int k = 0; k < m; ++k) written.push_back(subsets[idx[k]]);
        const DecreasingFactorization f(written, n);
        if (eval(f.flatten()) == w && excess(f) <= max_beta) out.add(excess(f), weight(f), 1);
        int k = 0;
        while (k < m && ++idx[k] == subsets.size()) idx[k++] = 0;
        if (k == m) break;
    }
    return out;
}

}  // namespace

TEST_CASE("Schur polynomials") {
    CHECK(schur_poly({1}, 2) == poly(2, {{0, {1, 0}, 1}, {0, {0, 1}, 1}}));
    CHECK(schur_poly({2, 1}, 2) == poly(2, {{0, {2, 1}, 1}, {0, {1, 2}, 1}}));
    CHECK(schur_poly({1, 1, 1}, 2).empty());
    CHECK(schur_poly({}, 3) == poly(3, {{0, {0, 0, 0}, 1}}));
    CHECK_FALSE(symmetry_defect(schur_poly({3, 1}, 3)));
}

TEST_CASE("Grothendieck polynomial of the identity") {
    CHECK(grothendieck_poly(HeckeElement::identity(4), 3, 2) == poly(3, {{0, {0, 0, 0}, 1}}));
}

TEST_CASE("Grothendieck polynomials match a brute-force sum") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_permutations(n))
            for (int m = 1; m <= 3; ++m) CHECK(grothendieck_poly(w, m, 2) == brute_grothendieck(w, m, 2));
}

TEST_CASE("Schur expansion") {
    const auto s = schur_expand(schur_poly({2, 1}, 3), 0);
    CHECK(s.coeffs.size() == 1);
    CHECK(s.at(0, {2, 1}) == 1);

    BetaPolynomial lopsided(2);
    lopsided.add(0, {1, 0}, 1);
    CHECK(symmetry_defect(lopsided));
    CHECK_THROWS_AS(schur_expand(lopsided, 0), ValidationError);

    // a combination of Schur polynomials is peeled back into its coefficients
    auto mix = schur_poly({2, 1}, 3).scaled(3);
    mix += schur_poly({3}, 3).scaled(-2, 1);
    mix += schur_poly({1, 1, 1}, 3).scaled(5, 2);
    const auto back = schur_expand(mix, 2);
    CHECK(back.at(0, {2, 1}) == 3);
    CHECK(back.at(1, {3}) == -2);
    CHECK(back.at(2, {1, 1, 1}) == 5);
    CHECK(back.coeffs.size() == 3);
}

TEST_CASE("12132 in four variables") {
    const auto w = eval(parse_word("12132", 4));
    const auto s = schur_expand(grothendieck_poly(w, 4, 2), 2);
    CHECK(s.at(0, {2, 2, 1}) == 1);
    CHECK(s.at(1, {2, 2, 2}) == 2);
    CHECK(s.at(1, {2, 2, 1, 1}) == 3);
    CHECK(s.at(2, {2, 2, 2, 1}) == 6);
    CHECK(s.coeffs.size() == 4);
    CHECK_THROWS_AS(schur_coeffs_via_crystal(w, 4, 2), DomainError);
}

TEST_CASE("crystal counts agree with the expansion") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : fully_commutative_elements(n))
            for (int m = 1; m <= 3; ++m) {
                const auto a = schur_expand(grothendieck_poly(w, m, 2), 2);
                const auto b = schur_coeffs_via_crystal(w, m, 2);
                CHECK(a == b);
            }
    const auto s1 = eval(HeckeWord({1}, 2));
    const auto c = schur_coeffs_via_crystal(s1, 2, 1);
    CHECK(c.at(0, {1}) == 1);
    CHECK(c.at(1, {1, 1}) == 1);
    CHECK(c == schur_expand(grothendieck_poly(s1, 2, 1), 1));
}

TEST_CASE("set-valued tableaux of straight shape") {
    for (int k = 1; k <= 4; ++k)
        for (const auto& lambda : partitions_of(k))
            for (int m = 1; m <= 3; ++m) {
                const int top = (m - 1) * k;
                const auto svt = svt_generating_function(SkewShape(lambda), m, top);
                const auto groth = grothendieck_poly(grassmannian_element(lambda), m, top);
                CHECK(svt == groth);
            }
    // a single descent, at position rows(lambda), and length |lambda|
    for (const auto& lambda : partitions_of(4)) {
        const auto w = grassmannian_element(lambda);
        CHECK(w.length() == 4);
        for (int k = 1; k < w.n(); ++k)
            CHECK((w.perm[k - 1] > w.perm[k]) == (k == static_cast<int>(lambda.size())));
    }
}

TEST_CASE("highest weight set-valued tableaux") {
    const auto h = svt_highest_weight_counts(SkewShape({2, 1}), 3, 2);
    CHECK(h.at(0, {2, 1}) == 1);
    CHECK(h == schur_expand(svt_generating_function(SkewShape({2, 1}), 3, 2), 2));
}

TEST_CASE("series text") {
    BetaSchurSeries s;
    s.vars = 4;
    s.max_beta = 1;
    s.coeffs[{0, {2, 1}}] = 1;
    s.coeffs[{1, {2, 2}}] = 2;
    CHECK(format_series(s) == "beta  partition  coefficient\n0  (2,1)  1\n1  (2,2)  2\n");
    CHECK(format_series_csv(s) == "beta,partition,coefficient\n0,2 1,1\n1,2 2,2\n");
}
