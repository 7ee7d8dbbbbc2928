#include "doctest.h"
#include "hk/crystal_graph.hpp"
#include "hk/mutation.hpp"
#include "hk/star_crystal.hpp"
#include "hk/verification.hpp"

using namespace hk;

namespace {

CrystalGraph star_component(const char* seed) {
    const auto f = parse_factorization(seed);
    return build_crystal(std::vector{f}, f.m() - 1, f_star, e_star,
                         [](const DecreasingFactorization& x) { return weight(x); },
                         [](const DecreasingFactorization& x) { return format_factorization(x); });
}

// Shrinks the default bounds so the whole file runs in a second or two.
Bounds small(const std::string& tag) {
    Bounds b = default_bounds(tag);
    if (b.cells) b.cells = std::min(b.cells, 3);
    if (b.letters) b.letters = std::min(b.letters, 4);
    b.m = std::min(b.m, 3);
    return b;
}

}  // namespace

TEST_CASE("tags") {
    CHECK(theorem_tags().size() == 13);
    for (const auto& t : theorem_tags()) {
        CHECK_FALSE(theorem_summary(t).empty());
        const Bounds d = default_bounds(t), deep = deep_bounds(t);
        CHECK(deep.m >= d.m);
        CHECK(deep.cells + deep.letters >= d.cells + d.letters);
    }
    CHECK_THROWS_AS(check_theorem("no-such-tag", {}), std::invalid_argument);
    CHECK_THROWS_AS(default_bounds("no-such-tag"), std::invalid_argument);
}

TEST_CASE("empty bounds") {
    for (const auto& t : theorem_tags()) {
        const Report r = check_theorem(t, Bounds{});
        CHECK(r.instances == 0);
        CHECK(r.failures == 0);
        CHECK(r.ok());
    }
}

TEST_CASE("small bounds pass and serial equals parallel") {
    for (const auto& t : theorem_tags()) {
        CAPTURE(t);
        const Report a = check_theorem(t, small(t), Exec::serial);
        const Report b = check_theorem(t, small(t), Exec::parallel);
        CHECK(a.ok());
        CHECK(a.instances > 0);
        CHECK(a.instances == b.instances);
        CHECK(a.failures == b.failures);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("a broken operator is caught") {
    ScopedMutation broken(Mutation::star_f_case1);
    const Report r = check_theorem("star-residue", small("star-residue"));
    CHECK(r.failures > 0);
    CHECK_FALSE(r.witness.empty());
    // the same witness comes first in either execution mode
    CHECK(check_theorem("star-residue", small("star-residue"), Exec::serial).witness == r.witness);
}

TEST_CASE("mutations are restored on scope exit") {
    {
        ScopedMutation broken(Mutation::svt_f_plain);
        CHECK(active_mutation() == Mutation::svt_f_plain);
    }
    CHECK(active_mutation() == Mutation::none);
}

TEST_CASE("Stembridge audit") {
    CrystalGraph single;
    single.colors = 2;
    single.labels = {"x"};
    single.weights = {{0, 0, 0}};
    single.f = {{-1}, {-1}};
    single.e = {{-1}, {-1}};
    CHECK(stembridge_audit(single).ok);

    auto g = star_component("(21)(31)(3)");
    CHECK(g.size() > 1);
    CHECK(stembridge_audit(g).ok);
    for (const auto& c : components(g)) CHECK_FALSE(character_defect(g, c));

    const auto big = star_component("(7532)(621)(6)");
    CHECK(stembridge_audit(big).ok);

    // drop one arrow in both directions
    for (int v = 0; v < g.size(); ++v)
        if (int t = g.f_at(1, v); t >= 0) {
            g.f[0][v] = -1;
            g.e[0][t] = -1;
            break;
        }
    const auto report = stembridge_audit(g);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.axiom.empty());
}

TEST_CASE("DOT output") {
    const auto g = star_component("(21)(31)(3)");
    const std::string dot = to_dot(g, "c");
    CHECK(dot.rfind("digraph \"c\" {", 0) == 0);
    CHECK(dot.find("\"(21)(31)(3)\"") != std::string::npos);
    CHECK(dot.find("blue") != std::string::npos);
    CHECK(dot.back() == '\n');
}
