#include "hk/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "hk/crystal_graph.hpp"
#include "hk/generators.hpp"
#include "hk/insertion.hpp"
#include "hk/io.hpp"
#include "hk/local_crystal_n3.hpp"
#include "hk/residue.hpp"
#include "hk/star_crystal.hpp"
#include "hk/svt_crystal.hpp"
#include "hk/uncrowding.hpp"

namespace hk {

namespace {

using Failure = std::optional<std::string>;

struct Tally {
    long long instances = 0;
    long long failures = 0;
    std::string witness;

    void fail(const std::string& what) {
        if (failures++ == 0) witness = what;
    }
};

// One instance: counts it, and records a failure or escaped exception against `name`.
template <class Name, class Fn>
void guard(Tally& t, Name name, Fn check) {
    ++t.instances;
    try {
        if (Failure f = check()) t.fail(name() + ": " + *f);
    } catch (const std::exception& e) {
        t.fail(name() + ": exception: " + e.what());
    }
}

// Units are checked independently; merging in unit order keeps the witness deterministic.
template <class Unit, class Fn>
Report run(const std::string& tag, const std::vector<Unit>& units, Fn check, Exec exec) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Tally> tallies(units.size());
    const long long count = static_cast<long long>(units.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (long long k = 0; k < count; ++k) {
        try {
            check(units[k], tallies[k]);
        } catch (const std::exception& e) {
            tallies[k].fail(std::string("exception: ") + e.what());
        }
    }
    Report r;
    r.tag = tag;
    for (const Tally& t : tallies) {
        r.instances += t.instances;
        if (t.failures && r.failures == 0) r.witness = t.witness;
        r.failures += t.failures;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

struct ShapeUnit {
    SkewShape shape;
    int m;
};

struct AlphabetUnit {
    int n;
    int m;
};

std::vector<ShapeUnit> skew_units(const Bounds& b) {
    std::vector<ShapeUnit> out;
    for (const SkewShape& s : skew_shapes(b.cells))
        for (int m = 1; m <= b.m; ++m) out.push_back({s, m});
    return out;
}

std::vector<ShapeUnit> straight_units(const Bounds& b) {
    std::vector<ShapeUnit> out;
    for (int k = 1; k <= b.cells; ++k)
        for (const Partition& p : partitions_of(k))
            for (int m = 1; m <= b.m; ++m) out.push_back({SkewShape(p), m});
    return out;
}

std::vector<AlphabetUnit> alphabet_units(const Bounds& b) {
    std::vector<AlphabetUnit> out;
    for (int n = 2; n <= b.n; ++n)
        for (int m = 1; m <= b.m; ++m) out.push_back({n, m});
    return out;
}

int frame_n(const SetValuedTableau& t) { return t.num_rows() + (t.num_rows() ? t.row_end(1) : 0); }

template <class A, class B>
bool same_defined(const std::optional<A>& a, const std::optional<B>& b) {
    return a.has_value() == b.has_value();
}

// --- residue and Hecke insertion -------------------------------------------------------

void star_residue(const ShapeUnit& u, Tally& t, const Bounds& b) {
    for_each_svt(u.shape, u.m, b.excess, [&](const SetValuedTableau& T) {
        guard(t, [&] { return to_text(T); }, [&]() -> Failure {
            const int n = frame_n(T);
            const DecreasingFactorization h = res(T, u.m, n);
            if (!is_fully_commutative(h)) return "residue is not fully commutative";
            if (res_inv_shaped(h, T.shape()) != T) return "inverse on the same shape does not recover T";
            res_inv(h);  // validates its own round trip
            for (int i = 1; i < u.m; ++i) {
                const auto ft = f_svt(T, i);
                const auto fh = f_star(h, i);
                if (!same_defined(ft, fh)) return "f_" + std::to_string(i) + " defined on only one side";
                if (ft && res(*ft, u.m, n) != *fh) return "res(f_" + std::to_string(i) + " T) != f*_" + std::to_string(i) + " res(T)";
                const auto et = e_svt(T, i);
                const auto eh = e_star(h, i);
                if (!same_defined(et, eh)) return "e_" + std::to_string(i) + " defined on only one side";
                if (et && res(*et, u.m, n) != *eh) return "res(e_" + std::to_string(i) + " T) != e*_" + std::to_string(i) + " res(T)";
            }
            return std::nullopt;
        });
    });
}

void hecke_residue(const ShapeUnit& u, Tally& t, const Bounds& b) {
    for_each_svt(u.shape, u.m, b.excess, [&](const SetValuedTableau& T) {
        guard(t, [&] { return to_text(T); }, [&]() -> Failure {
            const DecreasingFactorization h = res(T, u.m);
            if (hecke_insert(to_biword(h)).q != T) return "Hecke recording tableau differs from T";
            if (excess(T) == 0 && star_insert(h).q != to_single_valued(T))
                return "star recording tableau differs from T";
            return std::nullopt;
        });
    });
}

// --- star insertion --------------------------------------------------------------------

long long image_size(int n, int m, int letters) {
    long long total = 0;
    for (int k = 0; k <= letters; ++k)
        for (const Partition& lambda : partitions_of(k)) {
            if (lambda.empty()) {
                ++total;
                continue;
            }
            const SkewShape shape(lambda);
            long long ps = 0, qs = 0;
            for_each_row_strict(shape, n - 1, [&](const Tableau& p) { ps += is_fully_commutative(row_word(p, n)); });
            if (ps == 0) continue;
            for_each_ssyt(shape, m, [&](const Tableau&) { ++qs; });
            total += ps * qs;
        }
    return total;
}

void bijection(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    const auto facts = fc_factorizations(u.n, u.m, b.letters);
    for (const auto& f : facts)
        guard(t, [&] { return format_factorization(f); }, [&]() -> Failure {
            const StarInsertion s = star_insert(f);
            if (auto e = validate_row_increasing(s.p)) return "P: " + *e;
            if (auto e = validate_semistandard(s.q)) return "Q: " + *e;
            if (s.p.shape() != s.q.shape()) return "P and Q differ in shape";
            if (!is_fully_commutative(row_word(s.p, u.n))) return "row word of P is not fully commutative";
            const HeckeBiword back = star_inverse(s.p, s.q, u.n);
            if (back != to_biword(f)) return "inverse returns a different biword";
            return std::nullopt;
        });
    // Injectivity follows from the round trip; equal counts give surjectivity.
    guard(t, [&] { return "image of n=" + std::to_string(u.n) + " m=" + std::to_string(u.m); }, [&]() -> Failure {
        const long long want = image_size(u.n, u.m, b.letters);
        if (want != static_cast<long long>(facts.size()))
            return std::to_string(facts.size()) + " factorizations but " + std::to_string(want) + " admissible pairs";
        return std::nullopt;
    });
}

void micro_insertion(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    if (u.m != 1) return;  // words do not depend on m
    std::set<std::vector<int>> seen;
    for (const HeckeWord& w : fc_words(u.n, b.letters)) {
        if (seen.count(w.letters)) continue;
        const auto cls = micro_class(w);
        const Tableau p = star_insertion_tableau(w);
        for (const auto& v : cls) {
            seen.insert(v);
            guard(t, [&] { return format_word(HeckeWord(v, u.n)); }, [&]() -> Failure {
                if (star_insertion_tableau(HeckeWord(v, u.n)) != p)
                    return "insertion tableau differs from that of " + format_word(w);
                return std::nullopt;
            });
        }
    }
}

void micro_crystal(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    for (const auto& f : fc_factorizations(u.n, u.m, b.letters))
        guard(t, [&] { return format_factorization(f); }, [&]() -> Failure {
            std::optional<std::set<std::vector<int>>> cls;
            const Tableau p = star_insert(f).p;
            for (int i = 1; i < u.m; ++i)
                for (const auto& g : {f_star(f, i), e_star(f, i)}) {
                    if (!g) continue;
                    if (!cls) cls = micro_class(insertion_word(f));
                    if (!cls->count(insertion_word(*g).letters))
                        return "operator " + std::to_string(i) + " leaves the class: " + format_factorization(*g);
                    if (star_insert(*g).p != p) return "insertion tableau changes under " + std::to_string(i);
                }
            return std::nullopt;
        });
}

void lowest_weight(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    for (const auto& f : fc_factorizations(u.n, u.m, b.letters)) {
        bool lowest = true;
        for (int i = 1; i < u.m && lowest; ++i) lowest = !f_star(f, i);
        if (!lowest) continue;
        guard(t, [&] { return format_factorization(f); }, [&]() -> Failure {
            const auto a = weight(f);
            int r = 1;
            while (r <= u.m && a[r - 1] == 0) ++r;
            for (int i = r; i < u.m; ++i)
                if (a[i] < a[i - 1]) return "weight is not zeros followed by a weakly increasing run";
            std::vector<std::vector<int>> rows;
            for (int k = u.m; k >= r; --k) rows.emplace_back(f.h(k).rbegin(), f.h(k).rend());
            const StarInsertion s = star_insert(f);
            if (s.p != tableau_from_rows(rows)) return "insertion tableau is not the stacked factors";
            Partition sorted = a;
            std::sort(sorted.begin(), sorted.end(), std::greater<int>());
            if (s.p.shape() != SkewShape(sorted)) return "shape is not the sorted weight";
            for (int i = 1; i < u.m; ++i)
                if (f_ssyt(s.q, i)) return "recording tableau is not of lowest weight";
            return std::nullopt;
        });
    }
}

void recording_crystal(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    for (const auto& f : fc_factorizations(u.n, u.m, b.letters))
        guard(t, [&] { return format_factorization(f); }, [&]() -> Failure {
            const StarInsertion s = star_insert(f);
            for (int i = 1; i < u.m; ++i) {
                const auto fh = f_star(f, i);
                const auto fq = f_ssyt(s.q, i);
                if (!same_defined(fh, fq)) return "f_" + std::to_string(i) + " defined on only one side";
                if (fh) {
                    const StarInsertion g = star_insert(*fh);
                    if (g.q != *fq) return "Q(f*_" + std::to_string(i) + " h) != f_" + std::to_string(i) + " Q(h)";
                    if (g.p != s.p) return "P changes under f*_" + std::to_string(i);
                }
                const auto eh = e_star(f, i);
                const auto eq = e_ssyt(s.q, i);
                if (!same_defined(eh, eq)) return "e_" + std::to_string(i) + " defined on only one side";
                if (eh && star_insert(*eh).q != *eq) return "Q(e*_" + std::to_string(i) + " h) != e_" + std::to_string(i) + " Q(h)";
            }
            return std::nullopt;
        });
}

void side_conditions(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    for (const auto& f : fc_factorizations(u.n, u.m, b.letters))
        guard(t, [&] { return format_factorization(f); }, [&]() -> Failure {
            for (int i = 1; i < u.m; ++i)
                if (!star_side_conditions_hold(f, i)) return "fails for i=" + std::to_string(i);
            return std::nullopt;
        });
}

// --- uncrowding ------------------------------------------------------------------------

Failure uncrowd_shape_defect(const SetValuedTableau& T, const Uncrowding& u, int m) {
    if (auto e = validate_semistandard(u.p)) return "P~: " + *e;
    if (auto e = validate_flagged_increasing(u.q)) return "Q~: " + *e;
    const SkewShape ps = u.p.shape(), qs = u.q.shape(), ts = T.shape();
    if (ps.outer != qs.outer) return "P~ and Q~ have different outer shapes";
    Partition mu = ts.inner, lambda = ts.outer;
    mu.resize(ps.rows(), 0);
    lambda.resize(ps.rows(), 0);
    if (ps.inner != mu) return "P~ does not have inner shape mu";
    if (qs.inner != lambda) return "Q~ does not have inner shape lambda";
    if (static_cast<int>(u.q.cell_count()) != excess(T)) return "Q~ has the wrong number of cells";
    if (weight(u.p, m) != weight(T, m)) return "weight changes";
    return std::nullopt;
}

void uncrowding(const ShapeUnit& u, Tally& t, const Bounds& b) {
    for_each_svt(u.shape, u.m, b.excess, [&](const SetValuedTableau& T) {
        guard(t, [&] { return to_text(T); }, [&]() -> Failure {
            const Uncrowding un = uncrowd(T);
            if (auto e = uncrowd_shape_defect(T, un, u.m)) return e;
            const DecreasingFactorization h = res(T, u.m, frame_n(T));
            if (star_tilde_shaped(h, T.shape()).q != un.p) return "shifted star recording tableau differs from P~";
            if (star_tilde(h).q != uncrowd(res_inv(h)).p) return "canonical shape: recording tableau differs from P~";
            return std::nullopt;
        });
    });
}

void uncrowd_intertwine(const ShapeUnit& u, Tally& t, const Bounds& b) {
    for_each_svt(u.shape, u.m, b.excess, [&](const SetValuedTableau& T) {
        guard(t, [&] { return to_text(T); }, [&]() -> Failure {
            const Uncrowding un = uncrowd(T);
            for (int i = 1; i < u.m; ++i) {
                const auto ft = f_svt(T, i);
                const auto fp = f_ssyt(un.p, i);
                if (!same_defined(ft, fp)) return "f_" + std::to_string(i) + " defined on only one side";
                if (ft) {
                    const Uncrowding g = uncrowd(*ft);
                    if (g.p != *fp || g.q != un.q) return "uncrowd(f_" + std::to_string(i) + " T) != (f_i P~, Q~)";
                }
                const auto et = e_svt(T, i);
                const auto ep = e_ssyt(un.p, i);
                if (!same_defined(et, ep)) return "e_" + std::to_string(i) + " defined on only one side";
                if (et) {
                    const Uncrowding g = uncrowd(*et);
                    if (g.p != *ep || g.q != un.q) return "uncrowd(e_" + std::to_string(i) + " T) != (e_i P~, Q~)";
                }
            }
            return std::nullopt;
        });
    });
}

// --- Stembridge audits -----------------------------------------------------------------

void audit_components(const CrystalGraph& g, Tally& t) {
    for (const auto& comp : components(g))
        guard(t, [&] { return g.labels[comp.front()]; }, [&]() -> Failure {
            const CrystalGraph sub = subgraph(g, comp);
            const AuditReport r = stembridge_audit(sub);
            if (!r.ok) return r.axiom + " at " + r.detail;
            return character_defect(g, comp);
        });
}

void stembridge_star(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    const auto nodes = fc_factorizations(u.n, u.m, b.letters);
    audit_components(build_crystal(nodes, u.m - 1, f_star, e_star,
                                   [](const DecreasingFactorization& f) { return weight(f); },
                                   [](const DecreasingFactorization& f) { return format_factorization(f); }),
                     t);
}

void stembridge_svt(const ShapeUnit& u, Tally& t, const Bounds& b) {
    const auto nodes = all_svt(u.shape, u.m, b.excess);
    const int m = u.m;
    audit_components(build_crystal(nodes, m - 1, f_svt, e_svt,
                                   [m](const SetValuedTableau& x) { return weight(x, m); },
                                   [](const SetValuedTableau& x) { return to_text(x); }),
                     t);
}

void stembridge_n3(const AlphabetUnit& u, Tally& t, const Bounds& b) {
    if (u.n != 3) return;
    const auto nodes = all_factorizations(3, u.m, b.letters);
    audit_components(build_crystal(nodes, u.m - 1, f3, e3,
                                   [](const DecreasingFactorization& f) { return weight(f); },
                                   [](const DecreasingFactorization& f) { return format_factorization(f); }),
                     t);
}

struct Theorem {
    std::string summary;
    Bounds defaults;
    Bounds deep;
    std::function<Report(const std::string&, const Bounds&, Exec)> run;
};

template <class Units, class Check>
std::function<Report(const std::string&, const Bounds&, Exec)> suite(Units units, Check check) {
    return [units, check](const std::string& tag, const Bounds& b, Exec exec) {
        return run(tag, units(b), [&](const auto& unit, Tally& t) { check(unit, t, b); }, exec);
    };
}

const std::map<std::string, Theorem>& registry() {
    static const std::map<std::string, Theorem> table = [] {
        const Bounds words{0, 4, 0, 4, 6}, words_deep{0, 5, 0, 5, 7};
        std::map<std::string, Theorem> r;
        r["star-residue"] = {"the residue map intertwines the SVT crystal and the star crystal",
                             {4, 3, 99, 0, 0}, {5, 4, 99, 0, 0}, suite(skew_units, star_residue)};
        r["hecke-residue"] = {"Hecke insertion of res(T) records T on straight shapes",
                              {5, 3, 99, 0, 0}, {6, 4, 99, 0, 0}, suite(straight_units, hecke_residue)};
        r["bijection"] = {"star insertion is a bijection onto the admissible pairs (P, Q)",
                          words, words_deep, suite(alphabet_units, bijection)};
        r["micro-insertion"] = {"micro-equivalent words share their star insertion tableau",
                                words, words_deep, suite(alphabet_units, micro_insertion)};
        r["micro-crystal"] = {"star crystal operators stay in the micro-equivalence class",
                              words, words_deep, suite(alphabet_units, micro_crystal)};
        r["lowest-weight"] = {"lowest weight factorizations: stacked insertion tableau of sorted shape",
                              words, words_deep, suite(alphabet_units, lowest_weight)};
        r["recording-crystal"] = {"the star recording tableau intertwines the star and SSYT crystals",
                                  words, words_deep, suite(alphabet_units, recording_crystal)};
        r["side-conditions"] = {"neighbours of the largest unpaired letter",
                                words, words_deep, suite(alphabet_units, side_conditions)};
        r["uncrowding"] = {"the shifted star recording tableau equals the uncrowded tableau",
                           {5, 3, 2, 0, 0}, {6, 4, 3, 0, 0}, suite(skew_units, uncrowding)};
        r["uncrowd-intertwine"] = {"uncrowding intertwines the SVT and SSYT crystals",
                                   {5, 3, 2, 0, 0}, {6, 4, 3, 0, 0}, suite(skew_units, uncrowd_intertwine)};
        r["stembridge-star"] = {"Stembridge axioms and characters of the star crystal",
                                {0, 4, 0, 5, 6}, {0, 5, 0, 6, 7}, suite(alphabet_units, stembridge_star)};
        r["stembridge-svt"] = {"Stembridge axioms and characters of the SVT crystal",
                               {4, 3, 99, 0, 0}, {5, 4, 99, 0, 0}, suite(skew_units, stembridge_svt)};
        r["stembridge-n3"] = {"Stembridge axioms and characters of the crystal over {1,2}",
                              {0, 5, 0, 3, 6}, {0, 6, 0, 3, 8}, suite(alphabet_units, stembridge_n3)};
        return r;
    }();
    return table;
}

const Theorem& lookup(const std::string& tag) {
    auto it = registry().find(tag);
    if (it == registry().end()) throw std::invalid_argument("unknown theorem tag '" + tag + "'");
    return it->second;
}

}  // namespace

const std::vector<std::string>& theorem_tags() {
    static const std::vector<std::string> tags = [] {
        std::vector<std::string> out;
        for (const auto& [tag, th] : registry()) out.push_back(tag);
        return out;
    }();
    return tags;
}

std::string theorem_summary(const std::string& tag) { return lookup(tag).summary; }
Bounds default_bounds(const std::string& tag) { return lookup(tag).defaults; }
Bounds deep_bounds(const std::string& tag) { return lookup(tag).deep; }

Report check_theorem(const std::string& tag, const Bounds& bounds, Exec exec) {
    return lookup(tag).run(tag, bounds, exec);
}

}  // namespace hk
