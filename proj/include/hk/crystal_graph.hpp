#pragma once

// Finite colored digraphs of crystals: construction by closure, Stembridge axiom audit, DOT output.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hk/polynomial.hpp"

namespace hk {

struct CrystalGraph {
    int colors = 0;  // arrows 1..colors
    std::vector<std::string> labels;
    std::vector<std::vector<int>> weights;
    std::vector<std::vector<int>> f;  // f[i-1][v]: target of the i-arrow out of v, or -1
    std::vector<std::vector<int>> e;  // e[i-1][v]: source of the i-arrow into v, or -1

    int size() const { return static_cast<int>(labels.size()); }
    int f_at(int i, int v) const { return f[i - 1][v]; }
    int e_at(int i, int v) const { return e[i - 1][v]; }
};

// Closes the seeds under the operators. F and E map (node, i) to std::optional<node>.
template <class T, class F, class E, class W, class L>
CrystalGraph build_crystal(const std::vector<T>& seeds, int colors, F f_op, E e_op, W wt, L label) {
    CrystalGraph g;
    g.colors = colors;
    g.f.resize(colors);
    g.e.resize(colors);
    std::map<T, int> index;
    std::vector<T> nodes;
    auto intern = [&](const T& x) {
        auto [it, fresh] = index.try_emplace(x, static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back(x);
            g.labels.push_back(label(x));
            g.weights.push_back(wt(x));
            for (int i = 0; i < colors; ++i) {
                g.f[i].push_back(-1);
                g.e[i].push_back(-1);
            }
        }
        return it->second;
    };
    for (const T& s : seeds) intern(s);
    for (std::size_t v = 0; v < nodes.size(); ++v)
        for (int i = 1; i <= colors; ++i) {
            if (auto y = f_op(nodes[v], i)) g.f[i - 1][v] = intern(*y);
            if (auto y = e_op(nodes[v], i)) g.e[i - 1][v] = intern(*y);
        }
    return g;
}

// Connected components (ignoring arrow direction), each sorted ascending.
std::vector<std::vector<int>> components(const CrystalGraph& g);
CrystalGraph subgraph(const CrystalGraph& g, const std::vector<int>& nodes);

struct AuditReport {
    bool ok = true;
    std::string axiom;   // name of the first failing check
    std::string detail;  // the node(s) involved
};

// Checks, per component: e and f are mutually inverse, arrows shift the weight by a simple root,
// string lengths match the weight (seminormality), the local Stembridge conditions for adjacent
// and distant colors in both directions, and a unique source and sink.
AuditReport stembridge_audit(const CrystalGraph& g);

// Weight generating function of the listed nodes compared with the Schur polynomial of the
// sorted weight of their unique sink.
std::optional<std::string> character_defect(const CrystalGraph& g, const std::vector<int>& component);

// 1 blue, 2 red, 3 green, further colors from a fixed palette.
std::string to_dot(const CrystalGraph& g, const std::string& name = "crystal");

}  // namespace hk
