#include "hk/crystal_graph.hpp"

#include <algorithm>
#include <sstream>

namespace hk {

std::vector<std::vector<int>> components(const CrystalGraph& g) {
    std::vector<int> comp(g.size(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int i = 1; i <= g.colors; ++i)
                for (int u : {g.f_at(i, v), g.e_at(i, v)})
                    if (u >= 0 && comp[u] < 0) {
                        comp[u] = id;
                        stack.push_back(u);
                    }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

CrystalGraph subgraph(const CrystalGraph& g, const std::vector<int>& nodes) {
    std::vector<int> where(g.size(), -1);
    for (std::size_t k = 0; k < nodes.size(); ++k) where[nodes[k]] = static_cast<int>(k);
    CrystalGraph s;
    s.colors = g.colors;
    s.f.assign(g.colors, std::vector<int>(nodes.size(), -1));
    s.e = s.f;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const int v = nodes[k];
        s.labels.push_back(g.labels[v]);
        s.weights.push_back(g.weights[v]);
        for (int i = 0; i < g.colors; ++i) {
            if (g.f[i][v] >= 0) s.f[i][k] = where[g.f[i][v]];
            if (g.e[i][v] >= 0) s.e[i][k] = where[g.e[i][v]];
        }
    }
    return s;
}

namespace {

AuditReport fail(const std::string& axiom, const std::string& detail) { return {false, axiom, detail}; }

// Applies the operators of `ops` in order; -1 as soon as one is undefined.
int walk(const std::vector<std::vector<int>>& op, int v, std::initializer_list<int> colors) {
    for (int i : colors) {
        if (v < 0) return -1;
        v = op[i - 1][v];
    }
    return v;
}

// String lengths; nullopt if some string revisits a node.
std::optional<std::vector<std::vector<int>>> string_lengths(const CrystalGraph& g,
                                                            const std::vector<std::vector<int>>& op) {
    std::vector<std::vector<int>> len(g.colors, std::vector<int>(g.size(), 0));
    for (int i = 0; i < g.colors; ++i)
        for (int v = 0; v < g.size(); ++v) {
            int steps = 0;
            for (int u = op[i][v]; u >= 0; u = op[i][u])
                if (++steps > g.size()) return std::nullopt;
            len[i][v] = steps;
        }
    return len;
}

// The local conditions in one direction. `op` is e or f and `len` the matching string lengths.
AuditReport local_axioms(const CrystalGraph& g, const std::vector<std::vector<int>>& op,
                         const std::vector<std::vector<int>>& len, const char* dir) {
    const std::string d = dir;
    for (int v = 0; v < g.size(); ++v)
        for (int i = 1; i <= g.colors; ++i) {
            const int y = op[i - 1][v];
            if (y < 0) continue;
            for (int j = 1; j <= g.colors; ++j) {
                if (j == i) continue;
                const bool adjacent = std::abs(i - j) == 1;
                const int a = len[j - 1][y] - len[j - 1][v];
                if (adjacent ? (a < 0 || a > 1) : a != 0)
                    return fail("string length change (" + d + ")", g.labels[v] + " colors " + std::to_string(i) +
                                                                    "," + std::to_string(j));
                const int z = op[j - 1][v];
                if (z < 0) continue;
                const int b = len[i - 1][z] - len[i - 1][v];
                if (a == 0) {
                    const int ij = walk(op, v, {i, j}), ji = walk(op, v, {j, i});
                    if (ij < 0 || ij != ji)
                        return fail(std::string(adjacent ? "adjacent" : "distant") + " commutation (" + d + ")",
                                    g.labels[v] + " colors " + std::to_string(i) + "," + std::to_string(j));
                } else if (adjacent && b == 1) {
                    const int ijji = walk(op, v, {i, j, j, i}), jiij = walk(op, v, {j, i, i, j});
                    if (ijji < 0 || ijji != jiij)
                        return fail("braid relation (" + d + ")",
                                    g.labels[v] + " colors " + std::to_string(i) + "," + std::to_string(j));
                }
            }
        }
    return {};
}

}  // namespace

AuditReport stembridge_audit(const CrystalGraph& g) {
    for (int i = 1; i <= g.colors; ++i)
        for (int v = 0; v < g.size(); ++v) {
            const int u = g.f_at(i, v), w = g.e_at(i, v);
            if ((u >= 0 && g.e_at(i, u) != v) || (w >= 0 && g.f_at(i, w) != v))
                return fail("partial inverse", g.labels[v] + " color " + std::to_string(i));
            if (u >= 0) {
                std::vector<int> expect = g.weights[v];
                --expect[i - 1];
                ++expect[i];
                if (g.weights[u] != expect) return fail("weight", g.labels[v] + " color " + std::to_string(i));
            }
        }
    const auto phi = string_lengths(g, g.f);
    const auto eps = string_lengths(g, g.e);
    if (!phi || !eps) return fail("finite strings", "an arrow string revisits a node");
    for (int i = 1; i <= g.colors; ++i)
        for (int v = 0; v < g.size(); ++v)
            if ((*phi)[i - 1][v] - (*eps)[i - 1][v] != g.weights[v][i - 1] - g.weights[v][i])
                return fail("seminormality", g.labels[v] + " color " + std::to_string(i));
    if (auto r = local_axioms(g, g.e, *eps, "raising"); !r.ok) return r;
    if (auto r = local_axioms(g, g.f, *phi, "lowering"); !r.ok) return r;
    for (const auto& comp : components(g)) {
        int sources = 0, sinks = 0;
        for (int v : comp) {
            bool top = true, bottom = true;
            for (int i = 1; i <= g.colors; ++i) {
                top = top && g.e_at(i, v) < 0;
                bottom = bottom && g.f_at(i, v) < 0;
            }
            sources += top;
            sinks += bottom;
        }
        if (sources != 1) return fail("unique highest weight", "component of " + g.labels[comp.front()]);
        if (sinks != 1) return fail("unique lowest weight", "component of " + g.labels[comp.front()]);
    }
    return {};
}

std::optional<std::string> character_defect(const CrystalGraph& g, const std::vector<int>& component) {
    if (component.empty()) return std::nullopt;
    const int m = static_cast<int>(g.weights[component.front()].size());
    int sink = -1;
    BetaPolynomial ch(m);
    for (int v : component) {
        ch.add(0, g.weights[v], 1);
        bool bottom = true;
        for (int i = 1; i <= g.colors; ++i) bottom = bottom && g.f_at(i, v) < 0;
        if (bottom) {
            if (sink >= 0) return "component of " + g.labels[v] + " has two lowest weight elements";
            sink = v;
        }
    }
    if (sink < 0) return "component of " + g.labels[component.front()] + " has no lowest weight element";
    Partition mu = g.weights[sink];
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    if (ch != schur_poly(mu, m))
        return "character of the component of " + g.labels[sink] + " differs from s" + format_partition(mu);
    return std::nullopt;
}

std::string to_dot(const CrystalGraph& g, const std::string& name) {
    static const char* palette[] = {"blue", "red", "green", "orange", "purple", "brown", "magenta", "cyan"};
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  node [shape=plaintext];\n";
    for (int v = 0; v < g.size(); ++v) out << "  n" << v << " [label=" << quote(g.labels[v]) << "];\n";
    for (int i = 1; i <= g.colors; ++i)
        for (int v = 0; v < g.size(); ++v)
            if (int u = g.f_at(i, v); u >= 0)
                out << "  n" << v << " -> n" << u << " [color=" << palette[(i - 1) % 8] << ", label=\"" << i
                    << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace hk
