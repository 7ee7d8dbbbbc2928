#include "hk/svt_crystal.hpp"

#include <algorithm>

#include "hk/mutation.hpp"

namespace hk {

namespace {

bool holds(const std::vector<int>& s, int a) { return std::binary_search(s.begin(), s.end(), a); }

void add(std::vector<int>& s, int a) { s.insert(std::lower_bound(s.begin(), s.end(), a), a); }

void drop(std::vector<int>& s, int a) { s.erase(std::lower_bound(s.begin(), s.end(), a)); }

// Row of the cell in column c that contains a, or 0.
int row_with(const SetValuedTableau& t, int c, int a) {
    for (int r = 1; r <= t.num_rows(); ++r)
        if (t.has(r, c) && holds(t.at(r, c), a)) return r;
    return 0;
}

}  // namespace

std::vector<ColumnSign> svt_signature(const SetValuedTableau& t, int i) {
    if (i < 1) throw std::invalid_argument("crystal index must be positive");
    int cols = 0;
    for (int r = 1; r <= t.num_rows(); ++r) cols = std::max(cols, t.row_end(r));
    std::vector<ColumnSign> sig;
    for (int c = 1; c <= cols; ++c) {
        bool lo = row_with(t, c, i) != 0, hi = row_with(t, c, i + 1) != 0;
        if (lo != hi) sig.push_back({c, lo ? '-' : '+', false});
    }
    std::vector<std::size_t> open;  // unmatched '+' positions
    for (std::size_t k = 0; k < sig.size(); ++k) {
        if (sig[k].sign == '+') {
            open.push_back(k);
        } else if (!open.empty()) {
            sig[open.back()].paired = true;
            sig[k].paired = true;
            open.pop_back();
        }
    }
    return sig;
}

int phi_svt(const SetValuedTableau& t, int i) {
    int k = 0;
    for (const auto& s : svt_signature(t, i)) k += s.sign == '-' && !s.paired;
    return k;
}

int epsilon_svt(const SetValuedTableau& t, int i) {
    int k = 0;
    for (const auto& s : svt_signature(t, i)) k += s.sign == '+' && !s.paired;
    return k;
}

std::optional<SetValuedTableau> f_svt(const SetValuedTableau& t, int i) {
    auto sig = svt_signature(t, i);
    auto it = std::find_if(sig.rbegin(), sig.rend(), [](const ColumnSign& s) { return s.sign == '-' && !s.paired; });
    if (it == sig.rend()) return std::nullopt;
    const int c = it->col;
    const int r = row_with(t, c, i);
    SetValuedTableau u = t;
    const Mutation mut = active_mutation();
    if (u.has(r, c + 1) && holds(u.at(r, c + 1), i) && holds(u.at(r, c + 1), i + 1) &&
        mut != Mutation::svt_f_exception) {
        drop(u.at(r, c + 1), i);
        add(u.at(r, c), i + 1);
    } else {
        if (mut == Mutation::svt_f_plain) return std::nullopt;
        drop(u.at(r, c), i);
        add(u.at(r, c), i + 1);
    }
    return u;
}

std::optional<SetValuedTableau> e_svt(const SetValuedTableau& t, int i) {
    auto sig = svt_signature(t, i);
    auto it = std::find_if(sig.begin(), sig.end(), [](const ColumnSign& s) { return s.sign == '+' && !s.paired; });
    if (it == sig.end()) return std::nullopt;
    const int c = it->col;
    const int r = row_with(t, c, i + 1);
    SetValuedTableau u = t;
    const Mutation mut = active_mutation();
    if (u.has(r, c - 1) && holds(u.at(r, c - 1), i) && holds(u.at(r, c - 1), i + 1) &&
        mut != Mutation::svt_e_exception) {
        drop(u.at(r, c - 1), i + 1);
        add(u.at(r, c), i);
    } else {
        if (mut == Mutation::svt_e_plain) return std::nullopt;
        drop(u.at(r, c), i + 1);
        add(u.at(r, c), i);
    }
    return u;
}

std::optional<Tableau> f_ssyt(const Tableau& t, int i) {
    auto u = f_svt(to_set_valued(t), i);
    if (!u) return std::nullopt;
    return to_single_valued(*u);
}

std::optional<Tableau> e_ssyt(const Tableau& t, int i) {
    auto u = e_svt(to_set_valued(t), i);
    if (!u) return std::nullopt;
    return to_single_valued(*u);
}

}  // namespace hk
