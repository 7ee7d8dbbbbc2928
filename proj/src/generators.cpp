#include "hk/generators.hpp"

#include <algorithm>

namespace hk {

namespace {

void partitions_rec(int left, int cap, Partition& cur, std::vector<Partition>& out) {
    if (left == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(left - part, part, cur, out);
        cur.pop_back();
    }
}

void box_rec(int rows, int cap, Partition& cur, std::vector<Partition>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int part = cap; part >= 1; --part) {
        cur.push_back(part);
        box_rec(rows, part, cur, out);
        cur.pop_back();
    }
}

bool contained(const Partition& mu, const Partition& lambda) {
    if (mu.size() > lambda.size()) return false;
    for (std::size_t k = 0; k < mu.size(); ++k)
        if (mu[k] > lambda[k]) return false;
    return true;
}

// Depth-first over the cells in order; `choices` assigns each admissible value and recurses.
template <class Entry, class Choices>
void fill(SkewTableau<Entry>& t, const std::vector<Cell>& cells, std::size_t k, Choices& choices,
          const std::function<void(const SkewTableau<Entry>&)>& visit) {
    if (k == cells.size()) {
        visit(t);
        return;
    }
    const Cell c = cells[k];
    choices(t, c, [&] { fill(t, cells, k + 1, choices, visit); });
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    if (n >= 0) partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    Partition cur;
    if (rows >= 0 && cols >= 0) box_rec(rows, cols, cur, out);
    return out;
}

std::vector<SkewShape> skew_shapes(int max_cells) {
    std::vector<SkewShape> out;
    if (max_cells < 1) return out;
    const auto box = partitions_in_box(max_cells, max_cells);
    for (const Partition& lambda : box) {
        if (lambda.empty()) continue;
        for (const Partition& mu : box) {
            if (mu.size() >= lambda.size() || !contained(mu, lambda)) continue;
            if (!mu.empty() && mu[0] >= lambda[0]) continue;
            const int cells = size(lambda) - size(mu);
            if (cells >= 1 && cells <= max_cells) out.emplace_back(lambda, mu);
        }
    }
    return out;
}

void for_each_ssyt(const SkewShape& shape, int m, const std::function<void(const Tableau&)>& visit) {
    Tableau t(shape);
    const auto cells = shape.cells();
    auto choices = [m](Tableau& t, Cell c, auto&& next) {
        int lo = 1;
        if (t.has(c.row, c.col - 1)) lo = std::max(lo, t.at(c.row, c.col - 1));
        if (t.has(c.row - 1, c.col)) lo = std::max(lo, t.at(c.row - 1, c.col) + 1);
        for (int v = lo; v <= m; ++v) {
            t.at(c.row, c.col) = v;
            next();
        }
    };
    fill<int>(t, cells, 0, choices, visit);
}

void for_each_row_strict(const SkewShape& shape, int max_entry, const std::function<void(const Tableau&)>& visit) {
    Tableau t(shape);
    const auto cells = shape.cells();
    auto choices = [max_entry](Tableau& t, Cell c, auto&& next) {
        int lo = 1;
        if (t.has(c.row, c.col - 1)) lo = std::max(lo, t.at(c.row, c.col - 1) + 1);
        if (t.has(c.row - 1, c.col)) lo = std::max(lo, t.at(c.row - 1, c.col));
        for (int v = lo; v <= max_entry; ++v) {
            t.at(c.row, c.col) = v;
            next();
        }
    };
    fill<int>(t, cells, 0, choices, visit);
}

void for_each_svt(const SkewShape& shape, int m, int max_excess,
                  const std::function<void(const SetValuedTableau&)>& visit) {
    SetValuedTableau t(shape);
    const auto cells = shape.cells();
    int budget = max_excess;
    auto choices = [m, &budget](SetValuedTableau& t, Cell c, auto&& next) {
        int lo = 1;
        if (t.has(c.row, c.col - 1)) lo = std::max(lo, t.at(c.row, c.col - 1).back());
        if (t.has(c.row - 1, c.col)) lo = std::max(lo, t.at(c.row - 1, c.col).back() + 1);
        if (lo > m) return;
        const int span = m - lo + 1;
        for (unsigned mask = 1; mask < (1u << span); ++mask) {
            std::vector<int> set;
            for (int b = 0; b < span; ++b)
                if (mask & (1u << b)) set.push_back(lo + b);
            const int extra = static_cast<int>(set.size()) - 1;
            if (extra > budget) continue;
            budget -= extra;
            t.at(c.row, c.col) = std::move(set);
            next();
            budget += extra;
        }
    };
    fill<std::vector<int>>(t, cells, 0, choices, visit);
}

std::vector<Tableau> all_ssyt(const SkewShape& shape, int m) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, m, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<SetValuedTableau> all_svt(const SkewShape& shape, int m, int max_excess) {
    std::vector<SetValuedTableau> out;
    for_each_svt(shape, m, max_excess, [&](const SetValuedTableau& t) { out.push_back(t); });
    return out;
}

std::vector<HeckeElement> fully_commutative_elements(int n) {
    std::vector<HeckeElement> out;
    for (const HeckeElement& e : all_permutations(n))
        if (is_fully_commutative(e)) out.push_back(e);
    return out;
}

std::vector<DecreasingFactorization> fc_factorizations(int n, int m, int max_letters) {
    std::vector<DecreasingFactorization> out;
    if (m < 1) return out;
    for (auto& f : all_factorizations(n, m, max_letters))
        if (is_fully_commutative(f)) out.push_back(std::move(f));
    return out;
}

std::vector<HeckeWord> fc_words(int n, int max_len) {
    std::vector<HeckeWord> out;
    if (n < 2) return out;
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= max_len; ++len) {
        std::vector<std::vector<int>> next;
        for (auto& w : layer) {
            HeckeWord hw(w, n);
            if (!is_fully_commutative(eval(hw))) continue;  // prefixes of FC words are FC
            out.push_back(hw);
            if (len == max_len) continue;
            for (int a = 1; a < n; ++a) {
                next.push_back(w);
                next.back().push_back(a);
            }
        }
        layer = std::move(next);
    }
    return out;
}

}  // namespace hk
