#include "hk/residue.hpp"

#include <algorithm>
#include <map>

namespace hk {

DecreasingFactorization res(const SetValuedTableau& t, int m, int n) {
    if (auto err = validate_svt(t)) throw ValidationError("invalid set-valued tableau: " + *err);
    const int top = max_entry(t);
    if (m == 0) m = std::max(top, 1);
    if (top > m) throw std::invalid_argument("tableau entry " + std::to_string(top) + " exceeds m=" + std::to_string(m));
    const int rows = t.num_rows();
    if (n == 0) n = std::max(2, rows + (rows ? t.row_end(1) : 0));
    std::vector<Factor> written(m);
    for (int r = 1; r <= rows; ++r)
        for (int c = t.row_begin(r); c <= t.row_end(r); ++c) {
            const int d = content(rows, r, c);
            if (d > n - 1) throw std::invalid_argument("content " + std::to_string(d) + " exceeds alphabet");
            for (int k : t.at(r, c)) written[m - k].push_back(d);
        }
    for (Factor& fac : written) std::sort(fac.begin(), fac.end(), std::greater<int>());
    return DecreasingFactorization(written, n);
}

namespace {

using Group = std::vector<int>;

// Entries on each diagonal, ascending, split into cells. Two consecutive entries a < b share
// a cell unless a neighbouring diagonal holds a letter between them.
std::map<int, std::vector<Group>> diagonal_cells(const DecreasingFactorization& f) {
    std::map<int, std::vector<int>> diag;
    for (int k = 1; k <= f.m(); ++k)
        for (int d : f.h(k)) diag[d].push_back(k);
    auto entries = [&](int d) -> const std::vector<int>* {
        auto it = diag.find(d);
        return it == diag.end() ? nullptr : &it->second;
    };
    std::map<int, std::vector<Group>> out;
    for (auto& [d, list] : diag) {
        std::sort(list.begin(), list.end());
        std::vector<Group> groups{{list.front()}};
        for (std::size_t k = 1; k < list.size(); ++k) {
            const int a = list[k - 1], b = list[k];
            bool split = false;
            if (auto up = entries(d + 1))
                for (int c : *up) split = split || (a <= c && c < b);
            if (auto dn = entries(d - 1))
                for (int e : *dn) split = split || (a < e && e <= b);
            if (split) groups.push_back({b});
            else groups.back().push_back(b);
        }
        out[d] = std::move(groups);
    }
    return out;
}

struct Placed {
    int diag;
    int depth;  // rows below the top row of the tableau
    Group entries;
};

struct RowSpan {
    int mu = 0, lambda = 0;
};

// Row spans top to bottom for the cells placed so far, or nothing if they do not form a skew shape.
std::optional<std::vector<RowSpan>> spans(const std::vector<Placed>& cells) {
    int deepest = 0;
    for (const Placed& p : cells) deepest = std::max(deepest, p.depth);
    std::vector<std::vector<int>> cols(deepest + 1);
    for (const Placed& p : cells) {
        const int col = p.diag - p.depth;
        if (col < 1) return std::nullopt;
        cols[p.depth].push_back(col);
    }
    std::vector<RowSpan> out;
    for (int s = 0; s <= deepest; ++s) {
        auto& row = cols[s];
        RowSpan span;
        if (row.empty()) {
            if (s == 0) return std::nullopt;
            span.mu = span.lambda = out.back().lambda;
        } else {
            std::sort(row.begin(), row.end());
            for (std::size_t k = 1; k < row.size(); ++k)
                if (row[k] != row[k - 1] + 1) return std::nullopt;
            span.mu = row.front() - 1;
            span.lambda = row.back();
        }
        if (s > 0 && (span.lambda < out.back().lambda || span.mu < out.back().mu)) return std::nullopt;
        out.push_back(span);
    }
    return out;
}

void require_fc(const DecreasingFactorization& f) {
    if (!is_fully_commutative(f))
        throw DomainError("factorization " + format_factorization(f) + " is not fully commutative");
}

void check_round_trip(const SetValuedTableau& t, const DecreasingFactorization& f) {
    if (auto err = validate_svt(t)) throw ReconstructionError("reconstructed filling is not semistandard: " + *err);
    if (res(t, f.m(), f.n()) != f) throw ReconstructionError("reconstructed filling has a different residue");
}

}  // namespace

SetValuedTableau res_inv(const DecreasingFactorization& f) {
    require_fc(f);
    const auto cells = diagonal_cells(f);
    if (cells.empty()) return SetValuedTableau{};

    // Runs of consecutive occupied diagonals; each run is one connected block.
    std::vector<std::vector<int>> blocks;
    for (const auto& [d, groups] : cells) {
        if (blocks.empty() || blocks.back().back() != d - 1) blocks.emplace_back();
        blocks.back().push_back(d);
    }

    std::vector<Placed> placed;
    int floor_depth = -1;  // depth of the lowest row used so far
    for (const auto& block : blocks) {
        // Relative rows inside the block: the cells of diagonals d and d+1 interleave, and
        // comparing their smallest entries decides which diagonal starts lower.
        std::map<int, int> base{{block.front(), 0}};
        for (std::size_t k = 0; k + 1 < block.size(); ++k) {
            const int d = block[k];
            const auto& lo = cells.at(d);
            const auto& hi = cells.at(d + 1);
            std::vector<std::pair<std::pair<int, int>, int>> merged;
            for (const auto& g : lo) merged.push_back({{g.front(), d}, 0});
            for (const auto& g : hi) merged.push_back({{g.front(), d + 1}, 1});
            std::sort(merged.begin(), merged.end());
            for (std::size_t t = 1; t < merged.size(); ++t)
                if (merged[t].second == merged[t - 1].second)
                    throw ReconstructionError("diagonals " + std::to_string(d) + " and " + std::to_string(d + 1) +
                                              " do not interleave");
            base[d + 1] = base[d] + (merged.front().second == 0 ? 0 : -1);
        }
        int top = INT32_MIN, bottom = INT32_MAX;
        for (int d : block) {
            top = std::max(top, base[d] + static_cast<int>(cells.at(d).size()) - 1);
            bottom = std::min(bottom, base[d]);
        }
        // Lower this block until the cells placed so far form a skew shape.
        for (int sigma = floor_depth + 1;; ++sigma) {
            std::vector<Placed> trial = placed;
            int min_col = INT32_MAX;
            for (int d : block) {
                const auto& groups = cells.at(d);
                for (std::size_t t = 0; t < groups.size(); ++t) {
                    const int depth = sigma + top - (base[d] + static_cast<int>(t));
                    trial.push_back({d, depth, groups[t]});
                    min_col = std::min(min_col, d - depth);
                }
            }
            if (min_col < 1)
                throw ReconstructionError("no skew shape realizes the diagonals starting at content " +
                                          std::to_string(block.front()));
            if (spans(trial)) {
                placed = std::move(trial);
                floor_depth = sigma + top - bottom;
                break;
            }
        }
    }

    const auto row_spans = *spans(placed);
    const int rows = static_cast<int>(row_spans.size());
    SetValuedTableau t;
    t.inner.resize(rows);
    t.rows.resize(rows);
    for (int s = 0; s < rows; ++s) {
        const int r = rows - s;
        t.inner[r - 1] = row_spans[s].mu;
        t.rows[r - 1].resize(row_spans[s].lambda - row_spans[s].mu);
    }
    for (const Placed& p : placed) t.at(rows - p.depth, p.diag - p.depth) = p.entries;
    check_round_trip(t, f);
    return t;
}

SetValuedTableau res_inv_shaped(const DecreasingFactorization& f, const SkewShape& shape) {
    require_fc(f);
    const auto cells = diagonal_cells(f);
    const int rows = shape.rows();
    std::map<int, std::vector<Cell>> by_diag;
    for (const Cell& c : shape.cells()) by_diag[content(rows, c.row, c.col)].push_back(c);
    for (const auto& [d, groups] : cells) {
        auto it = by_diag.find(d);
        const std::size_t have = it == by_diag.end() ? 0 : it->second.size();
        if (have < groups.size())
            throw ReconstructionError("entry " + std::to_string(groups[have].front()) + " of content " +
                                      std::to_string(d) + " has no cell in shape " + format_shape(shape));
    }
    SetValuedTableau t(shape);
    for (auto& [d, list] : by_diag) {
        auto it = cells.find(d);
        const std::size_t have = it == cells.end() ? 0 : it->second.size();
        if (have != list.size())
            throw ReconstructionError("shape " + format_shape(shape) + " has " + std::to_string(list.size()) +
                                      " cells of content " + std::to_string(d) + " but the factorization fills " +
                                      std::to_string(have));
        // by_diag lists cells bottom row first, matching the ascending groups
        for (std::size_t k = 0; k < list.size(); ++k) t.at(list[k].row, list[k].col) = it->second[k];
    }
    check_round_trip(t, f);
    return t;
}

}  // namespace hk
