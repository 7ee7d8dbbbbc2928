#include "hk/uncrowding.hpp"

#include <algorithm>

#include "hk/residue.hpp"

namespace hk {

namespace {

int topmost_multicell_row(const SetValuedTableau& t) {
    for (int r = t.num_rows(); r >= 1; --r)
        for (const auto& cell : t.rows[r - 1])
            if (cell.size() > 1) return r;
    return 0;
}

}  // namespace

UncrowdStep uncrowd_step(const SetValuedTableau& t) {
    if (auto err = validate_svt(t)) throw ValidationError("invalid set-valued tableau: " + *err);
    const int r = topmost_multicell_row(t);
    if (r == 0) throw std::invalid_argument("tableau has no multicell");

    UncrowdStep out{t, {}, r};
    auto& source = out.t.rows[r - 1];
    std::size_t at = 0;
    int x = 0;
    for (std::size_t k = 0; k < source.size(); ++k)
        if (source[k].size() > 1 && source[k].back() > x) {
            x = source[k].back();
            at = k;
        }
    source[at].pop_back();

    // Rows above r hold single letters only, so this is ordinary row insertion.
    for (int row = r + 1;; ++row) {
        if (row > out.t.num_rows()) {
            out.t.rows.emplace_back();
            out.t.inner.push_back(0);
        }
        auto& cells = out.t.rows[row - 1];
        auto it = std::find_if(cells.begin(), cells.end(), [x](const std::vector<int>& c) { return c.front() > x; });
        if (it == cells.end()) {
            cells.push_back({x});
            out.added = {row, out.t.row_end(row)};
            return out;
        }
        std::swap(x, it->front());
    }
}

Uncrowding uncrowd(const SetValuedTableau& t) {
    if (auto err = validate_svt(t)) throw ValidationError("invalid set-valued tableau: " + *err);
    SetValuedTableau cur = t;
    Uncrowding out;
    for (int r = 1; r <= t.num_rows(); ++r) {
        out.q.inner.push_back(t.row_end(r));
        out.q.rows.emplace_back();
    }
    while (topmost_multicell_row(cur)) {
        UncrowdStep step = uncrowd_step(cur);
        cur = std::move(step.t);
        if (step.added.row > out.q.num_rows()) {
            out.q.inner.push_back(0);
            out.q.rows.emplace_back();
        }
        out.q.rows[step.added.row - 1].push_back(step.added.row - step.source_row);
    }
    out.p = to_single_valued(cur);
    return out;
}

StarInsertion star_tilde_shaped(const DecreasingFactorization& f, const SkewShape& shape) {
    const int rows = shape.rows();
    const Partition mu = trim(shape.inner);
    const int lm = static_cast<int>(mu.size());

    // res(T_mu) computed with the contents of the lambda frame, appended as the lowest factors.
    std::vector<Factor> written = f.written();
    int n = std::max(f.n(), rows + (rows ? shape.outer[0] : 0));
    for (int i = lm; i >= 1; --i) {
        Factor h;
        for (int c = mu[i - 1]; c >= 1; --c) h.push_back(content(rows, i, c));
        written.push_back(std::move(h));
    }
    const StarInsertion full = star_insert(DecreasingFactorization(written, n));

    StarInsertion out;
    for (int r = 1; r <= full.p.num_rows(); ++r) {
        const int cut = r <= lm ? mu[r - 1] : 0;
        if (r <= lm) {
            const auto& qrow = full.q.rows[r - 1];
            if (static_cast<int>(qrow.size()) < cut ||
                std::any_of(qrow.begin(), qrow.begin() + cut, [r](int v) { return v != r; }))
                throw std::logic_error("recording tableau does not contain T_mu in row " + std::to_string(r));
        }
        out.p.inner.push_back(cut);
        out.q.inner.push_back(cut);
        out.p.rows.emplace_back(full.p.rows[r - 1].begin() + cut, full.p.rows[r - 1].end());
        out.q.rows.emplace_back();
        for (auto it = full.q.rows[r - 1].begin() + cut; it != full.q.rows[r - 1].end(); ++it)
            out.q.rows.back().push_back(*it - lm);
    }
    // T_mu's letters are inserted first; keep only the paths of f's letters.
    out.trace.assign(full.trace.begin() + size(mu), full.trace.end());
    return out;
}

StarInsertion star_tilde(const DecreasingFactorization& f) { return star_tilde_shaped(f, res_inv(f).shape()); }

}  // namespace hk
