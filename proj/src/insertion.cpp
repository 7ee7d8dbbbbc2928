#include "hk/insertion.hpp"

#include <algorithm>
#include <deque>

#include "hk/mutation.hpp"

namespace hk {

namespace {

int row_len(const Tableau& t, int r) { return r <= t.num_rows() ? static_cast<int>(t.rows[r - 1].size()) : 0; }

void add_row(Tableau& t) {
    t.rows.emplace_back();
    t.inner.push_back(0);
}

void add_row(SetValuedTableau& t) {
    t.rows.emplace_back();
    t.inner.push_back(0);
}

}  // namespace

HeckeInsertion hecke_insert(const HeckeBiword& b) {
    validate_biword(b);
    HeckeInsertion out;
    for (std::size_t k = b.top.size(); k-- > 0;) {
        int x = b.bottom[k];
        const int y = b.top[k];
        Path path;
        for (int r = 1;; ++r) {
            const int len = row_len(out.p, r);
            if (len == 0 || x >= out.p.rows[r - 1].back()) {
                // Case 1: x is at least every entry of the row.
                const int col = len + 1;
                const bool fits = (len == 0 || x > out.p.rows[r - 1].back()) &&
                                  (r == 1 || (row_len(out.p, r - 1) >= col && out.p.at(r - 1, col) < x));
                if (fits) {
                    if (len == 0) {
                        add_row(out.p);
                        add_row(out.q);
                    }
                    out.p.rows[r - 1].push_back(x);
                    out.q.rows[r - 1].push_back({y});
                    path.push_back({r, col});
                } else {
                    if (len == 0) throw std::logic_error("Hecke insertion reached an empty row it cannot extend");
                    // The label joins the topmost cell in the column of the row's last box.
                    int top = r;
                    while (row_len(out.p, top + 1) >= len) ++top;
                    auto& cell = out.q.at(top, len);
                    cell.insert(std::upper_bound(cell.begin(), cell.end(), y), y);
                    path.push_back({top, len});
                }
                break;
            }
            // Case 2: z is the smallest entry larger than x.
            auto& row = out.p.rows[r - 1];
            const int c = static_cast<int>(std::upper_bound(row.begin(), row.end(), x) - row.begin()) + 1;
            const int z = row[c - 1];
            const bool fits = (c == 1 || row[c - 2] < x) && (r == 1 || out.p.at(r - 1, c) < x);
            if (fits) row[c - 1] = x;
            path.push_back({r, c});
            x = z;
        }
        out.trace.push_back(path);
    }
    return out;
}

std::pair<Tableau, Path> star_insert_one(const Tableau& p, int x, int n) {
    HeckeWord w = row_word(p, 0);
    w.letters.push_back(x);
    w.n = n > 0 ? n : inferred_rank(w.letters);
    if (!is_fully_commutative(eval(w)))
        throw DomainError("row reading word followed by " + std::to_string(x) + " is not fully commutative");
    Tableau t = p;
    Path path;
    for (int r = 1;; ++r) {
        if (r > t.num_rows()) {
            add_row(t);
            t.rows[r - 1].push_back(x);
            path.push_back({r, 1});
            return {t, path};
        }
        auto& row = t.rows[r - 1];
        if (x > row.back()) {  // Case 1
            row.push_back(x);
            path.push_back({r, static_cast<int>(row.size())});
            return {t, path};
        }
        auto it = std::lower_bound(row.begin(), row.end(), x);
        const int c = static_cast<int>(it - row.begin()) + 1;
        if (*it != x) {  // Case 2
            const int y = *it;
            *it = x;
            path.push_back({r, c});
            x = y;
            continue;
        }
        // Case 3: the row is unchanged and the left end of the run of consecutive
        // entries ending at x moves up.
        int start = c - 1;
        if (active_mutation() != Mutation::star_insert_case3)
            while (start > 0 && row[start - 1] == row[start] - 1) --start;
        path.push_back({r, c});
        x = row[start];
    }
}

StarInsertion star_insert(const HeckeBiword& b, int n) {
    validate_biword(b);
    HeckeWord w(b.bottom, n > 0 ? n : inferred_rank(b.bottom));
    if (!is_fully_commutative(eval(w))) throw DomainError("biword is not fully commutative");
    StarInsertion out;
    for (std::size_t k = b.top.size(); k-- > 0;) {
        auto [p, path] = star_insert_one(out.p, b.bottom[k], w.n);
        out.p = std::move(p);
        const Cell added = path.back();
        if (added.row > out.q.num_rows()) add_row(out.q);
        out.q.rows[added.row - 1].push_back(b.top[k]);
        out.trace.push_back(std::move(path));
    }
    return out;
}

StarInsertion star_insert(const DecreasingFactorization& f) { return star_insert(to_biword(f), f.n()); }

Tableau star_insertion_tableau(const HeckeWord& insertion_order) {
    if (!is_fully_commutative(eval(insertion_order))) throw DomainError("word is not fully commutative");
    Tableau p;
    for (int x : insertion_order.letters) p = star_insert_one(p, x, insertion_order.n).first;
    return p;
}

std::pair<Tableau, int> reverse_bump(const Tableau& p, Cell corner) {
    const int r0 = corner.row;
    if (r0 < 1 || r0 > p.num_rows() || corner.col != row_len(p, r0) || row_len(p, r0 + 1) >= corner.col)
        throw std::invalid_argument("cell (" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                                    ") is not a corner");
    Tableau t = p;
    int y = t.rows[r0 - 1].back();
    t.rows[r0 - 1].pop_back();
    t.normalize();
    for (int r = r0 - 1; r >= 1; --r) {
        auto& row = t.rows[r - 1];
        auto it = std::lower_bound(row.begin(), row.end(), y);
        if (it != row.end() && *it == y) {
            // y already present: emit the right end of the run of consecutive entries from y.
            auto end = it;
            while (end + 1 != row.end() && *(end + 1) == *end + 1) ++end;
            y = *end;
        } else {
            if (it == row.begin()) throw ReconstructionError("no entry below " + std::to_string(y) + " in row " + std::to_string(r));
            --it;
            std::swap(*it, y);
        }
    }
    return {t, y};
}

HeckeBiword star_inverse(const Tableau& p, const Tableau& q, int n) {
    if (auto err = validate_row_increasing(p)) throw ValidationError("P: " + *err);
    if (auto err = validate_semistandard(q)) throw ValidationError("Q: " + *err);
    if (p.shape() != q.shape()) throw ValidationError("P and Q have different shapes");
    for (int x : p.inner)
        if (x) throw ValidationError("P must have straight shape");
    const HeckeWord rw = row_word(p, n);
    if (!is_fully_commutative(eval(rw))) throw DomainError("row reading word of P is not fully commutative");

    Tableau pp = p, qq = q;
    HeckeBiword b;
    while (qq.num_rows()) {
        const int k = max_entry(qq);
        // The cells holding k form a horizontal strip; peel it from the right.
        std::vector<Cell> strip;
        for (const Cell& c : qq.cells())
            if (qq.at(c.row, c.col) == k) strip.push_back(c);
        std::sort(strip.begin(), strip.end(), [](const Cell& a, const Cell& c) { return a.col > c.col; });
        for (const Cell& c : strip) {
            if (c.col != row_len(qq, c.row) || row_len(qq, c.row + 1) >= c.col)
                throw ReconstructionError("entries " + std::to_string(k) + " of Q do not form a horizontal strip");
            auto [smaller, x] = reverse_bump(pp, c);
            pp = std::move(smaller);
            qq.rows[c.row - 1].pop_back();
            qq.normalize();
            b.top.push_back(k);
            b.bottom.push_back(x);
        }
    }
    try {
        validate_biword(b);
    } catch (const ValidationError& e) {
        throw ReconstructionError(std::string("(P,Q) is not in the image: ") + e.what());
    }
    StarInsertion again = star_insert(b, rw.n);
    if (again.p != p || again.q != q) throw ReconstructionError("(P,Q) is not in the image of the star insertion");
    return b;
}

namespace {

// Words reachable from w by one move on a consecutive triple, in either direction.
void neighbours(const std::vector<int>& w, std::vector<std::vector<int>>& out) {
    out.clear();
    for (std::size_t k = 0; k + 2 < w.size(); ++k) {
        const int a = w[k], b = w[k + 1], c = w[k + 2];
        auto emit = [&](int x, int y, int z) {
            std::vector<int> v = w;
            v[k] = x;
            v[k + 1] = y;
            v[k + 2] = z;
            out.push_back(std::move(v));
        };
        if ((a < c && c < b) || (b < c && c < a)) emit(b, a, c);  // xyz ~ yxz with x < z < y
        if ((b < a && a < c) || (c < a && a < b)) emit(a, c, b);  // zxy ~ zyx with x < z < y
        if (b == c && b > a + 1) emit(b, a, b);                   // xyy ~ yxy with y > x+1
        if (a == c && a > b + 1) emit(b, a, a);
        if (a == b && c > a + 1) emit(a, c, a);                   // xxy ~ xyx with y > x+1
        if (a == c && b > a + 1) emit(a, a, b);
        if (a == b && c == a + 1) emit(a, c, c);                  // xxy ~ xyy with y = x+1
        if (b == c && b == a + 1) emit(a, a, b);
    }
}

}  // namespace

std::set<std::vector<int>> micro_class(const HeckeWord& w) {
    std::set<std::vector<int>> seen{w.letters};
    std::deque<std::vector<int>> queue{w.letters};
    std::vector<std::vector<int>> next;
    while (!queue.empty()) {
        std::vector<int> cur = std::move(queue.front());
        queue.pop_front();
        neighbours(cur, next);
        for (auto& v : next)
            if (seen.insert(v).second) queue.push_back(std::move(v));
    }
    return seen;
}

bool micro_equivalent(const HeckeWord& a, const HeckeWord& b) {
    if (a.n != b.n) throw std::invalid_argument("alphabet bounds differ");
    if (a.letters.size() != b.letters.size()) return false;
    return micro_class(a).count(b.letters) > 0;
}

}  // namespace hk
