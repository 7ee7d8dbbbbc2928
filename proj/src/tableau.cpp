#include "hk/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hk {

bool is_partition(const Partition& p) {
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] < 0) return false;
        if (k && p[k - 1] < p[k]) return false;
    }
    return true;
}

Partition trim(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

SkewShape::SkewShape(Partition out, Partition in) : outer(trim(std::move(out))), inner(trim(std::move(in))) {
    if (!is_partition(outer) || !is_partition(inner)) throw ValidationError("shape parts must form partitions");
    if (inner.size() > outer.size()) throw ValidationError("inner shape is not contained in outer shape");
    inner.resize(outer.size(), 0);
    for (std::size_t k = 0; k < outer.size(); ++k)
        if (inner[k] > outer[k]) throw ValidationError("inner shape is not contained in outer shape");
}

int SkewShape::size() const { return hk::size(outer) - hk::size(inner); }

bool SkewShape::contains(int row, int col) const {
    return row >= 1 && row <= rows() && col > inner[row - 1] && col <= outer[row - 1];
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= rows(); ++r)
        for (int c = inner[r - 1] + 1; c <= outer[r - 1]; ++c) out.push_back({r, c});
    return out;
}

namespace {

Partition parse_parts(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (c == '(' || c == ')' || c == ',') t += ' ';
        else if (std::isdigit(static_cast<unsigned char>(c)) || std::isspace(static_cast<unsigned char>(c))) t += c;
        else throw ValidationError(std::string("bad character '") + c + "' in shape");
    }
    Partition p;
    std::istringstream in(t);
    int x;
    while (in >> x) p.push_back(x);
    return p;
}

}  // namespace

SkewShape parse_shape(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_parts(text));
    return SkewShape(parse_parts(text.substr(0, slash)), parse_parts(text.substr(slash + 1)));
}

std::string format_partition(const Partition& p) {
    std::string s = "(";
    Partition q = trim(p);
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(q[k]);
    }
    return s + ")";
}

std::string format_shape(const SkewShape& s) {
    if (trim(s.inner).empty()) return format_partition(s.outer);
    return format_partition(s.outer) + "/" + format_partition(s.inner);
}

Tableau tableau_from_rows(const std::vector<std::vector<int>>& rows) {
    Tableau t;
    t.rows = rows;
    t.inner.assign(rows.size(), 0);
    t.normalize();
    return t;
}

SetValuedTableau set_tableau_from_rows(const std::vector<std::vector<std::vector<int>>>& rows,
                                       const Partition& inner) {
    SetValuedTableau t;
    t.rows = rows;
    t.inner = inner;
    t.inner.resize(rows.size(), 0);
    t.normalize();
    return t;
}

namespace {

std::string where(int r, int c) { return "(" + std::to_string(r) + "," + std::to_string(c) + ")"; }

template <class E>
std::optional<std::string> check_shape(const SkewTableau<E>& t) {
    if (t.inner.size() != t.rows.size()) return "inner offsets and rows differ in count";
    for (int r = 1; r <= t.num_rows(); ++r) {
        if (t.inner[r - 1] < 0) return "negative inner offset";
        if (r > 1 && t.inner[r - 1] > t.inner[r - 2]) return "inner shape is not a partition at row " + std::to_string(r);
        if (r > 1 && t.row_end(r) > t.row_end(r - 1)) return "outer shape is not a partition at row " + std::to_string(r);
    }
    if (t.num_rows() && t.row_end(t.num_rows()) == 0) return "trailing row of zero length";
    return std::nullopt;
}

// Checks every horizontally and vertically adjacent pair with the supplied predicates.
template <class E, class RowOk, class ColOk>
std::optional<std::string> check_pairs(const SkewTableau<E>& t, RowOk row_ok, ColOk col_ok) {
    for (int r = 1; r <= t.num_rows(); ++r)
        for (int c = t.row_begin(r); c <= t.row_end(r); ++c) {
            if (t.has(r, c + 1) && !row_ok(t.at(r, c), t.at(r, c + 1)))
                return "row condition fails between " + where(r, c) + " and " + where(r, c + 1);
            if (t.has(r + 1, c) && !col_ok(t.at(r, c), t.at(r + 1, c)))
                return "column condition fails between " + where(r, c) + " and " + where(r + 1, c);
        }
    return std::nullopt;
}

std::optional<std::string> check_positive(const Tableau& t) {
    for (int r = 1; r <= t.num_rows(); ++r)
        for (int c = t.row_begin(r); c <= t.row_end(r); ++c)
            if (t.at(r, c) < 1) return "nonpositive entry at " + where(r, c);
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_svt(const SetValuedTableau& t) {
    if (auto e = check_shape(t)) return e;
    for (int r = 1; r <= t.num_rows(); ++r)
        for (int c = t.row_begin(r); c <= t.row_end(r); ++c) {
            const auto& s = t.at(r, c);
            if (s.empty()) return "empty cell at " + where(r, c);
            if (s.front() < 1) return "nonpositive entry at " + where(r, c);
            for (std::size_t k = 1; k < s.size(); ++k)
                if (s[k - 1] >= s[k]) return "cell " + where(r, c) + " is not an ascending set";
        }
    return check_pairs(
        t, [](const auto& a, const auto& b) { return a.back() <= b.front(); },
        [](const auto& a, const auto& b) { return a.back() < b.front(); });
}

std::optional<std::string> validate_semistandard(const Tableau& t) {
    if (auto e = check_shape(t)) return e;
    if (auto e = check_positive(t)) return e;
    return check_pairs(t, [](int a, int b) { return a <= b; }, [](int a, int b) { return a < b; });
}

std::optional<std::string> validate_row_increasing(const Tableau& t) {
    if (auto e = check_shape(t)) return e;
    if (auto e = check_positive(t)) return e;
    return check_pairs(t, [](int a, int b) { return a < b; }, [](int a, int b) { return a <= b; });
}

std::optional<std::string> validate_increasing(const Tableau& t) {
    if (auto e = check_shape(t)) return e;
    if (auto e = check_positive(t)) return e;
    return check_pairs(t, [](int a, int b) { return a < b; }, [](int a, int b) { return a < b; });
}

std::optional<std::string> validate_flagged_increasing(const Tableau& t) {
    if (auto e = validate_increasing(t)) return e;
    for (int r = 1; r <= t.num_rows(); ++r)
        for (int c = t.row_begin(r); c <= t.row_end(r); ++c)
            if (t.at(r, c) > r - 1) return "flag bound fails at " + where(r, c);
    return std::nullopt;
}

std::vector<int> weight(const SetValuedTableau& t, int m) {
    std::vector<int> wt(std::max(m, max_entry(t)), 0);
    for (const auto& row : t.rows)
        for (const auto& cell : row)
            for (int a : cell) ++wt[a - 1];
    return wt;
}

std::vector<int> weight(const Tableau& t, int m) {
    std::vector<int> wt(std::max(m, max_entry(t)), 0);
    for (const auto& row : t.rows)
        for (int a : row) ++wt[a - 1];
    return wt;
}

int excess(const SetValuedTableau& t) {
    int letters = 0;
    for (const auto& row : t.rows)
        for (const auto& cell : row) letters += static_cast<int>(cell.size());
    return letters - static_cast<int>(t.cell_count());
}

int max_entry(const SetValuedTableau& t) {
    int mx = 0;
    for (const auto& row : t.rows)
        for (const auto& cell : row)
            if (!cell.empty()) mx = std::max(mx, cell.back());
    return mx;
}

int max_entry(const Tableau& t) {
    int mx = 0;
    for (const auto& row : t.rows)
        for (int a : row) mx = std::max(mx, a);
    return mx;
}

SetValuedTableau to_set_valued(const Tableau& t) {
    SetValuedTableau s;
    s.inner = t.inner;
    for (const auto& row : t.rows) {
        s.rows.emplace_back();
        for (int a : row) s.rows.back().push_back({a});
    }
    return s;
}

Tableau to_single_valued(const SetValuedTableau& t) {
    Tableau s;
    s.inner = t.inner;
    for (const auto& row : t.rows) {
        s.rows.emplace_back();
        for (const auto& cell : row) {
            if (cell.size() != 1) throw ValidationError("cell is not a singleton");
            s.rows.back().push_back(cell.front());
        }
    }
    return s;
}

HeckeWord row_word(const Tableau& p, int n) {
    std::vector<int> letters;
    for (int r = p.num_rows(); r >= 1; --r)
        letters.insert(letters.end(), p.rows[r - 1].begin(), p.rows[r - 1].end());
    return HeckeWord(letters, n > 0 ? n : inferred_rank(letters));
}

Tableau transpose(const Tableau& t) {
    for (int x : t.inner)
        if (x) throw std::invalid_argument("transpose needs a straight shape");
    Tableau out;
    int cols = t.num_rows() ? t.row_end(1) : 0;
    for (int c = 1; c <= cols; ++c) {
        std::vector<int> row;
        for (int r = 1; r <= t.num_rows() && t.has(r, c); ++r) row.push_back(t.at(r, c));
        out.rows.push_back(row);
    }
    out.inner.assign(out.rows.size(), 0);
    return out;
}

Tableau t_mu(const Partition& mu) {
    if (!is_partition(mu)) throw ValidationError("not a partition");
    std::vector<std::vector<int>> rows;
    Partition q = trim(mu);
    for (std::size_t r = 0; r < q.size(); ++r) rows.emplace_back(q[r], static_cast<int>(r) + 1);
    return tableau_from_rows(rows);
}

namespace {

template <class E, class Fmt>
std::string render(const SkewTableau<E>& t, Fmt fmt) {
    std::vector<std::vector<std::string>> grid;
    std::size_t width = 1;
    for (int r = t.num_rows(); r >= 1; --r) {
        std::vector<std::string> line(t.inner[r - 1], ".");
        for (const E& e : t.rows[r - 1]) line.push_back(fmt(e));
        for (const auto& s : line) width = std::max(width, s.size());
        grid.push_back(line);
    }
    std::string out;
    for (const auto& line : grid) {
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (k) out += ' ';
            out += line[k] + std::string(width - line[k].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

}  // namespace

std::string format_tableau(const Tableau& t) {
    return render(t, [](int a) { return std::to_string(a); });
}

std::string format_tableau(const SetValuedTableau& t) {
    return render(t, [](const std::vector<int>& s) {
        if (s.size() == 1) return std::to_string(s.front());
        std::string x = "{";
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (k) x += ',';
            x += std::to_string(s[k]);
        }
        return x + "}";
    });
}

}  // namespace hk
