#pragma once

// Skew tableaux in French notation: row 1 is the bottom row, columns count from the left.

#include <optional>
#include <string>
#include <vector>

#include "hk/hecke.hpp"

namespace hk {

using Partition = std::vector<int>;

bool is_partition(const Partition& p);
Partition trim(Partition p);  // drop trailing zero parts
int size(const Partition& p);

struct Cell {
    int row = 0;  // from the bottom, 1-based
    int col = 0;  // from the left, 1-based
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

struct SkewShape {
    Partition outer;  // lambda
    Partition inner;  // mu, padded with zeros to the length of outer

    SkewShape() = default;
    SkewShape(Partition outer, Partition inner = {});

    int rows() const { return static_cast<int>(outer.size()); }
    int size() const;
    bool contains(int row, int col) const;
    std::vector<Cell> cells() const;  // bottom row first, left to right
    bool operator==(const SkewShape&) const = default;
};

// "(4,4,1,1)/(2,2)" or "4 4 1 1 / 2 2" or "(2,1)".
SkewShape parse_shape(const std::string& text);
std::string format_partition(const Partition& p);
std::string format_shape(const SkewShape& s);

// Filling of a skew shape; rows[r-1] holds row r from column inner[r-1]+1 on.
template <class Entry>
struct SkewTableau {
    std::vector<int> inner;
    std::vector<std::vector<Entry>> rows;

    SkewTableau() = default;
    explicit SkewTableau(const SkewShape& shape) {
        for (int r = 0; r < shape.rows(); ++r) {
            inner.push_back(shape.inner[r]);
            rows.emplace_back(shape.outer[r] - shape.inner[r]);
        }
    }

    int num_rows() const { return static_cast<int>(rows.size()); }
    int row_begin(int r) const { return inner[r - 1] + 1; }
    int row_end(int r) const { return inner[r - 1] + static_cast<int>(rows[r - 1].size()); }
    bool has(int r, int c) const {
        return r >= 1 && r <= num_rows() && c >= row_begin(r) && c <= row_end(r);
    }
    const Entry& at(int r, int c) const { return rows[r - 1][c - inner[r - 1] - 1]; }
    Entry& at(int r, int c) { return rows[r - 1][c - inner[r - 1] - 1]; }

    SkewShape shape() const {
        Partition out, in;
        for (int r = 1; r <= num_rows(); ++r) {
            out.push_back(row_end(r));
            in.push_back(inner[r - 1]);
        }
        return SkewShape(out, in);
    }
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= num_rows(); ++r)
            for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
        return out;
    }
    std::size_t cell_count() const {
        std::size_t k = 0;
        for (const auto& row : rows) k += row.size();
        return k;
    }
    // Removes trailing rows of length zero so that rows() equals the length of the outer shape.
    void normalize() {
        while (!rows.empty() && row_end(num_rows()) == 0) {
            rows.pop_back();
            inner.pop_back();
        }
    }

    bool operator==(const SkewTableau&) const = default;
    auto operator<=>(const SkewTableau&) const = default;
};

using Tableau = SkewTableau<int>;
// Cells are ascending sets. The Hecke recording tableau reuses this type with multiset cells.
using SetValuedTableau = SkewTableau<std::vector<int>>;

// Build from rows listed bottom-up, straight shape.
Tableau tableau_from_rows(const std::vector<std::vector<int>>& rows);
SetValuedTableau set_tableau_from_rows(const std::vector<std::vector<std::vector<int>>>& rows,
                                       const Partition& inner = {});

// nullopt means valid; otherwise a message naming the first offending cells.
std::optional<std::string> validate_svt(const SetValuedTableau& t);
std::optional<std::string> validate_semistandard(const Tableau& t);
std::optional<std::string> validate_row_increasing(const Tableau& t);
std::optional<std::string> validate_increasing(const Tableau& t);
std::optional<std::string> validate_flagged_increasing(const Tableau& t);

std::vector<int> weight(const SetValuedTableau& t, int m = 0);
std::vector<int> weight(const Tableau& t, int m = 0);
int excess(const SetValuedTableau& t);
int max_entry(const SetValuedTableau& t);
int max_entry(const Tableau& t);

SetValuedTableau to_set_valued(const Tableau& t);
// Requires every cell to be a singleton.
Tableau to_single_valued(const SetValuedTableau& t);

// Rows top to bottom, each left to right.
HeckeWord row_word(const Tableau& p, int n = 0);
Tableau transpose(const Tableau& t);  // straight shapes only
Tableau t_mu(const Partition& mu);

// Text layout mirroring the printed diagrams: top row first, inner cells shown as '.'.
std::string format_tableau(const Tableau& t);
std::string format_tableau(const SetValuedTableau& t);

}  // namespace hk
