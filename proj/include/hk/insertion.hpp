#pragma once

// Hecke row insertion, the star insertion with its inverse, and micro-move equivalence.

#include <set>
#include <utility>
#include <vector>

#include "hk/factorization.hpp"
#include "hk/tableau.hpp"

namespace hk {

using Path = std::vector<Cell>;

struct HeckeInsertion {
    Tableau p;              // increasing
    SetValuedTableau q;     // cells are multisets of factor labels
    std::vector<Path> trace;
};

struct StarInsertion {
    Tableau p;  // rows strictly increase, columns weakly increase
    Tableau q;  // semistandard
    std::vector<Path> trace;
    bool operator==(const StarInsertion& o) const { return p == o.p && q == o.q; }
};

// Both read the biword from right to left.
HeckeInsertion hecke_insert(const HeckeBiword& b);
StarInsertion star_insert(const HeckeBiword& b, int n = 0);
StarInsertion star_insert(const DecreasingFactorization& f);

// Inserts the letters in the given order; only the insertion tableau is kept.
Tableau star_insertion_tableau(const HeckeWord& insertion_order);

// The path ends at the cell added to the shape.
std::pair<Tableau, Path> star_insert_one(const Tableau& p, int x, int n = 0);

// Undoes star_insert_one whose new cell is `corner`; returns the restored tableau and letter.
std::pair<Tableau, int> reverse_bump(const Tableau& p, Cell corner);

HeckeBiword star_inverse(const Tableau& p, const Tableau& q, int n = 0);

// Closure of a word under the Knuth, weak Knuth and Hecke moves on consecutive triples.
std::set<std::vector<int>> micro_class(const HeckeWord& w);
bool micro_equivalent(const HeckeWord& a, const HeckeWord& b);

}  // namespace hk
