#pragma once

// Bounded instance spaces: partitions, skew shapes, fillings, factorizations.

#include <functional>
#include <vector>

#include "hk/factorization.hpp"
#include "hk/tableau.hpp"

namespace hk {

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_in_box(int rows, int cols);

// Skew shapes lambda/mu with 1 <= |lambda/mu| <= max_cells and lambda in a max_cells square.
// Shapes are taken up to translation: the bottom row and the first column are occupied.
std::vector<SkewShape> skew_shapes(int max_cells);

void for_each_ssyt(const SkewShape& shape, int m, const std::function<void(const Tableau&)>& visit);
void for_each_svt(const SkewShape& shape, int m, int max_excess,
                  const std::function<void(const SetValuedTableau&)>& visit);
std::vector<Tableau> all_ssyt(const SkewShape& shape, int m);
std::vector<SetValuedTableau> all_svt(const SkewShape& shape, int m, int max_excess);

// Fillings with strictly increasing rows and weakly increasing columns, entries in [1, max_entry].
void for_each_row_strict(const SkewShape& shape, int max_entry, const std::function<void(const Tableau&)>& visit);

std::vector<HeckeElement> fully_commutative_elements(int n);
std::vector<DecreasingFactorization> fc_factorizations(int n, int m, int max_letters);

// Every word over [1, n-1] of length at most max_len whose evaluation is fully commutative.
std::vector<HeckeWord> fc_words(int n, int max_len);

}  // namespace hk
