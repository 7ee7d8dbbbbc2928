#pragma once

// The residue map from set-valued tableaux to decreasing factorizations, and its inverse.

#include "hk/factorization.hpp"
#include "hk/tableau.hpp"

namespace hk {

// Content of cell (row, col) in a shape with `rows` rows: rows + col - row.
inline int content(int rows, int row, int col) { return rows + col - row; }

// h^k lists the contents of the cells containing k. m defaults to the largest entry,
// n to rows(lambda) + lambda_1, which bounds every content.
DecreasingFactorization res(const SetValuedTableau& t, int m = 0, int n = 0);

// Canonical preimage: fewest rows, then lexicographically smallest inner shape.
SetValuedTableau res_inv(const DecreasingFactorization& f);

// The unique preimage of the given shape.
SetValuedTableau res_inv_shaped(const DecreasingFactorization& f, const SkewShape& shape);

}  // namespace hk
