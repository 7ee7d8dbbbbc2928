#pragma once

// Uncrowding of skew set-valued tableaux and the shifted star insertion it is compared with.

#include "hk/factorization.hpp"
#include "hk/insertion.hpp"
#include "hk/tableau.hpp"

namespace hk {

struct UncrowdStep {
    SetValuedTableau t;
    Cell added;      // cell C created at the end of the bumping path
    int source_row;  // row of the multicell B the letter was taken from
};

// Removes the largest letter sitting in a multicell of the topmost row that has one,
// and row-bumps it into the rows above.
UncrowdStep uncrowd_step(const SetValuedTableau& t);

struct Uncrowding {
    Tableau p;  // semistandard, shape nu/mu
    Tableau q;  // flagged increasing, shape nu/lambda
};

Uncrowding uncrowd(const SetValuedTableau& t);

// star insertion of f followed by res(T_mu), with T_mu removed again. mu comes from the
// canonical preimage of f; the shaped variant takes the shape lambda/mu explicitly.
StarInsertion star_tilde(const DecreasingFactorization& f);
StarInsertion star_tilde_shaped(const DecreasingFactorization& f, const SkewShape& shape);

}  // namespace hk
