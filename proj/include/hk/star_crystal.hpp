#pragma once

// The crystal operators e*_i, f*_i on fully-commutative decreasing factorizations.

#include <optional>
#include <vector>

#include "hk/factorization.hpp"

namespace hk {

struct StarPairing {
    std::vector<std::pair<int, int>> pairs;  // (b in h^{i+1}, a in h^i), a >= b
    std::vector<int> unpaired_upper;         // letters of h^{i+1}, decreasing
    std::vector<int> unpaired_lower;         // letters of h^i, decreasing
};

// Each b of h^{i+1}, largest first, takes the smallest free a >= b in h^i.
StarPairing star_pairing(const DecreasingFactorization& f, int i);

std::optional<DecreasingFactorization> f_star(const DecreasingFactorization& f, int i);
std::optional<DecreasingFactorization> e_star(const DecreasingFactorization& f, int i);

int phi_star(const DecreasingFactorization& f, int i);
int epsilon_star(const DecreasingFactorization& f, int i);

// Side conditions on the largest unpaired letter x of h^i: x-1 is not in h^{i+1}, and
// x+1 lies in both factors, in neither, or only in h^{i+1}. True when h^i is fully paired.
bool star_side_conditions_hold(const DecreasingFactorization& f, int i);

}  // namespace hk
