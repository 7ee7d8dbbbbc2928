#pragma once

// A crystal on all decreasing factorizations over the alphabet {1, 2}, fully commutative or not.

#include <optional>
#include <utility>
#include <vector>

#include "hk/factorization.hpp"

namespace hk {

enum class Factor3 { empty, one, two, two_one };

// h^1 first. Throws std::invalid_argument unless n = 3 and every factor is (), (1), (2) or (21).
std::vector<Factor3> factors3(const DecreasingFactorization& f);
DecreasingFactorization from_factors3(const std::vector<Factor3>& h);

struct Letter3 {
    int factor = 0;  // k of h^k
    int letter = 0;
    bool operator==(const Letter3&) const = default;
};

struct PairCounter {
    std::vector<int> p;                             // p[k] = p([1,k]) for 0 <= k <= m
    std::vector<std::pair<Letter3, Letter3>> pairs;  // (letter of h^k, partner in h^j), j <= k
    std::vector<Letter3> unpaired;
};

// Processes h^1, h^2, ... in turn; letters once paired stay paired.
PairCounter pairing3(const DecreasingFactorization& f);

// f_i and e_i act on h^{i+1} h^i according to the parity of p([1,i-1]).
std::optional<DecreasingFactorization> f3(const DecreasingFactorization& f, int i);
std::optional<DecreasingFactorization> e3(const DecreasingFactorization& f, int i);

}  // namespace hk
