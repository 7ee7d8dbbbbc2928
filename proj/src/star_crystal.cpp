#include "hk/star_crystal.hpp"

#include <algorithm>

#include "hk/mutation.hpp"

namespace hk {

namespace {

void require_index(const DecreasingFactorization& f, int i) {
    if (i < 1 || i >= f.m())
        throw std::invalid_argument("crystal index " + std::to_string(i) + " outside [1," +
                                    std::to_string(f.m() - 1) + "]");
}

void require_fc(const DecreasingFactorization& f) {
    if (!is_fully_commutative(f))
        throw DomainError("factorization " + format_factorization(f) + " is not fully commutative");
}

bool has(const Factor& fac, int a) { return std::find(fac.begin(), fac.end(), a) != fac.end(); }

void insert_letter(Factor& fac, int a) {
    fac.insert(std::upper_bound(fac.begin(), fac.end(), a, std::greater<int>()), a);
}

void erase_letter(Factor& fac, int a) { fac.erase(std::find(fac.begin(), fac.end(), a)); }

StarPairing pair_factors(const Factor& upper, const Factor& lower) {
    StarPairing p;
    std::vector<bool> used(lower.size(), false);
    for (int b : upper) {  // upper is stored decreasing
        int pick = -1;
        for (int k = static_cast<int>(lower.size()) - 1; k >= 0; --k)  // smallest first
            if (!used[k] && lower[k] >= b) {
                pick = k;
                break;
            }
        if (pick < 0) {
            p.unpaired_upper.push_back(b);
        } else {
            used[pick] = true;
            p.pairs.emplace_back(b, lower[pick]);
        }
    }
    for (std::size_t k = 0; k < lower.size(); ++k)
        if (!used[k]) p.unpaired_lower.push_back(lower[k]);
    return p;
}

}  // namespace

StarPairing star_pairing(const DecreasingFactorization& f, int i) {
    require_index(f, i);
    require_fc(f);
    return pair_factors(f.h(i + 1), f.h(i));
}

std::optional<DecreasingFactorization> f_star(const DecreasingFactorization& f, int i) {
    StarPairing p = star_pairing(f, i);
    if (p.unpaired_lower.empty()) return std::nullopt;
    const int x = p.unpaired_lower.front();
    DecreasingFactorization g = f;
    Factor& up = g.h(i + 1);
    Factor& lo = g.h(i);
    const Mutation mut = active_mutation();
    if (has(lo, x + 1) && has(up, x + 1) && mut != Mutation::star_f_case1) {
        erase_letter(lo, x + 1);
        insert_letter(up, x);
    } else {
        if (mut == Mutation::star_f_case2) return std::nullopt;
        erase_letter(lo, x);
        insert_letter(up, x);
    }
    return g;
}

std::optional<DecreasingFactorization> e_star(const DecreasingFactorization& f, int i) {
    StarPairing p = star_pairing(f, i);
    if (p.unpaired_upper.empty()) return std::nullopt;
    const int y = p.unpaired_upper.back();
    DecreasingFactorization g = f;
    Factor& up = g.h(i + 1);
    Factor& lo = g.h(i);
    const Mutation mut = active_mutation();
    if (has(lo, y - 1) && has(up, y - 1) && mut != Mutation::star_e_case1) {
        erase_letter(up, y - 1);
        insert_letter(lo, y);
    } else {
        if (mut == Mutation::star_e_case2) return std::nullopt;
        erase_letter(up, y);
        insert_letter(lo, y);
    }
    return g;
}

int phi_star(const DecreasingFactorization& f, int i) {
    return static_cast<int>(star_pairing(f, i).unpaired_lower.size());
}

int epsilon_star(const DecreasingFactorization& f, int i) {
    return static_cast<int>(star_pairing(f, i).unpaired_upper.size());
}

bool star_side_conditions_hold(const DecreasingFactorization& f, int i) {
    StarPairing p = star_pairing(f, i);
    if (p.unpaired_lower.empty()) return true;
    const int x = p.unpaired_lower.front();
    const Factor& up = f.h(i + 1);
    const Factor& lo = f.h(i);
    if (has(up, x - 1)) return false;
    const bool in_up = has(up, x + 1), in_lo = has(lo, x + 1);
    const int holds = (in_up && in_lo) + (!in_up && !in_lo) + (in_up && !in_lo);
    return holds == 1;
}

}  // namespace hk
