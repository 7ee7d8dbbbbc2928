#pragma once

// Crystal operators on skew semistandard set-valued tableaux (column signature rule).

#include <optional>
#include <vector>

#include "hk/tableau.hpp"

namespace hk {

struct ColumnSign {
    int col = 0;
    char sign = ' ';  // '-' has i but not i+1, '+' has i+1 but not i
    bool paired = false;
};

// Non-blank columns left to right, with bracketing of each '+' against a later '-'.
std::vector<ColumnSign> svt_signature(const SetValuedTableau& t, int i);

std::optional<SetValuedTableau> f_svt(const SetValuedTableau& t, int i);
std::optional<SetValuedTableau> e_svt(const SetValuedTableau& t, int i);
int phi_svt(const SetValuedTableau& t, int i);
int epsilon_svt(const SetValuedTableau& t, int i);

// Classical operators on single-valued tableaux, as the singleton case of the above.
std::optional<Tableau> f_ssyt(const Tableau& t, int i);
std::optional<Tableau> e_ssyt(const Tableau& t, int i);

}  // namespace hk
