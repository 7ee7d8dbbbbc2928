#pragma once

// Stable Grothendieck polynomials and their beta-graded Schur expansions.

#include <cstdint>
#include <map>
#include <string>

#include "hk/factorization.hpp"
#include "hk/polynomial.hpp"
#include "hk/tableau.hpp"

namespace hk {

// Coefficients of beta^d s_mu. Partitions have at most `vars` rows.
struct BetaSchurSeries {
    int vars = 0;
    int max_beta = 0;
    std::map<std::pair<int, Partition>, std::int64_t> coeffs;

    std::int64_t at(int d, const Partition& mu) const;
    bool operator==(const BetaSchurSeries&) const = default;
};

// Sum over decreasing factorizations of w into m factors of beta^excess x^weight.
BetaPolynomial grothendieck_poly(const HeckeElement& w, int m, int max_beta);

// Peels the lexicographically largest monomial of each beta slice. Throws ValidationError
// if p is not symmetric.
BetaSchurSeries schur_expand(const BetaPolynomial& p, int max_beta);

// Counts lowest weight elements of the star crystal by (excess, sorted weight).
BetaSchurSeries schur_coeffs_via_crystal(const HeckeElement& w, int m, int max_beta);

// Sum over SVT of the shape with entries at most m of beta^ex x^wt.
BetaPolynomial svt_generating_function(const SkewShape& shape, int m, int max_excess);

// Highest weight SVT (annihilated by every e_i) by (excess, weight).
BetaSchurSeries svt_highest_weight_counts(const SkewShape& shape, int m, int max_excess);

// The permutation whose decreasing factorizations are the residues of SVT(lambda).
HeckeElement grassmannian_element(const Partition& lambda);

std::string format_series(const BetaSchurSeries& s);
std::string format_series_csv(const BetaSchurSeries& s);

}  // namespace hk
