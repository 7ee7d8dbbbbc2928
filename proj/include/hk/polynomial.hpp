#pragma once

// Sparse polynomials in x_1..x_m with an extra beta grading and exact integer coefficients.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hk/tableau.hpp"

namespace hk {

using Exponent = std::vector<int>;  // length equals the number of variables

class BetaPolynomial {
public:
    using Key = std::pair<int, Exponent>;  // (beta degree, exponent of x)

    BetaPolynomial() = default;
    explicit BetaPolynomial(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    const std::map<Key, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int max_beta() const;  // -1 for the zero polynomial

    void add(int beta, const Exponent& x, std::int64_t c);
    BetaPolynomial& operator+=(const BetaPolynomial& o);
    BetaPolynomial& operator-=(const BetaPolynomial& o);
    BetaPolynomial scaled(std::int64_t c, int beta_shift = 0) const;

    // The terms of beta degree d, moved to degree 0.
    BetaPolynomial slice(int d) const;

    bool operator==(const BetaPolynomial&) const = default;

private:
    int vars_ = 0;
    std::map<Key, std::int64_t> terms_;
};

// nullopt if every beta slice is invariant under each adjacent transposition of variables.
std::optional<std::string> symmetry_defect(const BetaPolynomial& p);

// e.g. "x1^2*x2 + 2*b*x1*x2^2"
std::string format_polynomial(const BetaPolynomial& p);

// Generating function of SSYT(mu) with entries at most m; zero when mu has more than m rows.
BetaPolynomial schur_poly(const Partition& mu, int m);

}  // namespace hk
