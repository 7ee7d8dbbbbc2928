#pragma once

// Decreasing factorizations h^m ... h^1 and decreasing Hecke biwords.

#include <functional>
#include <string>
#include <vector>

#include "hk/hecke.hpp"

namespace hk {

using Factor = std::vector<int>;  // strictly decreasing letters

class DecreasingFactorization {
public:
    DecreasingFactorization() = default;
    // factors listed as written, leftmost (h^m) first
    DecreasingFactorization(std::vector<Factor> written, int n);
    static DecreasingFactorization empty(int m, int n);

    int m() const { return static_cast<int>(factors_.size()); }
    int n() const { return n_; }

    // h^i for 1 <= i <= m
    const Factor& h(int i) const;
    Factor& h(int i);
    const std::vector<Factor>& written() const { return factors_; }

    std::size_t letter_count() const;
    // h^m h^{m-1} ... h^1 read left to right
    HeckeWord flatten() const;

    bool operator==(const DecreasingFactorization&) const = default;
    auto operator<=>(const DecreasingFactorization&) const = default;

private:
    std::vector<Factor> factors_;
    int n_ = 2;
};

struct HeckeBiword {
    std::vector<int> top;     // factor indices, weakly decreasing
    std::vector<int> bottom;  // letters
    bool operator==(const HeckeBiword&) const = default;
};

// (len h^1, ..., len h^m)
std::vector<int> weight(const DecreasingFactorization& f);
int excess(const DecreasingFactorization& f);
bool is_fully_commutative(const DecreasingFactorization& f);

HeckeBiword to_biword(const DecreasingFactorization& f);
// m defaults to the largest top label; n to the inferred rank.
DecreasingFactorization from_biword(const HeckeBiword& b, int m = 0, int n = 0);
void validate_biword(const HeckeBiword& b);

// Letters in the order they are inserted (biword read right to left).
HeckeWord insertion_word(const DecreasingFactorization& f);

// All f with m factors, eval(flatten f) = w, excess(f) <= max_excess.
void for_each_factorization(const HeckeElement& w, int m, int max_excess,
                            const std::function<void(const DecreasingFactorization&)>& visit);
std::vector<DecreasingFactorization> enumerate(const HeckeElement& w, int m, int max_excess);

// Every decreasing factorization with m factors over [n-1] with at most max_letters letters.
std::vector<DecreasingFactorization> all_factorizations(int n, int m, int max_letters);

// "(7532)(621)(6)"; "()" and "(\;)" denote empty factors.
DecreasingFactorization parse_factorization(const std::string& text, int n = 0);
std::string format_factorization(const DecreasingFactorization& f);

}  // namespace hk
