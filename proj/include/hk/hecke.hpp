#pragma once

// Words in the 0-Hecke monoid and their Demazure-product canonical forms.

#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

// Malformed input: bad syntax, out-of-range letters, broken invariants.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside an operation's domain, e.g. a non fully-commutative word.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A pair of objects with no preimage under an inverse map.
struct ReconstructionError : ValidationError {
    using ValidationError::ValidationError;
};

struct HeckeWord {
    std::vector<int> letters;
    int n = 2;  // letters live in [1, n-1]

    HeckeWord() = default;
    HeckeWord(std::vector<int> letters, int n);

    std::size_t size() const { return letters.size(); }
    bool operator==(const HeckeWord&) const = default;
};

// Smallest alphabet bound that accommodates every letter (at least 2).
int inferred_rank(const std::vector<int>& letters);

HeckeWord reversed(const HeckeWord& w);

// Permutation of [n] in one-line notation, perm[k] is the image of k+1.
struct HeckeElement {
    std::vector<int> perm;

    HeckeElement() = default;
    explicit HeckeElement(std::vector<int> perm);
    static HeckeElement identity(int n);

    int n() const { return static_cast<int>(perm.size()); }
    int length() const;
    bool operator==(const HeckeElement&) const = default;
    auto operator<=>(const HeckeElement&) const = default;
};

// e * s_i: e s_i if that is longer, otherwise e.
HeckeElement demazure_apply(const HeckeElement& e, int i);

HeckeElement eval(const HeckeWord& w);

bool is_fully_commutative(const HeckeElement& e);
bool is_fully_commutative(const HeckeWord& w);

bool equivalent(const HeckeWord& a, const HeckeWord& b);

// Bruhat order via the tableau criterion.
bool bruhat_leq(const HeckeElement& u, const HeckeElement& v);

// Some reduced word of e (lexicographically first descent at each step).
HeckeWord reduced_word(const HeckeElement& e);

std::vector<HeckeElement> all_permutations(int n);

// "1 3 2 4 2", "1,3,2" or a run of digits "13242".
HeckeWord parse_word(const std::string& text, int n = 0);
std::string format_word(const HeckeWord& w);

}  // namespace hk
