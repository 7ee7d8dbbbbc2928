#include "hk/hecke.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hk {

HeckeWord::HeckeWord(std::vector<int> ls, int rank) : letters(std::move(ls)), n(rank) {
    if (n < 1) throw ValidationError("alphabet bound must be positive");
    for (int a : letters)
        if (a < 1 || a > n - 1)
            throw ValidationError("letter " + std::to_string(a) + " outside [1," +
                                  std::to_string(n - 1) + "]");
}

int inferred_rank(const std::vector<int>& letters) {
    int mx = 0;
    for (int a : letters) mx = std::max(mx, a);
    return std::max(2, mx + 1);
}

HeckeWord reversed(const HeckeWord& w) {
    HeckeWord r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

HeckeElement::HeckeElement(std::vector<int> p) : perm(std::move(p)) {
    std::vector<int> seen(perm.size() + 1, 0);
    for (int v : perm) {
        if (v < 1 || v > n() || seen[v]) throw ValidationError("not a permutation");
        seen[v] = 1;
    }
}

HeckeElement HeckeElement::identity(int n) {
    HeckeElement e;
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 1);
    return e;
}

int HeckeElement::length() const {
    int inv = 0;
    for (int a = 0; a < n(); ++a)
        for (int b = a + 1; b < n(); ++b)
            if (perm[a] > perm[b]) ++inv;
    return inv;
}

HeckeElement demazure_apply(const HeckeElement& e, int i) {
    if (i < 1 || i > e.n() - 1)
        throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
    HeckeElement r = e;
    if (r.perm[i - 1] < r.perm[i]) std::swap(r.perm[i - 1], r.perm[i]);
    return r;
}

HeckeElement eval(const HeckeWord& w) {
    HeckeElement e = HeckeElement::identity(w.n);
    for (int a : w.letters)
        if (e.perm[a - 1] < e.perm[a]) std::swap(e.perm[a - 1], e.perm[a]);
    return e;
}

bool is_fully_commutative(const HeckeElement& e) {
    // 321-avoidance: no entry has both a larger entry before it and a smaller one after it.
    const int n = e.n();
    int prefix_max = 0;
    std::vector<int> suffix_min(n + 1, n + 1);
    for (int k = n - 1; k >= 0; --k) suffix_min[k] = std::min(suffix_min[k + 1], e.perm[k]);
    for (int k = 0; k < n; ++k) {
        if (prefix_max > e.perm[k] && suffix_min[k + 1] < e.perm[k]) return false;
        prefix_max = std::max(prefix_max, e.perm[k]);
    }
    return true;
}

bool is_fully_commutative(const HeckeWord& w) { return is_fully_commutative(eval(w)); }

bool equivalent(const HeckeWord& a, const HeckeWord& b) {
    if (a.n != b.n) throw std::invalid_argument("alphabet bounds differ");
    return eval(a) == eval(b);
}

bool bruhat_leq(const HeckeElement& u, const HeckeElement& v) {
    const int n = u.n();
    if (v.n() != n) throw std::invalid_argument("rank mismatch");
    for (int k = 1; k < n; ++k) {
        std::vector<int> a(u.perm.begin(), u.perm.begin() + k);
        std::vector<int> b(v.perm.begin(), v.perm.begin() + k);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (int t = 0; t < k; ++t)
            if (a[t] > b[t]) return false;
    }
    return true;
}

HeckeWord reduced_word(const HeckeElement& e) {
    // Strip right descents; the collected letters read backwards form a reduced word.
    std::vector<int> rev;
    std::vector<int> p = e.perm;
    for (bool found = true; found;) {
        found = false;
        for (int i = 1; i < e.n(); ++i)
            if (p[i - 1] > p[i]) {
                std::swap(p[i - 1], p[i]);
                rev.push_back(i);
                found = true;
                break;
            }
    }
    std::reverse(rev.begin(), rev.end());
    return HeckeWord(rev, e.n());
}

std::vector<HeckeElement> all_permutations(int n) {
    std::vector<HeckeElement> out;
    HeckeElement e = HeckeElement::identity(n);
    do out.push_back(e);
    while (std::next_permutation(e.perm.begin(), e.perm.end()));
    return out;
}

HeckeWord parse_word(const std::string& text, int n) {
    std::vector<int> letters;
    bool separated = text.find_first_of(" ,\t") != std::string::npos;
    if (separated) {
        std::string t = text;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        std::string tok;
        while (in >> tok) {
            for (char c : tok)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ValidationError("bad word token '" + tok + "'");
            letters.push_back(std::stoi(tok));
        }
    } else {
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ValidationError(std::string("bad word character '") + c + "'");
            letters.push_back(c - '0');
        }
    }
    return HeckeWord(letters, n > 0 ? n : inferred_rank(letters));
}

std::string format_word(const HeckeWord& w) {
    bool digits = std::all_of(w.letters.begin(), w.letters.end(), [](int a) { return a < 10; });
    std::string s;
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        if (!digits && k) s += ' ';
        s += std::to_string(w.letters[k]);
    }
    return s;
}

}  // namespace hk
