#include "hk/factorization.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <sstream>

namespace hk {

DecreasingFactorization::DecreasingFactorization(std::vector<Factor> written, int n)
    : factors_(std::move(written)), n_(n) {
    if (n_ < 1) throw ValidationError("alphabet bound must be positive");
    for (const Factor& fac : factors_) {
        for (std::size_t k = 0; k < fac.size(); ++k) {
            if (fac[k] < 1 || fac[k] > n_ - 1)
                throw ValidationError("letter " + std::to_string(fac[k]) + " outside [1," +
                                      std::to_string(n_ - 1) + "]");
            if (k && fac[k - 1] <= fac[k]) throw ValidationError("factor is not strictly decreasing");
        }
    }
}

DecreasingFactorization DecreasingFactorization::empty(int m, int n) {
    return DecreasingFactorization(std::vector<Factor>(m), n);
}

const Factor& DecreasingFactorization::h(int i) const {
    if (i < 1 || i > m()) throw std::out_of_range("factor index " + std::to_string(i));
    return factors_[m() - i];
}

Factor& DecreasingFactorization::h(int i) {
    if (i < 1 || i > m()) throw std::out_of_range("factor index " + std::to_string(i));
    return factors_[m() - i];
}

std::size_t DecreasingFactorization::letter_count() const {
    std::size_t c = 0;
    for (const Factor& fac : factors_) c += fac.size();
    return c;
}

HeckeWord DecreasingFactorization::flatten() const {
    HeckeWord w;
    w.n = n_;
    for (const Factor& fac : factors_) w.letters.insert(w.letters.end(), fac.begin(), fac.end());
    return w;
}

std::vector<int> weight(const DecreasingFactorization& f) {
    std::vector<int> wt(f.m());
    for (int i = 1; i <= f.m(); ++i) wt[i - 1] = static_cast<int>(f.h(i).size());
    return wt;
}

int excess(const DecreasingFactorization& f) {
    return static_cast<int>(f.letter_count()) - eval(f.flatten()).length();
}

bool is_fully_commutative(const DecreasingFactorization& f) {
    return is_fully_commutative(eval(f.flatten()));
}

HeckeBiword to_biword(const DecreasingFactorization& f) {
    HeckeBiword b;
    for (int i = f.m(); i >= 1; --i)
        for (int a : f.h(i)) {
            b.top.push_back(i);
            b.bottom.push_back(a);
        }
    return b;
}

void validate_biword(const HeckeBiword& b) {
    if (b.top.size() != b.bottom.size()) throw ValidationError("biword rows differ in length");
    for (std::size_t k = 0; k < b.top.size(); ++k) {
        if (b.top[k] < 1 || b.bottom[k] < 1) throw ValidationError("biword entries must be positive");
        if (k == 0) continue;
        if (b.top[k - 1] < b.top[k]) throw ValidationError("biword top row is not weakly decreasing");
        if (b.top[k - 1] == b.top[k] && b.bottom[k - 1] <= b.bottom[k])
            throw ValidationError("biword bottom row is not strictly decreasing within a block");
    }
}

DecreasingFactorization from_biword(const HeckeBiword& b, int m, int n) {
    validate_biword(b);
    int top_max = b.top.empty() ? 0 : b.top.front();
    if (m == 0) m = top_max;
    if (m < top_max) throw ValidationError("biword label exceeds factor count");
    if (n == 0) n = inferred_rank(b.bottom);
    std::vector<Factor> written(m);
    for (std::size_t k = 0; k < b.top.size(); ++k) written[m - b.top[k]].push_back(b.bottom[k]);
    return DecreasingFactorization(written, n);
}

HeckeWord insertion_word(const DecreasingFactorization& f) { return reversed(f.flatten()); }

namespace {

// Decreasing factors as bitmask-indexed letter lists, largest letter first.
std::vector<Factor> all_factors(int n) {
    std::vector<Factor> out;
    const int r = n - 1;
    for (int mask = 0; mask < (1 << r); ++mask) {
        Factor fac;
        for (int a = r; a >= 1; --a)
            if (mask >> (a - 1) & 1) fac.push_back(a);
        out.push_back(fac);
    }
    return out;
}

HeckeElement apply_factor(HeckeElement u, const Factor& fac) {
    for (int a : fac)
        if (u.perm[a - 1] < u.perm[a]) std::swap(u.perm[a - 1], u.perm[a]);
    return u;
}

struct Enumerator {
    const HeckeElement& w;
    int max_excess;
    std::vector<Factor> factors;
    std::map<std::pair<int, std::vector<int>>, int> memo;
    static constexpr int kInf = INT_MAX / 4;

    // Least extra excess needed to reach w from u with k more factors.
    int min_extra(int k, const HeckeElement& u) {
        if (k == 0) return u == w ? 0 : kInf;
        auto key = std::make_pair(k, u.perm);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int best = kInf;
        const int lu = u.length();
        for (const Factor& fac : factors) {
            HeckeElement v = apply_factor(u, fac);
            if (!bruhat_leq(v, w)) continue;
            int step = static_cast<int>(fac.size()) - (v.length() - lu);
            int rest = min_extra(k - 1, v);
            if (rest < kInf) best = std::min(best, step + rest);
        }
        memo.emplace(std::move(key), best);
        return best;
    }

    void walk(int k, const HeckeElement& u, int used, std::vector<Factor>& acc,
              const std::function<void(const DecreasingFactorization&)>& visit) {
        if (k == 0) {
            if (u == w) visit(DecreasingFactorization(acc, w.n()));
            return;
        }
        const int lu = u.length();
        for (const Factor& fac : factors) {
            HeckeElement v = apply_factor(u, fac);
            if (!bruhat_leq(v, w)) continue;
            int now = used + static_cast<int>(fac.size()) - (v.length() - lu);
            int rest = min_extra(k - 1, v);
            if (rest >= kInf || now + rest > max_excess) continue;
            acc.push_back(fac);
            walk(k - 1, v, now, acc, visit);
            acc.pop_back();
        }
    }
};

}  // namespace

void for_each_factorization(const HeckeElement& w, int m, int max_excess,
                            const std::function<void(const DecreasingFactorization&)>& visit) {
    if (m < 1) throw std::invalid_argument("factor count must be positive");
    if (max_excess < 0) throw std::invalid_argument("excess bound must be nonnegative");
    Enumerator en{w, max_excess, all_factors(w.n()), {}};
    std::vector<Factor> acc;
    en.walk(m, HeckeElement::identity(w.n()), 0, acc, visit);
}

std::vector<DecreasingFactorization> enumerate(const HeckeElement& w, int m, int max_excess) {
    std::vector<DecreasingFactorization> out;
    for_each_factorization(w, m, max_excess,
                           [&](const DecreasingFactorization& f) { out.push_back(f); });
    return out;
}

std::vector<DecreasingFactorization> all_factorizations(int n, int m, int max_letters) {
    const std::vector<Factor> factors = all_factors(n);
    std::vector<DecreasingFactorization> out;
    std::vector<Factor> acc;
    std::function<void(int, int)> rec = [&](int left, int budget) {
        if (left == 0) {
            out.emplace_back(acc, n);
            return;
        }
        for (const Factor& fac : factors) {
            if (static_cast<int>(fac.size()) > budget) continue;
            acc.push_back(fac);
            rec(left - 1, budget - static_cast<int>(fac.size()));
            acc.pop_back();
        }
    };
    rec(m, max_letters);
    return out;
}

DecreasingFactorization parse_factorization(const std::string& text, int n) {
    std::vector<Factor> written;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos == text.size()) throw ValidationError("empty factorization text");
    while (pos < text.size()) {
        if (text[pos] != '(') throw ValidationError("expected '(' at offset " + std::to_string(pos));
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) throw ValidationError("unterminated factor");
        std::string body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        skip_space();
        std::string trimmed;
        for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        Factor fac;
        if (!trimmed.empty() && trimmed != "\\;") {
            std::size_t first = body.find_first_not_of(" \t");
            std::size_t last = body.find_last_not_of(" \t");
            std::string core = body.substr(first, last - first + 1);
            if (core.find_first_of(" \t,") != std::string::npos) {
                std::string t = body;
                std::replace(t.begin(), t.end(), ',', ' ');
                std::istringstream in(t);
                std::string tok;
                while (in >> tok) {
                    for (char c : tok)
                        if (!std::isdigit(static_cast<unsigned char>(c)))
                            throw ValidationError("bad letter '" + tok + "'");
                    fac.push_back(std::stoi(tok));
                }
            } else {
                for (char c : trimmed) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw ValidationError(std::string("bad letter '") + c + "'");
                    fac.push_back(c - '0');
                }
            }
        }
        written.push_back(fac);
    }
    if (n == 0) {
        std::vector<int> all;
        for (const Factor& fac : written) all.insert(all.end(), fac.begin(), fac.end());
        n = inferred_rank(all);
    }
    return DecreasingFactorization(written, n);
}

std::string format_factorization(const DecreasingFactorization& f) {
    bool digits = true;
    for (const Factor& fac : f.written())
        for (int a : fac) digits = digits && a < 10;
    std::string s;
    for (const Factor& fac : f.written()) {
        s += '(';
        for (std::size_t k = 0; k < fac.size(); ++k) {
            if (!digits && k) s += ',';
            s += std::to_string(fac[k]);
        }
        s += ')';
    }
    return s;
}

}  // namespace hk
