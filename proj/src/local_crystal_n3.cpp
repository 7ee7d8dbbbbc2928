#include "hk/local_crystal_n3.hpp"

#include <stdexcept>
#include <string>

namespace hk {

using enum Factor3;

std::vector<Factor3> factors3(const DecreasingFactorization& f) {
    if (f.n() != 3) throw std::invalid_argument("factorization must be over the alphabet {1,2} with n = 3");
    std::vector<Factor3> out;
    for (int k = 1; k <= f.m(); ++k) {
        const Factor& h = f.h(k);
        if (h.empty()) out.push_back(empty);
        else if (h == Factor{1}) out.push_back(one);
        else if (h == Factor{2}) out.push_back(two);
        else if (h == Factor{2, 1}) out.push_back(two_one);
        else throw std::invalid_argument("factor " + std::to_string(k) + " is not over {1,2}");
    }
    return out;
}

DecreasingFactorization from_factors3(const std::vector<Factor3>& h) {
    std::vector<Factor> written;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        switch (*it) {
            case empty: written.push_back({}); break;
            case one: written.push_back({1}); break;
            case two: written.push_back({2}); break;
            case two_one: written.push_back({2, 1}); break;
        }
    }
    return DecreasingFactorization(written, 3);
}

PairCounter pairing3(const DecreasingFactorization& f) {
    const auto h = factors3(f);
    const int m = static_cast<int>(h.size());
    PairCounter out;
    out.p.assign(m + 1, 0);
    // paired[k] for the single letter of h^k; (21) pairs internally right away.
    std::vector<bool> paired(m + 1, false);
    auto letter = [&](int k) { return h[k - 1] == one ? 1 : 2; };
    for (int k = 1; k <= m; ++k) {
        const int prev = out.p[k - 1];
        out.p[k] = prev;
        const Factor3 x = h[k - 1];
        if (x == empty) continue;
        if (x == two_one) {
            out.pairs.push_back({{k, 2}, {k, 1}});
            out.p[k] = prev + 1;
            continue;
        }
        const bool looks = (x == two && prev % 2 == 0) || (x == one && prev % 2 == 1);
        if (!looks) continue;
        // Leftmost unpaired letter of h^{k-1} ... h^1; only single letters can be unpaired.
        int j = k - 1;
        while (j >= 1 && (h[j - 1] == empty || h[j - 1] == two_one || paired[j])) --j;
        if (j < 1) continue;
        const int between = prev - out.p[j];  // p([j+1, k-1])
        const bool same = h[j - 1] == x;
        if ((!same && between % 2 == 0) || (same && between % 2 == 1)) {
            paired[j] = paired[k] = true;
            out.pairs.push_back({{k, letter(k)}, {j, letter(j)}});
            out.p[k] = prev + 1;
        }
    }
    for (int k = m; k >= 1; --k)
        if ((h[k - 1] == one || h[k - 1] == two) && !paired[k]) out.unpaired.push_back({k, letter(k)});
    return out;
}

namespace {

using Pair = std::pair<Factor3, Factor3>;  // (h^{i+1}, h^i)

std::optional<Pair> lower(Pair in, bool odd) {
    const auto [up, lo] = in;
    if (up == two_one) return std::nullopt;
    if (up == one && lo == two_one) return Pair{two_one, two};
    if (up == two && lo == two_one) return Pair{two_one, one};
    if (up == empty && (lo == one || lo == two)) return Pair{lo, empty};
    if (up == empty && lo == two_one) return odd ? Pair{one, two} : Pair{two, one};
    if (!odd && up == two && lo == one) return Pair{two_one, empty};
    if (odd && up == one && lo == two) return Pair{two_one, empty};
    return std::nullopt;
}

std::optional<Pair> raise(Pair in, bool odd) {
    constexpr Factor3 all[] = {empty, one, two, two_one};
    for (Factor3 a : all)
        for (Factor3 b : all)
            if (auto out = lower({a, b}, odd); out && *out == in) return Pair{a, b};
    return std::nullopt;
}

template <class Op>
std::optional<DecreasingFactorization> apply(const DecreasingFactorization& f, int i, Op op) {
    auto h = factors3(f);
    const int m = static_cast<int>(h.size());
    if (i < 1 || i >= m) throw std::invalid_argument("operator index " + std::to_string(i) + " outside [1," +
                                                     std::to_string(m - 1) + "]");
    const bool odd = pairing3(f).p[i - 1] % 2 == 1;
    auto out = op(Pair{h[i], h[i - 1]}, odd);
    if (!out) return std::nullopt;
    h[i] = out->first;
    h[i - 1] = out->second;
    return from_factors3(h);
}

}  // namespace

std::optional<DecreasingFactorization> f3(const DecreasingFactorization& f, int i) { return apply(f, i, lower); }
std::optional<DecreasingFactorization> e3(const DecreasingFactorization& f, int i) { return apply(f, i, raise); }

}  // namespace hk
