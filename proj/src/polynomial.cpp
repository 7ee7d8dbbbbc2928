#include "hk/polynomial.hpp"

#include <sstream>

#include "hk/generators.hpp"

namespace hk {

int BetaPolynomial::max_beta() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

void BetaPolynomial::add(int beta, const Exponent& x, std::int64_t c) {
    if (static_cast<int>(x.size()) != vars_)
        throw std::invalid_argument("exponent has " + std::to_string(x.size()) + " entries, expected " +
                                    std::to_string(vars_));
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({beta, x}, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

BetaPolynomial& BetaPolynomial::operator+=(const BetaPolynomial& o) {
    if (o.vars_ != vars_) throw std::invalid_argument("polynomials in different numbers of variables");
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
    return *this;
}

BetaPolynomial& BetaPolynomial::operator-=(const BetaPolynomial& o) {
    if (o.vars_ != vars_) throw std::invalid_argument("polynomials in different numbers of variables");
    for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
    return *this;
}

BetaPolynomial BetaPolynomial::scaled(std::int64_t c, int beta_shift) const {
    BetaPolynomial out(vars_);
    for (const auto& [key, v] : terms_) out.add(key.first + beta_shift, key.second, v * c);
    return out;
}

BetaPolynomial BetaPolynomial::slice(int d) const {
    BetaPolynomial out(vars_);
    for (const auto& [key, c] : terms_)
        if (key.first == d) out.add(0, key.second, c);
    return out;
}

std::optional<std::string> symmetry_defect(const BetaPolynomial& p) {
    const auto& terms = p.terms();
    for (const auto& [key, c] : terms)
        for (int i = 0; i + 1 < p.vars(); ++i) {
            Exponent swapped = key.second;
            std::swap(swapped[i], swapped[i + 1]);
            auto it = terms.find({key.first, swapped});
            if (it == terms.end() || it->second != c) {
                std::ostringstream msg;
                msg << "coefficient of beta^" << key.first << " x^(";
                for (std::size_t k = 0; k < key.second.size(); ++k) msg << (k ? "," : "") << key.second[k];
                msg << ") changes under swapping x" << i + 1 << " and x" << i + 2;
                return msg.str();
            }
        }
    return std::nullopt;
}

std::string format_polynomial(const BetaPolynomial& p) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest monomials first within each beta degree.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [key, c] = *it;
        std::int64_t a = c;
        if (!first) {
            out << (a < 0 ? " - " : " + ");
            a = a < 0 ? -a : a;
        }
        first = false;
        std::vector<std::string> factors;
        if (a != 1 || (key.first == 0 && std::all_of(key.second.begin(), key.second.end(), [](int e) { return e == 0; })))
            factors.push_back(std::to_string(a));
        if (key.first == 1) factors.push_back("b");
        if (key.first > 1) factors.push_back("b^" + std::to_string(key.first));
        for (std::size_t k = 0; k < key.second.size(); ++k) {
            if (key.second[k] == 0) continue;
            std::string v = "x" + std::to_string(k + 1);
            if (key.second[k] > 1) v += "^" + std::to_string(key.second[k]);
            factors.push_back(v);
        }
        for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
    }
    return out.str();
}

BetaPolynomial schur_poly(const Partition& mu, int m) {
    BetaPolynomial out(m);
    const Partition lambda = trim(mu);
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition: " + format_partition(mu));
    if (static_cast<int>(lambda.size()) > m) return out;
    if (lambda.empty()) {
        out.add(0, Exponent(m, 0), 1);
        return out;
    }
    for_each_ssyt(SkewShape(lambda), m, [&](const Tableau& t) { out.add(0, weight(t, m), 1); });
    return out;
}

}  // namespace hk
