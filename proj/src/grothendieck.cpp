#include "hk/grothendieck.hpp"

#include <algorithm>
#include <sstream>

#include "hk/generators.hpp"
#include "hk/residue.hpp"
#include "hk/star_crystal.hpp"
#include "hk/svt_crystal.hpp"

namespace hk {

std::int64_t BetaSchurSeries::at(int d, const Partition& mu) const {
    auto it = coeffs.find({d, trim(mu)});
    return it == coeffs.end() ? 0 : it->second;
}

BetaPolynomial grothendieck_poly(const HeckeElement& w, int m, int max_beta) {
    if (max_beta < 0) throw std::invalid_argument("max_beta must be nonnegative");
    BetaPolynomial out(m);
    for_each_factorization(w, m, max_beta, [&](const DecreasingFactorization& f) { out.add(excess(f), weight(f), 1); });
    return out;
}

BetaSchurSeries schur_expand(const BetaPolynomial& p, int max_beta) {
    if (auto defect = symmetry_defect(p)) throw ValidationError("polynomial is not symmetric: " + *defect);
    BetaSchurSeries out;
    out.vars = p.vars();
    out.max_beta = max_beta;
    for (int d = 0; d <= max_beta; ++d) {
        BetaPolynomial rest = p.slice(d);
        while (!rest.empty()) {
            const auto& [key, c] = *rest.terms().rbegin();
            const Exponent lead = key.second;
            if (!is_partition(lead)) throw ValidationError("leading monomial is not a partition");
            const Partition mu = trim(lead);
            out.coeffs[{d, mu}] += c;
            rest -= schur_poly(mu, p.vars()).scaled(c);
        }
    }
    return out;
}

BetaSchurSeries schur_coeffs_via_crystal(const HeckeElement& w, int m, int max_beta) {
    if (!is_fully_commutative(w)) throw DomainError("element is not fully commutative");
    BetaSchurSeries out;
    out.vars = m;
    out.max_beta = max_beta;
    for_each_factorization(w, m, max_beta, [&](const DecreasingFactorization& f) {
        for (int i = 1; i < m; ++i)
            if (f_star(f, i)) return;
        Partition mu = weight(f);
        std::sort(mu.begin(), mu.end(), std::greater<int>());
        out.coeffs[{excess(f), trim(mu)}] += 1;
    });
    return out;
}

BetaPolynomial svt_generating_function(const SkewShape& shape, int m, int max_excess) {
    BetaPolynomial out(m);
    for_each_svt(shape, m, max_excess, [&](const SetValuedTableau& t) { out.add(excess(t), weight(t, m), 1); });
    return out;
}

BetaSchurSeries svt_highest_weight_counts(const SkewShape& shape, int m, int max_excess) {
    BetaSchurSeries out;
    out.vars = m;
    out.max_beta = max_excess;
    for_each_svt(shape, m, max_excess, [&](const SetValuedTableau& t) {
        for (int i = 1; i < m; ++i)
            if (e_svt(t, i)) return;
        out.coeffs[{excess(t), trim(weight(t, m))}] += 1;
    });
    return out;
}

HeckeElement grassmannian_element(const Partition& lambda) {
    const Partition l = trim(lambda);
    if (l.empty()) return HeckeElement::identity(2);
    const SetValuedTableau t = to_set_valued(t_mu(l));
    return eval(res(t).flatten());
}

std::string format_series(const BetaSchurSeries& s) {
    std::ostringstream out;
    out << "beta  partition  coefficient\n";
    for (const auto& [key, c] : s.coeffs) out << key.first << "  " << format_partition(key.second) << "  " << c << "\n";
    return out.str();
}

std::string format_series_csv(const BetaSchurSeries& s) {
    std::ostringstream out;
    out << "beta,partition,coefficient\n";
    for (const auto& [key, c] : s.coeffs) {
        std::string parts;
        for (std::size_t k = 0; k < key.second.size(); ++k) parts += (k ? " " : "") + std::to_string(key.second[k]);
        out << key.first << "," << parts << "," << c << "\n";
    }
    return out.str();
}

}  // namespace hk
