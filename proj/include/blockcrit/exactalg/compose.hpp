#pragma once

#include <algorithm>
#include <climits>
#include <string>
#include <vector>

#include "blockcrit/error.hpp"
#include "blockcrit/exactalg/laurent_series.hpp"
#include "blockcrit/exactalg/multi_poly.hpp"

namespace blockcrit::exactalg {

/// Substitutes args[i] for x_{i+1} in `p` and returns the result exact
/// through w^order.
///
/// Intermediate products are truncated as early as the remaining factors'
/// min degrees allow, so a large `p` with short arguments stays cheap.
/// Throws `ValidationError` naming the required order when the arguments are
/// not known far enough for the result to be exact through `order`.
template <class Coeff>
LaurentSeries<Coeff> laurent_compose_poly(const MultiPoly<Coeff>& p,
                                          const std::vector<LaurentSeries<Coeff>>& args, int order) {
    if (args.size() != p.arity())
        throw ValidationError("laurent_compose_poly: " + std::to_string(args.size()) +
                              " arguments for arity " + std::to_string(p.arity()));

    LaurentSeries<Coeff> total(std::min(0, order + 1), order);
    std::vector<int> factors;
    for (const auto& [e, c] : p.terms()) {
        factors.clear();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) factors.push_back(static_cast<int>(i));

        // suffix_min[i]: sum of min degrees of factors i.. end
        std::vector<int> suffix_min(factors.size() + 1, 0);
        for (std::size_t i = factors.size(); i-- > 0;)
            suffix_min[i] = suffix_min[i + 1] + args[factors[i]].min_degree();

        auto term = LaurentSeries<Coeff>::constant(c, order - suffix_min[0]);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& f = args[factors[i]];
            term = LaurentSeries<Coeff>::multiply(term, f, order - suffix_min[i + 1]);
        }
        if (term.order() < order) {
            // Re-derive the order each argument would need, for the message.
            int shortfall = order - term.order();
            int have = INT_MAX;
            for (const auto& a : args) have = std::min(have, a.order());
            throw ValidationError("laurent_compose_poly: arguments exact through w^" +
                                  std::to_string(have) + " give a result exact only through w^" +
                                  std::to_string(term.order()) + "; required order " +
                                  std::to_string(have + shortfall));
        }
        total = total + term.truncated(order);
    }
    return total;
}

} // namespace blockcrit::exactalg
