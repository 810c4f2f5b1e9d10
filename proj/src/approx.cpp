#include "pepys/approx.hpp"

#include <cmath>
#include <numbers>

#include "pepys/errors.hpp"
#include "pepys/median_mode.hpp"

namespace pepys {

double stigler_tail_approx(unsigned n, Probability const& p) {
    unsigned const m = integer_mean(n, p);
    return 0.5 + kModalFraction * binom_pmf(n, m, p).to_double();
}

double demoivre_modal_approx(unsigned n, Probability const& p) {
    if (p.is_degenerate()) throw DomainError("normal approximation needs 0 < p < 1");
    double const q = p.to_double();
    return 1.0 / std::sqrt(2.0 * std::numbers::pi * n * q * (1.0 - q));
}

double chained_approx(unsigned n) {
    return 0.5 + kModalFraction * kSixthModalCoefficient / std::sqrt(static_cast<double>(n));
}

ApproxReport approx_report(unsigned n, Probability const& p) {
    IntegerMeanTails const tails = integer_mean_tails(n, p);
    ApproxReport r;
    r.n = n;
    r.p = p;
    r.exact = tails.upper.value();
    r.modal = tails.modal.value();
    r.stigler = stigler_tail_approx(n, p);
    r.demoivre_modal = demoivre_modal_approx(n, p);
    double const exact = r.exact.to_double();
    r.stigler_abs_error = std::abs(r.stigler - exact);
    r.demoivre_abs_error = std::abs(r.demoivre_modal - r.modal.to_double());
    if (p == Probability(1, 6)) {
        r.chained = chained_approx(n);
        r.chained_abs_error = std::abs(*r.chained - exact);
    }
    return r;
}

}  // namespace pepys
