#pragma once

// Floating-point approximations to the tail P(X >= np) at an integer mean,
// reported next to the exact value.

#include <optional>

#include "pepys/binomial.hpp"

namespace pepys {

/// Fraction of the modal probability by which the tail exceeds 1/2.
inline constexpr double kModalFraction = 0.4;
/// sqrt(n) times the normal approximation to the modal probability at p = 1/6.
inline constexpr double kSixthModalCoefficient = 1.07;

/// 1/2 + 0.4 * P(X = np). Throws DomainError when n*p is not an integer.
double stigler_tail_approx(unsigned n, Probability const& p);

/// Normal approximation to the modal probability, 1/sqrt(2 pi n p (1-p)).
/// Throws DomainError for p in {0, 1}.
double demoivre_modal_approx(unsigned n, Probability const& p);

/// 1/2 + 0.4 * 1.07 / sqrt(n). Only meaningful for the p = 1/6 family.
double chained_approx(unsigned n);

struct ApproxReport {
    unsigned n = 0;
    Probability p;
    ExactRational exact;     // P(X >= np)
    ExactRational modal;     // P(X = np)
    double stigler = 0.0;
    double demoivre_modal = 0.0;
    std::optional<double> chained;  // only when p == 1/6
    double stigler_abs_error = 0.0;
    double demoivre_abs_error = 0.0;  // against the exact modal probability
    std::optional<double> chained_abs_error;
};

/// Throws DomainError when n*p is not an integer or p is degenerate.
ApproxReport approx_report(unsigned n, Probability const& p);

}  // namespace pepys
