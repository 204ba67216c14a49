#pragma once

#include <optional>
#include <vector>

#include "boolpred/exact.hpp"

namespace boolpred {

// Closed-form bound values at a given (n, alpha).  Entries whose closed form
// drops an o(1) or O(.) remainder are asymptotic reference curves, not
// certified finite-n bounds; the flags say which is which.
struct BoundSet {
    int n;
    double alpha;
    double noiseless_lb;           // (n - 2ln2)/4, certified
    double maj_noiseless_ub_leading;  // same leading term, asymptotic
    double dic_noiseless;          // (n-1)/4
    double noisy_lb;               // (n - 2ln2 (1-2a)^2)/4, certified
    double maj_noisy_ub_leading;   // asymptotic
    std::optional<double> maj_noisy_lb_leading;  // singular at alpha = 0
    double dic_noisy;              // (n - (1-2a)^2)/4
    double mu_alpha;
    double h_maj_gaussian;         // quadrature value, asymptotic as an n-limit
    std::optional<double> h_maj_quadratic_lb;    // singular at alpha = 0
    struct {
        bool maj_noiseless_ub = true;
        bool maj_noisy_ub = true;
        bool maj_noisy_lb = true;
        bool h_maj_gaussian = true;
        bool h_maj_quadratic_lb = true;
    } asymptotic;
};

// binent(arccos(1-2a)/pi), the majority stability exponent.
double mu(double alpha);

BoundSet bound_set(int n, double alpha);

// E{ binent[ Q(|G|(1-2a)/sqrt(4a(1-a))) ] } by Gaussian quadrature.
double gaussian_entropy_approx(double alpha);

// 1 - (1/(pi ln2)) (1-2a)^2/(4a(1-a)), leading terms only.
double h_maj_quadratic_lb(double alpha);

// Asymptotic noiseless reference curve for unbalanced majority:
// (n - 2ln2 binent(q))/4.
double maj_q_noiseless_leading(int n, double q);

// Root of 2ln2 (1-mu(alpha)) = 1 on (0, 0.1).
double crossover_alpha_lower();

// Grid-bracketed alpha where the exact majority cost crosses the dictator
// cost at finite n, refined by bisection; absent without a sign change.
std::optional<double> crossover_empirical(int n, const std::vector<double>& alpha_grid);

}  // namespace boolpred
