#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "boolpred/rational.hpp"

namespace boolpred {

// Natural-log-domain value; -inf encodes 0.
struct LogProb {
    double value = -std::numeric_limits<double>::infinity();

    static LogProb from_linear(double p) {
        return LogProb{p > 0 ? std::log(p) : -std::numeric_limits<double>::infinity()};
    }
    double linear() const { return std::exp(value); }
    // log(exp(a) + exp(b)) without overflow
    friend LogProb operator+(LogProb a, LogProb b) {
        if (a.value == -std::numeric_limits<double>::infinity()) return b;
        if (b.value == -std::numeric_limits<double>::infinity()) return a;
        double hi = std::max(a.value, b.value), lo = std::min(a.value, b.value);
        return LogProb{hi + std::log1p(std::exp(lo - hi))};
    }
};

// Binary entropy in bits. Endpoints are exactly 0.
double binent(double p);

// Binary KL divergence D(a||b) in bits.
double bindiv(double a, double b);

// Standard normal tail probability P[G > t].
double q_function(double t);

// Sum_{m=k0}^{n} C(n,m), exact big-integer count.
BigInt binom_tail_exact(int n, int k0);

// Natural log of the same sum, accumulated stably in the log domain.
LogProb binom_tail_log(int n, int k0);

// Exact C(n,k).
BigInt binomial_exact(int n, int k);

// E[f(G)] for G ~ N(0,1) by adaptive quadrature truncated at |t| <= 12.
// f must be bounded; the truncated tail contributes < 1e-10 relative to sup|f|.
double gaussian_expectation(const std::function<double(double)>& f);

// Bisection; requires a sign change on [lo, hi].
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol);

// Kahan-compensated accumulator with a fixed, caller-defined add order.
struct KahanSum {
    double sum = 0.0, comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace boolpred
