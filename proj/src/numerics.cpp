#include "boolpred/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace boolpred {

double binent(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("binent: p outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    if (p > 0.5) p = 1.0 - p;  // symmetric evaluation order
    double q = 1.0 - p;
    return -p * std::log2(p) - q * std::log2(q);
}

double bindiv(double a, double b) {
    if (a < 0.0 || a > 1.0) throw std::domain_error("bindiv: a outside [0,1]");
    if (b < 0.0 || b > 1.0) throw std::domain_error("bindiv: b outside [0,1]");
    if (b == 0.0 || b == 1.0) {
        if (a == b) return 0.0;
        throw std::domain_error("bindiv: divergence infinite for b in {0,1}, a != b");
    }
    double d = 0.0;
    if (a > 0.0) d += a * std::log2(a / b);
    if (a < 1.0) d += (1.0 - a) * std::log2((1.0 - a) / (1.0 - b));
    return d;
}

double q_function(double t) {
    return 0.5 * std::erfc(t / std::sqrt(2.0));
}

BigInt binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt c = 1;
    k = std::min(k, n - k);
    for (int i = 1; i <= k; ++i) {
        c *= (n - k + i);
        c /= i;
    }
    return c;
}

BigInt binom_tail_exact(int n, int k0) {
    if (k0 < 0 || k0 > n + 1) throw std::domain_error("binom_tail: k0 outside [0, n+1]");
    BigInt s = 0;
    // run the sum from the edge inward; term m=k0 computed last is the largest
    BigInt c = 1;  // C(n,n)
    for (int m = n; m >= k0; --m) {
        s += c;
        if (m > 0) {
            c *= m;
            c /= (n - m + 1);
        }
    }
    return s;
}

LogProb binom_tail_log(int n, int k0) {
    if (k0 < 0 || k0 > n + 1) throw std::domain_error("binom_tail: k0 outside [0, n+1]");
    auto log_binom = [n](int m) {
        return std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
    };
    // accumulate relative to the largest term
    double mx = -std::numeric_limits<double>::infinity();
    for (int m = k0; m <= n; ++m) mx = std::max(mx, log_binom(m));
    if (mx == -std::numeric_limits<double>::infinity()) return LogProb{};
    KahanSum acc;
    for (int m = n; m >= k0; --m) acc.add(std::exp(log_binom(m) - mx));
    return LogProb{mx + std::log(acc.value())};
}

double gaussian_expectation(const std::function<double(double)>& f) {
    constexpr double kTrunc = 12.0;  // Q(12) ~ 1.8e-33, far below the 1e-10 budget
    const double inv_sqrt_2pi = 0.3989422804014326779;
    auto integrand = [&](double t) {
        return f(t) * inv_sqrt_2pi * std::exp(-0.5 * t * t);
    };
    double error = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, -kTrunc, kTrunc, 15, 1e-12, &error);
    if (!(error < 1e-8)) throw std::runtime_error("gaussian_expectation: quadrature did not converge");
    return v;
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::invalid_argument("find_root: no sign change on bracket");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace boolpred
