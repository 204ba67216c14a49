#include "boolpred/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boolpred/numerics.hpp"

namespace boolpred {

namespace {
constexpr double kTwoLn2 = 2.0 * std::numbers::ln2;

double dic_noisy_cost(int n, double alpha) {
    double g = 1.0 - 2.0 * alpha;
    return (n - g * g) / 4.0;
}
}  // namespace

double mu(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 0.5)) throw std::domain_error("mu: alpha outside [0, 1/2]");
    return binent(std::acos(1.0 - 2.0 * alpha) / std::numbers::pi);
}

double gaussian_entropy_approx(double alpha) {
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw std::domain_error("gaussian_entropy_approx: alpha outside (0, 1/2]");
    double scale = (1.0 - 2.0 * alpha) / std::sqrt(4.0 * alpha * (1.0 - alpha));
    return gaussian_expectation(
        [scale](double g) { return binent(q_function(std::abs(g) * scale)); });
}

double h_maj_quadratic_lb(double alpha) {
    if (!(alpha > 0.0 && alpha <= 0.5))
        throw std::domain_error("h_maj_quadratic_lb: alpha outside (0, 1/2]");
    double g = 1.0 - 2.0 * alpha;
    return 1.0 - (1.0 / (std::numbers::pi * std::numbers::ln2)) *
                     (g * g / (4.0 * alpha * (1.0 - alpha)));
}

double maj_q_noiseless_leading(int n, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("maj_q_noiseless_leading: q outside (0,1)");
    return (n - kTwoLn2 * binent(q)) / 4.0;
}

BoundSet bound_set(int n, double alpha) {
    if (n < 1) throw std::domain_error("bound_set: n must be >= 1");
    if (!(alpha >= 0.0 && alpha <= 0.5))
        throw std::domain_error("bound_set: alpha outside [0, 1/2]");
    double g = 1.0 - 2.0 * alpha;
    BoundSet b{};
    b.n = n;
    b.alpha = alpha;
    b.noiseless_lb = (n - kTwoLn2) / 4.0;
    b.maj_noiseless_ub_leading = b.noiseless_lb;
    b.dic_noiseless = (n - 1.0) / 4.0;
    b.noisy_lb = (n - kTwoLn2 * g * g) / 4.0;
    b.mu_alpha = mu(alpha);
    b.maj_noisy_ub_leading = (n - kTwoLn2 * g * g * (1.0 - b.mu_alpha)) / 4.0;
    b.dic_noisy = dic_noisy_cost(n, alpha);
    if (alpha > 0.0) {
        b.maj_noisy_lb_leading =
            (n - g * g / (2.0 * std::numbers::pi * alpha * (1.0 - alpha))) / 4.0;
        b.h_maj_gaussian = gaussian_entropy_approx(alpha);
        b.h_maj_quadratic_lb = boolpred::h_maj_quadratic_lb(alpha);
    } else {
        b.h_maj_gaussian = 0.0;  // limit of the quadrature as alpha -> 0+
    }
    return b;
}

double crossover_alpha_lower() {
    return find_root([](double a) { return kTwoLn2 * (1.0 - mu(a)) - 1.0; }, 1e-6, 0.1,
                     1e-9);
}

std::optional<double> crossover_empirical(int n, const std::vector<double>& alpha_grid) {
    if (n > 25 || n % 2 == 0) throw std::domain_error("crossover_empirical: need odd n <= 25");
    auto maj = majority(n);
    auto diff = [&](double a) {
        return seq_cost_symmetric(maj, ChannelParams{a}, LossKind::quadratic).total -
               dic_noisy_cost(n, a);
    };
    for (std::size_t i = 0; i + 1 < alpha_grid.size(); ++i) {
        double lo = alpha_grid[i], hi = alpha_grid[i + 1];
        double flo = diff(lo), fhi = diff(hi);
        if (flo == 0.0) return lo;
        if ((flo > 0) != (fhi > 0))
            return find_root(diff, lo, hi, 1e-9);
    }
    return std::nullopt;
}

}  // namespace boolpred
