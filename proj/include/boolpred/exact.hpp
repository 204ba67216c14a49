#pragma once

#include <array>
#include <optional>
#include <vector>

#include "boolpred/boolfn.hpp"
#include "boolpred/rational.hpp"

namespace boolpred {

struct ChannelParams {
    double alpha;  // crossover probability, in [0, 1/2]
};

enum class LossKind { quadratic, logarithmic };

// Per-step and total sequential prediction cost of Y^n given b(X^n).
// by_value[v] is the cost conditioned on b(X^n)=v; the total is the
// probability-weighted average.  Exact-rational fields are filled only by
// the noiseless rational engine under quadratic loss.
struct CostReport {
    int n = 0;
    LossKind loss = LossKind::quadratic;
    std::vector<double> per_step;
    double total = 0.0;
    std::array<double, 2> by_value{0.0, 0.0};
    std::optional<std::vector<Rational>> per_step_exact;
    std::optional<Rational> total_exact;
    std::array<std::optional<Rational>, 2> by_value_exact;
};

// P[Y^n = y | b(X^n) = v]: uniform mass on the preimage pushed through the
// per-coordinate channel mixing transform.  Dense array indexed like the
// truth table (x_1 MSB).
std::vector<double> output_distribution(const TruthTable& b, bool v, ChannelParams ch);

// Sequential prediction cost, dense engine, O(n*2^n) per conditioning value.
CostReport seq_cost(const TruthTable& b, ChannelParams ch, LossKind loss);

// Noiseless cost in exact rational arithmetic (quadratic loss); logarithmic
// loss is evaluated in floating point from the exact prefix counts.
CostReport seq_cost_noiseless(const TruthTable& b, LossKind loss);

// Same for a symmetric profile, without expanding the truth table.
CostReport seq_cost_noiseless_symmetric(const SymmetricProfile& s, LossKind loss);

// Weight-collapsed engine for symmetric functions, O(n^4) total.
CostReport seq_cost_symmetric(const SymmetricProfile& s, ChannelParams ch, LossKind loss);

// H(Y^n | b(X^n)) in bits, from the full output distributions.
double cond_entropy(const TruthTable& b, ChannelParams ch);
double cond_entropy_symmetric(const SymmetricProfile& s, ChannelParams ch);

// I(b(X^n); Y^n) = n - H(Y^n | b(X^n)) for balanced-or-not b (H(Y^n) = n
// since X^n is uniform and the channel is symmetric).
double mutual_information(const TruthTable& b, ChannelParams ch);

// H(maj(X^n) | Y^n) = 1 + H(Y^n | maj) - n, odd n.
double h_maj_given_y(int n, ChannelParams ch);

// Sequential quadratic cost of an explicit distribution over {0,1}^n
// (no conditioning).  Used by the channel-composition check.
double smse_of_distribution(const std::vector<double>& dist, int n);

// Returns (M(W^n), alpha(1-alpha)*n + (1-2alpha)^2 * M(V^n)) where W^n is
// V^n through BSC(alpha).  Callers assert left >= right; equality holds for
// product laws.
std::pair<double, double> smse_channel_compose_check(const std::vector<double>& dist,
                                                     int n, ChannelParams ch);

// Marginal P[V_k = 1] of a t-majority random vector (uniform over Hamming
// weight >= ceil(t*n)), exact.
Rational tmaj_marginal(int n, double t);

// Level-k prefix marginals of a dense distribution: out[k] has 2^k entries.
std::vector<std::vector<double>> prefix_marginals(const std::vector<double>& dist, int n);

}  // namespace boolpred
