#pragma once

#include <cstdint>
#include <vector>

#include "boolpred/boolfn.hpp"
#include "boolpred/exact.hpp"
#include "boolpred/rational.hpp"

namespace boolpred {

// Weight-constrained optimal noiseless costs C(m,w) for m <= n, with one
// minimizing cofactor split (w0, w1) recorded per cell for reconstruction.
class DpTable {
public:
    explicit DpTable(int n);

    int arity() const { return n_; }
    const Rational& cost(int m, std::int64_t w) const;
    std::pair<std::int64_t, std::int64_t> split(int m, std::int64_t w) const;

    Rational optimal_cost() const;
    std::int64_t optimal_weight() const;  // smallest minimizing weight

private:
    friend DpTable dp_optimal(int n);
    int n_;
    // level m holds 2^m + 1 cells
    std::vector<std::vector<Rational>> cost_;
    std::vector<std::vector<std::int64_t>> split0_;
};

// M(X_1 | b(X^n)) for any b whose cofactor weights are (w0, w1).
Rational first_bit_cost(int n, std::int64_t w0, std::int64_t w1);

// Fill the table up to arity n (exact rationals; n <= 11).
DpTable dp_optimal(int n);

// A truth table of weight w whose noiseless quadratic cost equals C(n,w).
TruthTable reconstruct(const DpTable& table, std::int64_t w);

enum class BruteObjective { min_smse, max_smse, max_mi };

struct BruteResult {
    TruthTable fn;
    Rational exact_value;  // valid when alpha == 0 and objective is an SMSE
    double value;
};

// Exhaustive scan over all 2^(2^n) functions (n <= 4).  Ties broken toward
// the smallest integer encoding of the truth table.  weight_filter, when
// >= 0, restricts the scan to functions of that weight.
BruteResult brute_force(int n, BruteObjective objective, ChannelParams ch,
                        std::int64_t weight_filter = -1);

}  // namespace boolpred
