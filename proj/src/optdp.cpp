#include "boolpred/optdp.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolpred {

DpTable::DpTable(int n) : n_(n) {
    if (n < 1 || n > 11) throw std::domain_error("DpTable: arity outside [1,11]");
    cost_.resize(n + 1);
    split0_.resize(n + 1);
    for (int m = 1; m <= n; ++m) {
        cost_[m].assign((std::size_t{1} << m) + 1, Rational(0));
        split0_[m].assign((std::size_t{1} << m) + 1, 0);
    }
}

const Rational& DpTable::cost(int m, std::int64_t w) const {
    return cost_.at(m).at(static_cast<std::size_t>(w));
}

std::pair<std::int64_t, std::int64_t> DpTable::split(int m, std::int64_t w) const {
    std::int64_t w0 = split0_.at(m).at(static_cast<std::size_t>(w));
    return {w0, w - w0};
}

Rational DpTable::optimal_cost() const {
    return cost(n_, optimal_weight());
}

std::int64_t DpTable::optimal_weight() const {
    std::int64_t best = 0;
    for (std::int64_t w = 1; w <= (std::int64_t{1} << n_); ++w)
        if (cost_[n_][w] < cost_[n_][best]) best = w;
    return best;
}

Rational first_bit_cost(int n, std::int64_t w0, std::int64_t w1) {
    std::int64_t half = std::int64_t{1} << (n - 1);
    if (w0 < 0 || w0 > half || w1 < 0 || w1 > half)
        throw std::domain_error("first_bit_cost: weight out of range");
    std::int64_t full = std::int64_t{1} << n;
    std::int64_t w = w0 + w1;
    // degenerate weights reveal nothing about x_1; Q_1 = 1/2 either way
    if (w == 0 || w == full) return Rational(1, 4);
    // conditioned on b=1: P[x_1=1] = w1/w; on b=0: (half - w1)/(full - w)
    Rational q1(w1, w), q0(half - w1, full - w);
    return Rational(w, full) * q1 * (1 - q1) + Rational(full - w, full) * q0 * (1 - q0);
}

DpTable dp_optimal(int n) {
    if (n < 2 || n > 11) throw std::domain_error("dp_optimal: arity outside [2,11]");
    DpTable t(n);
    t.cost_[1][0] = Rational(1, 4);
    t.cost_[1][1] = Rational(0);
    t.cost_[1][2] = Rational(1, 4);
    for (int m = 2; m <= n; ++m) {
        std::int64_t half = std::int64_t{1} << (m - 1);
        std::int64_t full = std::int64_t{1} << m;
        const auto& prev = t.cost_[m - 1];
        for (std::int64_t w = 0; w <= full; ++w) {
            bool have = false;
            Rational best;
            std::int64_t best_w0 = 0;
            for (std::int64_t w0 = std::max<std::int64_t>(0, w - half);
                 w0 <= std::min<std::int64_t>(w, half); ++w0) {
                std::int64_t w1 = w - w0;
                Rational c = first_bit_cost(m, w0, w1) +
                             Rational(1, 2) * (prev[static_cast<std::size_t>(w0)] +
                                               prev[static_cast<std::size_t>(w1)]);
                if (!have || c < best) {
                    have = true;
                    best = c;
                    best_w0 = w0;
                }
            }
            t.cost_[m][static_cast<std::size_t>(w)] = best;
            t.split0_[m][static_cast<std::size_t>(w)] = best_w0;
        }
    }
    return t;
}

namespace {

void reconstruct_into(const DpTable& t, int m, std::int64_t w, std::vector<bool>& bits,
                      std::size_t off) {
    if (m == 1) {
        // weight 1 realized as b(x) = x
        bits[off] = w == 2;
        bits[off + 1] = w >= 1;
        return;
    }
    auto [w0, w1] = t.split(m, w);
    std::size_t half = std::size_t{1} << (m - 1);
    reconstruct_into(t, m - 1, w0, bits, off);
    reconstruct_into(t, m - 1, w1, bits, off + half);
}

}  // namespace

TruthTable reconstruct(const DpTable& table, std::int64_t w) {
    int n = table.arity();
    if (w < 0 || w > (std::int64_t{1} << n))
        throw std::domain_error("reconstruct: weight out of range");
    std::vector<bool> bits(std::size_t{1} << n);
    reconstruct_into(table, n, w, bits, 0);
    return TruthTable(n, std::move(bits));
}

BruteResult brute_force(int n, BruteObjective objective, ChannelParams ch,
                        std::int64_t weight_filter) {
    if (n < 1 || n > 4) throw std::domain_error("brute_force: arity cap is 4");
    std::size_t size = std::size_t{1} << n;
    bool noiseless = ch.alpha == 0.0;
    bool use_exact = noiseless && objective != BruteObjective::max_mi;
    bool maximize = objective != BruteObjective::min_smse;
    std::optional<BruteResult> best;
    Rational best_exact;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << size); ++code) {
        std::vector<bool> bits(size);
        int w = 0;
        for (std::size_t i = 0; i < size; ++i) {
            bits[i] = (code >> i) & 1u;
            w += bits[i];
        }
        if (weight_filter >= 0 && w != weight_filter) continue;
        TruthTable b(n, std::move(bits));
        if (use_exact) {
            Rational val = *seq_cost_noiseless(b, LossKind::quadratic).total_exact;
            bool better = !best || (maximize ? val > best_exact : val < best_exact);
            if (better) {
                best_exact = val;
                best = BruteResult{std::move(b), val, to_double(val)};
            }
        } else {
            double val = objective == BruteObjective::max_mi
                             ? mutual_information(b, ch)
                             : seq_cost(b, ch, LossKind::quadratic).total;
            bool better = !best || (maximize ? val > best->value : val < best->value);
            if (better) best = BruteResult{std::move(b), Rational(0), val};
        }
    }
    if (!best) throw std::domain_error("brute_force: no function matches the filter");
    return *best;
}

}  // namespace boolpred
