#include "boolpred/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boolpred/numerics.hpp"

namespace boolpred {

namespace {

void check_alpha(ChannelParams ch) {
    if (!(ch.alpha >= 0.0 && ch.alpha <= 0.5))
        throw std::domain_error("alpha outside [0, 1/2]");
}

double step_loss(LossKind loss, double q) {
    // expected loss of the honest predictor q for the next bit
    if (loss == LossKind::quadratic) return q * (1.0 - q);
    double h = 0.0;
    if (q > 0.0) h -= q * std::log2(q);
    if (q < 1.0) h -= (1.0 - q) * std::log2(1.0 - q);
    return h;
}

}  // namespace

std::vector<double> output_distribution(const TruthTable& b, bool v, ChannelParams ch) {
    check_alpha(ch);
    int n = b.arity();
    std::size_t size = std::size_t{1} << n;
    std::uint64_t w = 0;
    std::vector<double> p(size, 0.0);
    for (std::size_t i = 0; i < size; ++i)
        if (b(static_cast<std::uint32_t>(i)) == v) {
            p[i] = 1.0;
            ++w;
        }
    if (w == 0) throw std::domain_error("output_distribution: empty preimage");
    double inv = 1.0 / static_cast<double>(w);
    for (auto& x : p) x *= inv;
    double a = ch.alpha, na = 1.0 - ch.alpha;
    if (a == 0.0) return p;
    for (int k = 0; k < n; ++k) {
        std::size_t stride = std::size_t{1} << k;
        for (std::size_t base = 0; base < size; base += 2 * stride)
            for (std::size_t j = 0; j < stride; ++j) {
                double p0 = p[base + j];
                double p1 = p[base + stride + j];
                p[base + j] = na * p0 + a * p1;
                p[base + stride + j] = a * p0 + na * p1;
            }
    }
    return p;
}

std::vector<std::vector<double>> prefix_marginals(const std::vector<double>& dist, int n) {
    std::vector<std::vector<double>> levels(n + 1);
    levels[n] = dist;
    for (int k = n; k > 0; --k) {
        const auto& cur = levels[k];
        auto& up = levels[k - 1];
        up.assign(std::size_t{1} << (k - 1), 0.0);
        for (std::size_t j = 0; j < up.size(); ++j) up[j] = cur[2 * j] + cur[2 * j + 1];
    }
    return levels;
}

CostReport seq_cost(const TruthTable& b, ChannelParams ch, LossKind loss) {
    check_alpha(ch);
    int n = b.arity();
    std::uint64_t w = b.weight();
    std::size_t size = std::size_t{1} << n;
    CostReport rep;
    rep.n = n;
    rep.loss = loss;
    rep.per_step.assign(n, 0.0);
    double pv[2] = {static_cast<double>(size - w) / size, static_cast<double>(w) / size};
    for (int v = 0; v < 2; ++v) {
        if ((v ? w : size - w) == 0) continue;  // degenerate: condition on the surviving value only
        auto levels = prefix_marginals(output_distribution(b, v, ch), n);
        double total_v = 0.0;
        for (int k = 1; k <= n; ++k) {
            const auto& parent = levels[k - 1];
            const auto& child = levels[k];
            KahanSum acc;
            for (std::size_t j = 0; j < parent.size(); ++j) {
                if (parent[j] <= 0.0) continue;
                double q = child[2 * j + 1] / parent[j];
                acc.add(parent[j] * step_loss(loss, q));
            }
            double s = acc.value();
            rep.by_value[v] += s;
            rep.per_step[k - 1] += pv[v] * s;
            total_v += pv[v] * s;
        }
        rep.total += total_v;
    }
    return rep;
}

namespace {

// prefix completion counts for the dense noiseless engine
std::vector<std::vector<std::int64_t>> prefix_counts(const TruthTable& b, bool v) {
    int n = b.arity();
    std::vector<std::vector<std::int64_t>> levels(n + 1);
    levels[n].resize(std::size_t{1} << n);
    for (std::size_t i = 0; i < levels[n].size(); ++i)
        levels[n][i] = b(static_cast<std::uint32_t>(i)) == v ? 1 : 0;
    for (int k = n; k > 0; --k) {
        auto& up = levels[k - 1];
        const auto& cur = levels[k];
        up.assign(std::size_t{1} << (k - 1), 0);
        for (std::size_t j = 0; j < up.size(); ++j) up[j] = cur[2 * j] + cur[2 * j + 1];
    }
    return levels;
}

}  // namespace

CostReport seq_cost_noiseless(const TruthTable& b, LossKind loss) {
    int n = b.arity();
    if (n > 20) throw std::domain_error("seq_cost_noiseless: arity cap is 20");
    std::int64_t size = std::int64_t{1} << n;
    CostReport rep;
    rep.n = n;
    rep.loss = loss;
    rep.per_step.assign(n, 0.0);
    bool rational_mode = loss == LossKind::quadratic;
    if (rational_mode) {
        rep.per_step_exact.emplace(n, Rational(0));
        rep.total_exact = Rational(0);
    }
    for (int v = 0; v < 2; ++v) {
        auto counts = prefix_counts(b, v);
        std::int64_t sv = counts[0][0];
        if (sv == 0) continue;
        Rational qv(sv, size);
        Rational total_v(0);
        double total_vd = 0.0;
        for (int k = 1; k <= n; ++k) {
            const auto& parent = counts[k - 1];
            const auto& child = counts[k];
            Rational step(0);
            KahanSum stepd;
            for (std::size_t j = 0; j < parent.size(); ++j) {
                std::int64_t c = parent[j];
                if (c == 0) continue;
                std::int64_t c1 = child[2 * j + 1];
                if (rational_mode) {
                    // (c/S) * (c1/c) * ((c-c1)/c) = c1*(c-c1) / (S*c)
                    step += Rational(BigInt(c1) * (c - c1), BigInt(sv) * c);
                } else {
                    double q = static_cast<double>(c1) / c;
                    stepd.add((static_cast<double>(c) / sv) * step_loss(loss, q));
                }
            }
            double sd = rational_mode ? to_double(step) : stepd.value();
            if (rational_mode) {
                (*rep.per_step_exact)[k - 1] += step * qv;
                total_v += step;
            }
            rep.by_value[v] += sd;
            rep.per_step[k - 1] += to_double(qv) * sd;
            total_vd += sd;
        }
        if (rational_mode) {
            rep.by_value_exact[v] = total_v;
            *rep.total_exact += total_v * qv;
        }
        rep.total += to_double(qv) * total_vd;
    }
    if (rational_mode) rep.total = to_double(*rep.total_exact);
    return rep;
}

CostReport seq_cost_noiseless_symmetric(const SymmetricProfile& s, LossKind loss) {
    int n = s.arity();
    // prefix states collapse to the prefix Hamming weight
    CostReport rep;
    rep.n = n;
    rep.loss = loss;
    rep.per_step.assign(n, 0.0);
    bool rational_mode = loss == LossKind::quadratic;
    if (rational_mode) {
        rep.per_step_exact.emplace(n, Rational(0));
        rep.total_exact = Rational(0);
    }
    std::int64_t size_log2 = n;
    for (int v = 0; v < 2; ++v) {
        // T[m][w] = completions of length m from accumulated weight w
        std::vector<std::vector<BigInt>> T(n + 1);
        T[0].resize(n + 1);
        for (int w = 0; w <= n; ++w) T[0][w] = s.at_weight(w) == (v == 1) ? 1 : 0;
        for (int m = 1; m <= n; ++m) {
            T[m].resize(n - m + 1);
            for (int w = 0; w <= n - m; ++w) T[m][w] = T[m - 1][w] + T[m - 1][w + 1];
        }
        BigInt sv = T[n][0];
        if (sv == 0) continue;
        Rational qv(sv, BigInt(1) << size_log2);
        Rational total_v(0);
        double total_vd = 0.0;
        for (int k = 1; k <= n; ++k) {
            Rational step(0);
            KahanSum stepd;
            BigInt ckw = 1;  // C(k-1, w)
            for (int w = 0; w <= k - 1; ++w) {
                const BigInt& c = T[n - k + 1][w];
                if (c != 0) {
                    const BigInt& c1 = T[n - k][w + 1];
                    if (rational_mode)
                        step += Rational(ckw * c1 * (c - c1), sv * c);
                    else {
                        double q = static_cast<double>(Rational(c1, c));
                        stepd.add(static_cast<double>(Rational(ckw * c, sv)) *
                                  step_loss(loss, q));
                    }
                }
                ckw = ckw * (k - 1 - w) / (w + 1);
            }
            double sd = rational_mode ? to_double(step) : stepd.value();
            if (rational_mode) {
                (*rep.per_step_exact)[k - 1] += step * qv;
                total_v += step;
            }
            rep.by_value[v] += sd;
            rep.per_step[k - 1] += to_double(qv) * sd;
            total_vd += sd;
        }
        if (rational_mode) {
            rep.by_value_exact[v] = total_v;
            *rep.total_exact += total_v * qv;
        }
        rep.total += to_double(qv) * total_vd;
    }
    if (rational_mode) rep.total = to_double(*rep.total_exact);
    return rep;
}

namespace {

// F[k][w][v] = P[Y^k = y^k, b(X^n) = v] for any y^k of Hamming weight w.
// Built from pairwise suffix counts T_v and the per-overlap channel weights.
struct SymmetricTables {
    int n;
    // F[k] is a (k+1) x 2 matrix
    std::vector<std::vector<std::array<double, 2>>> F;
    std::array<double, 2> pv;
};

SymmetricTables symmetric_joint(const SymmetricProfile& s, ChannelParams ch) {
    int n = s.arity();
    double a = ch.alpha, na = 1.0 - a;
    // T[v][m][base] = #{suffix u of length m : profile[base + wt(u)] == v}
    std::array<std::vector<std::vector<double>>, 2> T;
    for (int v = 0; v < 2; ++v) {
        T[v].resize(n + 1);
        T[v][0].resize(n + 1);
        for (int base = 0; base <= n; ++base)
            T[v][0][base] = s.at_weight(base) == (v == 1) ? 1.0 : 0.0;
        for (int m = 1; m <= n; ++m) {
            T[v][m].resize(n - m + 1);
            for (int base = 0; base <= n - m; ++base)
                T[v][m][base] = T[v][m - 1][base] + T[v][m - 1][base + 1];
        }
    }
    // binomials and alpha powers
    std::vector<std::vector<double>> C(n + 1);
    for (int i = 0; i <= n; ++i) {
        C[i].resize(i + 1);
        C[i][0] = 1.0;
        for (int j = 1; j <= i; ++j)
            C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0.0);
    }
    std::vector<double> ap(n + 1), nap(n + 1);
    ap[0] = nap[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        ap[i] = ap[i - 1] * a;
        nap[i] = nap[i - 1] * na;
    }
    double scale = std::ldexp(1.0, -n);
    SymmetricTables tab;
    tab.n = n;
    tab.F.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        tab.F[k].resize(k + 1);
        for (int w = 0; w <= k; ++w) {
            for (int v = 0; v < 2; ++v) {
                KahanSum acc;
                for (int aa = 0; aa <= w; ++aa)
                    for (int bb = 0; bb <= k - w; ++bb) {
                        double tcount = T[v][n - k][aa + bb];
                        if (tcount == 0.0) continue;
                        acc.add(C[w][aa] * C[k - w][bb] * ap[w - aa + bb] *
                                nap[aa + (k - w) - bb] * tcount);
                    }
                tab.F[k][w][v] = scale * acc.value();
            }
        }
    }
    tab.pv = {tab.F[0][0][0], tab.F[0][0][1]};
    return tab;
}

}  // namespace

CostReport seq_cost_symmetric(const SymmetricProfile& s, ChannelParams ch, LossKind loss) {
    check_alpha(ch);
    int n = s.arity();
    if (ch.alpha == 0.0 && loss == LossKind::quadratic)
        return seq_cost_noiseless_symmetric(s, loss);
    auto tab = symmetric_joint(s, ch);
    // C(k,w) as doubles
    std::vector<std::vector<double>> C(n + 1);
    for (int i = 0; i <= n; ++i) {
        C[i].resize(i + 1);
        C[i][0] = 1.0;
        for (int j = 1; j <= i; ++j)
            C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0.0);
    }
    CostReport rep;
    rep.n = n;
    rep.loss = loss;
    rep.per_step.assign(n, 0.0);
    for (int v = 0; v < 2; ++v) {
        if (tab.pv[v] <= 0.0) continue;
        double inv_pv = 1.0 / tab.pv[v];
        for (int k = 1; k <= n; ++k) {
            KahanSum acc;
            for (int w = 0; w <= k - 1; ++w) {
                double parent = tab.F[k - 1][w][v];
                if (parent <= 0.0) continue;
                double q = tab.F[k][w + 1][v] / parent;
                acc.add(C[k - 1][w] * parent * inv_pv * step_loss(loss, q));
            }
            double sv = acc.value();
            rep.by_value[v] += sv;
            rep.per_step[k - 1] += tab.pv[v] * sv;
        }
        rep.total += tab.pv[v] * rep.by_value[v];
    }
    return rep;
}

double cond_entropy(const TruthTable& b, ChannelParams ch) {
    check_alpha(ch);
    int n = b.arity();
    std::uint64_t w = b.weight();
    std::size_t size = std::size_t{1} << n;
    double h = 0.0;
    for (int v = 0; v < 2; ++v) {
        std::uint64_t cnt = v ? w : size - w;
        if (cnt == 0) continue;
        auto p = output_distribution(b, v, ch);
        KahanSum acc;
        for (double x : p)
            if (x > 0.0) acc.add(-x * std::log2(x));
        h += (static_cast<double>(cnt) / size) * acc.value();
    }
    return h;
}

double cond_entropy_symmetric(const SymmetricProfile& s, ChannelParams ch) {
    check_alpha(ch);
    int n = s.arity();
    auto tab = symmetric_joint(s, ch);
    std::vector<double> logC(n + 1);
    {
        double c = 0.0;
        for (int w = 0; w <= n; ++w) {
            logC[w] = c;
            c += std::log2(static_cast<double>(n - w)) - std::log2(static_cast<double>(w + 1));
        }
    }
    double h = 0.0;
    for (int v = 0; v < 2; ++v) {
        if (tab.pv[v] <= 0.0) continue;
        KahanSum acc;
        for (int w = 0; w <= n; ++w) {
            double p = tab.F[n][w][v] / tab.pv[v];
            if (p <= 0.0) continue;
            // C(n,w) identical terms, each of probability p
            acc.add(-std::exp2(logC[w] + std::log2(p)) * std::log2(p));
        }
        h += tab.pv[v] * acc.value();
    }
    return h;
}

double mutual_information(const TruthTable& b, ChannelParams ch) {
    return b.arity() - cond_entropy(b, ch);
}

double h_maj_given_y(int n, ChannelParams ch) {
    if (n % 2 == 0) throw std::domain_error("h_maj_given_y: n must be odd");
    if (n > 25) throw std::domain_error("h_maj_given_y: arity cap is 25");
    double h_y_given_maj = cond_entropy_symmetric(majority(n), ch);
    return 1.0 + h_y_given_maj - n;
}

double smse_of_distribution(const std::vector<double>& dist, int n) {
    if (dist.size() != (std::size_t{1} << n))
        throw std::invalid_argument("smse_of_distribution: size != 2^n");
    double mass = 0.0;
    for (double p : dist) {
        if (p < -1e-12) throw std::invalid_argument("smse_of_distribution: negative mass");
        mass += p;
    }
    if (std::abs(mass - 1.0) > 1e-9)
        throw std::invalid_argument("smse_of_distribution: mass != 1");
    auto levels = prefix_marginals(dist, n);
    double total = 0.0;
    for (int k = 1; k <= n; ++k) {
        KahanSum acc;
        const auto& parent = levels[k - 1];
        const auto& child = levels[k];
        for (std::size_t j = 0; j < parent.size(); ++j) {
            if (parent[j] <= 0.0) continue;
            double q = child[2 * j + 1] / parent[j];
            acc.add(parent[j] * q * (1.0 - q));
        }
        total += acc.value();
    }
    return total;
}

std::pair<double, double> smse_channel_compose_check(const std::vector<double>& dist,
                                                     int n, ChannelParams ch) {
    check_alpha(ch);
    std::vector<double> out = dist;
    double a = ch.alpha, na = 1.0 - a;
    std::size_t size = out.size();
    for (int k = 0; k < n; ++k) {
        std::size_t stride = std::size_t{1} << k;
        for (std::size_t base = 0; base < size; base += 2 * stride)
            for (std::size_t j = 0; j < stride; ++j) {
                double p0 = out[base + j];
                double p1 = out[base + stride + j];
                out[base + j] = na * p0 + a * p1;
                out[base + stride + j] = a * p0 + na * p1;
            }
    }
    double left = smse_of_distribution(out, n);
    double right = ch.alpha * (1.0 - ch.alpha) * n +
                   (1.0 - 2.0 * ch.alpha) * (1.0 - 2.0 * ch.alpha) * smse_of_distribution(dist, n);
    return {left, right};
}

Rational tmaj_marginal(int n, double t) {
    if (t < 0.0 || t > 1.0) throw std::domain_error("tmaj_marginal: t outside [0,1]");
    int k0 = static_cast<int>(std::ceil(t * n - 1e-9));
    if (k0 < 0) k0 = 0;
    if (k0 > n) throw std::domain_error("tmaj_marginal: empty support");
    // uniform over weight >= k0; by symmetry P[V_1=1] = E[wt]/n
    BigInt num = 0, den = 0;
    BigInt c = binomial_exact(n, k0);
    for (int m = k0; m <= n; ++m) {
        num += c * m;
        den += c;
        if (m < n) {
            c *= (n - m);
            c /= (m + 1);
        }
    }
    return Rational(num, den * n);
}

}  // namespace boolpred
