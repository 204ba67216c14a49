#include "doctest.h"

#include <cmath>
#include <numbers>

#include "boolpred/exact.hpp"
#include "boolpred/numerics.hpp"
#include "oracle.hpp"

using namespace boolpred;
namespace bt = boolpred::testing;

namespace {
const std::vector<double> kAlphaGrid = {0.0,  0.05, 0.1,  0.15, 0.2, 0.25,
                                        0.3,  0.35, 0.4,  0.45, 0.5};
}

TEST_CASE("output_distribution edge channels") {
    auto b = majority(3).expand();
    SUBCASE("alpha = 0: uniform on the preimage") {
        auto p = output_distribution(b, true, {0.0});
        for (std::uint32_t y = 0; y < 8; ++y)
            CHECK(p[y] == doctest::Approx(b(y) ? 0.25 : 0.0));
    }
    SUBCASE("alpha = 1/2: uniform everywhere") {
        for (bool v : {false, true}) {
            auto p = output_distribution(b, v, {0.5});
            for (double x : p) CHECK(x == doctest::Approx(0.125).epsilon(1e-14));
        }
    }
    SUBCASE("dictator product law") {
        auto p = output_distribution(dictator(2, 1), true, {0.1});
        // y_1 ~ Bern(0.9), y_2 uniform, independent
        CHECK(p[0] == doctest::Approx(0.05));
        CHECK(p[1] == doctest::Approx(0.05));
        CHECK(p[2] == doctest::Approx(0.45));
        CHECK(p[3] == doctest::Approx(0.45));
    }
    CHECK_THROWS_AS(output_distribution(constant_fn(3, true).expand(), false, {0.1}),
                    std::domain_error);
}

TEST_CASE("output_distribution matches pairwise-sum oracle") {
    for (int n : {2, 3, 5})
        for (double a : {0.0, 0.13, 0.5})
            for (int seed = 0; seed < 4; ++seed) {
                auto b = bt::random_table(n, 991 * n + seed);
                for (int v = 0; v < 2; ++v) {
                    std::uint64_t w = b.weight();
                    if ((v ? w : b.size() - w) == 0) continue;
                    auto got = output_distribution(b, v == 1, {a});
                    auto want = bt::brute_output_distribution(b, v == 1, a);
                    for (std::size_t i = 0; i < got.size(); ++i)
                        CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
                }
            }
}

TEST_CASE("prefix marginal consistency") {
    auto b = bt::random_table(6, 42);
    auto levels = prefix_marginals(output_distribution(b, true, {0.2}), 6);
    for (int k = 0; k < 6; ++k)
        for (std::size_t j = 0; j < levels[k].size(); ++j)
            CHECK(levels[k][j] ==
                  doctest::Approx(levels[k + 1][2 * j] + levels[k + 1][2 * j + 1])
                      .epsilon(1e-12));
}

TEST_CASE("seq_cost_noiseless majority(3) = 23/48") {
    auto rep = seq_cost_noiseless(majority(3).expand(), LossKind::quadratic);
    REQUIRE(rep.total_exact.has_value());
    CHECK(*rep.total_exact == Rational(23, 48));
    // hand-derived steps 3/16, 1/6, 1/8
    CHECK((*rep.per_step_exact)[0] == Rational(3, 16));
    CHECK((*rep.per_step_exact)[1] == Rational(1, 6));
    CHECK((*rep.per_step_exact)[2] == Rational(1, 8));
    // the enumeration oracle agrees
    CHECK(bt::brute_noiseless_smse(majority(3).expand()) == Rational(23, 48));
}

TEST_CASE("seq_cost_noiseless special forms") {
    for (int n : {2, 3, 5, 8}) {
        auto rep = seq_cost_noiseless(parity(n).expand(), LossKind::quadratic);
        CHECK(*rep.total_exact == Rational(n - 1, 4));
    }
    CHECK(*seq_cost_noiseless(dictator(5, 1), LossKind::quadratic).total_exact == 1);
    for (int n : {2, 4, 7})
        CHECK(*seq_cost_noiseless(dictator(n, 1), LossKind::quadratic).total_exact ==
              Rational(n - 1, 4));
}

TEST_CASE("seq_cost_noiseless equals enumeration oracle on random tables") {
    for (int n = 2; n <= 7; ++n)
        for (int seed = 0; seed < 8; ++seed) {
            auto b = bt::random_table(n, 5 * n + seed);
            auto rep = seq_cost_noiseless(b, LossKind::quadratic);
            CHECK(*rep.total_exact == bt::brute_noiseless_smse(b));
        }
}

TEST_CASE("seq_cost closed forms") {
    // constant: Q_k = 1/2 at every step
    auto c5 = constant_fn(5, true).expand();
    for (double a : kAlphaGrid)
        CHECK(seq_cost(c5, {a}, LossKind::quadratic).total ==
              doctest::Approx(5.0 / 4).epsilon(1e-12));
    // dictator: (n - (1-2a)^2)/4
    for (int n : {2, 5, 9})
        for (double a : kAlphaGrid) {
            double g = 1 - 2 * a;
            CHECK(seq_cost(dictator(n, 1), {a}, LossKind::quadratic).total ==
                  doctest::Approx((n - g * g) / 4).epsilon(1e-12));
        }
}

TEST_CASE("seq_cost matches brute oracle under noise, both losses") {
    for (int n : {2, 4, 6})
        for (double a : {0.07, 0.25, 0.45})
            for (int seed = 0; seed < 3; ++seed) {
                auto b = bt::random_table(n, 17 * n + seed);
                CHECK(seq_cost(b, {a}, LossKind::quadratic).total ==
                      doctest::Approx(bt::brute_noisy_cost(b, a, false)).epsilon(1e-11));
                CHECK(seq_cost(b, {a}, LossKind::logarithmic).total ==
                      doctest::Approx(bt::brute_noisy_cost(b, a, true)).epsilon(1e-11));
            }
}

TEST_CASE("CostReport internal consistency") {
    for (int seed = 0; seed < 5; ++seed) {
        auto b = bt::random_table(5, 300 + seed);
        auto rep = seq_cost(b, {0.2}, LossKind::quadratic);
        double sum = 0;
        for (double s : rep.per_step) {
            CHECK(s >= 0.0);
            CHECK(s <= 0.25 + 1e-12);
            sum += s;
        }
        CHECK(rep.total == doctest::Approx(sum).epsilon(1e-12));
        double w = static_cast<double>(b.weight()) / b.size();
        CHECK(rep.total ==
              doctest::Approx(w * rep.by_value[1] + (1 - w) * rep.by_value[0])
                  .epsilon(1e-12));
    }
}

TEST_CASE("complement invariance") {
    for (int seed = 0; seed < 6; ++seed) {
        auto b = bt::random_table(5, 700 + seed);
        auto r1 = seq_cost(b, {0.15}, LossKind::quadratic);
        auto r2 = seq_cost(b.complement(), {0.15}, LossKind::quadratic);
        CHECK(r1.total == r2.total);  // bit-identical by the mirrored computation
        auto e1 = seq_cost_noiseless(b, LossKind::quadratic);
        auto e2 = seq_cost_noiseless(b.complement(), LossKind::quadratic);
        CHECK(*e1.total_exact == *e2.total_exact);
    }
}

TEST_CASE("coordinate permutation invariance of totals") {
    auto m = majority(5).expand();
    CHECK(seq_cost(m.permute({3, 1, 5, 2, 4}), {0.2}, LossKind::quadratic).total ==
          doctest::Approx(seq_cost(m, {0.2}, LossKind::quadratic).total).epsilon(1e-12));
    // general b: the multiset of per-step costs changes but the permuted
    // function's cost equals the cost computed after permuting
    auto b = bt::random_table(4, 9001);
    auto perm = b.permute({2, 4, 1, 3});
    CHECK(seq_cost(perm, {0.1}, LossKind::quadratic).total ==
          doctest::Approx(bt::brute_noisy_cost(perm, 0.1, false)).epsilon(1e-11));
}

TEST_CASE("symmetric engine equals dense engine") {
    for (int n : {3, 4, 6, 9})
        for (double a : kAlphaGrid)
            for (auto s : {majority(n), parity(n), maj_q(n, 0.3)}) {
                auto fast = seq_cost_symmetric(s, {a}, LossKind::quadratic);
                auto dense = seq_cost(s.expand(), {a}, LossKind::quadratic);
                CHECK(fast.total == doctest::Approx(dense.total).epsilon(1e-10));
                for (int k = 0; k < n; ++k)
                    CHECK(fast.per_step[k] ==
                          doctest::Approx(dense.per_step[k]).epsilon(1e-10));
            }
}

TEST_CASE("symmetric engine basics") {
    CHECK(seq_cost_symmetric(majority(3), {0.0}, LossKind::quadratic).total ==
          doctest::Approx(23.0 / 48).epsilon(1e-12));
    for (auto s : {majority(7), parity(6), maj_q(5, 0.2)})
        CHECK(seq_cost_symmetric(s, {0.5}, LossKind::quadratic).total ==
              doctest::Approx(s.arity() / 4.0).epsilon(1e-12));
    CHECK(*seq_cost_noiseless_symmetric(majority(3), LossKind::quadratic).total_exact ==
          Rational(23, 48));
}

TEST_CASE("cond_entropy closed forms and chain rule") {
    for (int n : {2, 5, 8}) {
        for (double a : {0.0, 0.1, 0.3}) {
            CHECK(cond_entropy(dictator(n, 1), {a}) ==
                  doctest::Approx(n - 1 + binent(a)).epsilon(1e-10));
        }
        CHECK(cond_entropy(constant_fn(n, true).expand(), {0.2}) ==
              doctest::Approx(static_cast<double>(n)).epsilon(1e-10));
        CHECK(cond_entropy(parity(n).expand(), {0.0}) ==
              doctest::Approx(n - 1.0).epsilon(1e-10));
    }
}

TEST_CASE("log-loss total equals conditional entropy") {
    for (int seed = 0; seed < 5; ++seed) {
        auto b = bt::random_table(5, 1200 + seed);
        for (double a : {0.05, 0.2, 0.45})
            CHECK(seq_cost(b, {a}, LossKind::logarithmic).total ==
                  doctest::Approx(cond_entropy(b, {a})).epsilon(1e-10));
    }
    for (int n : {4, 7})
        for (double a : {0.1, 0.3}) {
            CHECK(seq_cost_symmetric(majority(n), {a}, LossKind::logarithmic).total ==
                  doctest::Approx(cond_entropy_symmetric(majority(n), {a}))
                      .epsilon(1e-10));
            CHECK(cond_entropy_symmetric(majority(n), {a}) ==
                  doctest::Approx(cond_entropy(majority(n).expand(), {a}))
                      .epsilon(1e-10));
        }
}

TEST_CASE("mutual information") {
    CHECK(mutual_information(dictator(4, 1), {0.1}) ==
          doctest::Approx(1 - binent(0.1)).epsilon(1e-6));
    CHECK(mutual_information(constant_fn(4, false).expand(), {0.2}) ==
          doctest::Approx(0.0).epsilon(1e-10));
    double v = mutual_information(majority(5).expand(), {0.1});
    CHECK(v > 0.0);
    CHECK(v < 1 - binent(0.1));
}

TEST_CASE("h_maj_given_y endpoints") {
    CHECK(h_maj_given_y(5, {0.0}) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(h_maj_given_y(5, {0.5}) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(h_maj_given_y(9, {0.5}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(h_maj_given_y(4, {0.1}), std::domain_error);
}

TEST_CASE("channel composition inequality") {
    SUBCASE("product law equality") {
        // V^3 i.i.d. Bern(0.3) through BSC(0.2)
        int n = 3;
        std::vector<double> dist(8);
        for (std::uint32_t v = 0; v < 8; ++v) {
            int w = __builtin_popcount(v);
            dist[v] = std::pow(0.3, w) * std::pow(0.7, n - w);
        }
        auto [left, right] = smse_channel_compose_check(dist, n, {0.2});
        CHECK(left == doctest::Approx(right).epsilon(1e-12));
    }
    SUBCASE("single sample arithmetic") {
        std::vector<double> dist = {0.7, 0.3};
        auto [left, right] = smse_channel_compose_check(dist, 1, {0.1});
        CHECK(left == doctest::Approx(0.2244).epsilon(1e-12));
        CHECK(right == doctest::Approx(0.2244).epsilon(1e-12));
    }
    SUBCASE("alpha = 1/2 gives n/4") {
        std::vector<double> dist = {0.5, 0.1, 0.1, 0.0, 0.05, 0.05, 0.1, 0.1};
        auto [left, right] = smse_channel_compose_check(dist, 3, {0.5});
        CHECK(left == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("inequality holds for random joint laws") {
        std::uint64_t s = 12345;
        auto next = [&s]() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            return s;
        };
        for (int n : {2, 4, 6, 8})
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<double> dist(std::size_t{1} << n);
                double tot = 0;
                for (auto& d : dist) {
                    d = (next() % 1000003) / 1000003.0;
                    tot += d;
                }
                for (auto& d : dist) d /= tot;
                for (double a : {0.1, 0.35}) {
                    auto [left, right] = smse_channel_compose_check(dist, n, {a});
                    CHECK(left >= right - 1e-10);
                }
            }
    }
}

TEST_CASE("tmaj_marginal") {
    CHECK(tmaj_marginal(3, 0.5) == Rational(3, 4));
    CHECK(tmaj_marginal(10, 0.0) == Rational(1, 2));
    CHECK(tmaj_marginal(10, 1.0) == 1);
    // finite-n lower bound max(1/2, t) <= P[V_k = 1]
    for (int n = 1; n <= 40; ++n)
        for (int ti = 0; ti <= 20; ++ti) {
            double t = ti / 20.0;
            Rational m = tmaj_marginal(n, t);
            CHECK(to_double(m) >= std::max(0.5, t) - 1e-12);
            CHECK(m <= 1);
        }
}
