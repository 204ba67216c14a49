#include "boolpred/cli.hpp"

#include <CLI11.hpp>
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "boolpred/bounds.hpp"
#include "boolpred/exact.hpp"
#include "boolpred/numerics.hpp"
#include "boolpred/optdp.hpp"

namespace boolpred {

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

double num12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

struct Output {
    std::string path;  // empty = stdout
    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open output file: " + path);
            f << text;
        }
    }
};

}  // namespace

TruthTable FunctionSpec::as_table() const {
    if (table) return *table;
    return profile->expand();
}

int FunctionSpec::arity() const {
    return table ? table->arity() : profile->arity();
}

FunctionSpec parse_function_spec(const std::string& spec, int n) {
    FunctionSpec fs;
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "dictator") {
        int coord = arg.empty() ? 1 : std::stoi(arg);
        fs.table = dictator(n, coord);
    } else if (name == "majority") {
        fs.profile = majority(n);
    } else if (name == "maj_q") {
        if (arg.empty()) throw std::invalid_argument("maj_q needs a fraction, e.g. maj_q:0.25");
        fs.profile = maj_q(n, std::stod(arg));
    } else if (name == "parity") {
        fs.profile = parity(n);
    } else if (name == "constant0") {
        fs.profile = constant_fn(n, false);
    } else if (name == "constant1") {
        fs.profile = constant_fn(n, true);
    } else {
        throw std::invalid_argument("unknown function spec: " + spec);
    }
    return fs;
}

FunctionSpec load_function_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open function file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    FunctionSpec fs;
    auto j = nlohmann::json::parse(text);
    if (j.contains("profile")) {
        fs.profile = parse_symmetric_profile(text);
    } else {
        fs.table = parse_truth_table(text);
        if (auto sym = detect_symmetric(*fs.table)) fs.profile = sym;
    }
    return fs;
}

namespace {

CostReport cost_for(const FunctionSpec& fs, ChannelParams ch, LossKind loss, bool exact) {
    if (exact) {
        if (ch.alpha != 0.0)
            throw std::domain_error("exact mode requires alpha = 0");
        if (loss != LossKind::quadratic)
            throw std::domain_error("exact mode requires quadratic loss");
        if (fs.profile) return seq_cost_noiseless_symmetric(*fs.profile, loss);
        if (auto sym = detect_symmetric(*fs.table))
            return seq_cost_noiseless_symmetric(*sym, loss);
        return seq_cost_noiseless(*fs.table, loss);
    }
    if (fs.profile) return seq_cost_symmetric(*fs.profile, ch, loss);
    if (auto sym = detect_symmetric(*fs.table)) return seq_cost_symmetric(*sym, ch, loss);
    return seq_cost(*fs.table, ch, loss);
}

int cmd_cost(const FunctionSpec& fs, ChannelParams ch, LossKind loss, bool exact,
             const std::string& format, const Output& out) {
    CostReport rep = cost_for(fs, ch, loss, exact);
    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["n"] = rep.n;
        j["alpha"] = num12(ch.alpha);
        j["loss"] = loss == LossKind::quadratic ? "quad" : "log";
        j["mode"] = exact ? "exact" : "float";
        if (rep.total_exact) {
            j["total"] = rational_str(*rep.total_exact);
            json steps = json::array();
            for (auto& s : *rep.per_step_exact) steps.push_back(rational_str(s));
            j["per_step"] = steps;
        }
        j["total_float"] = num12(rep.total);
        json stepsf = json::array();
        for (double s : rep.per_step) stepsf.push_back(num12(s));
        j["per_step_float"] = stepsf;
        j["by_value"] = {num12(rep.by_value[0]), num12(rep.by_value[1])};
        out.write(j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# boolpred v1\n";
        os << "step,cost\n";
        for (int k = 0; k < rep.n; ++k) os << (k + 1) << "," << fmt12(rep.per_step[k]) << "\n";
        os << "total,"
           << (rep.total_exact ? rational_str(*rep.total_exact) : fmt12(rep.total)) << "\n";
        out.write(os.str());
    }
    return 0;
}

int cmd_table1(int n_max, const Output& out) {
    if (n_max > 11 || n_max < 3 || n_max % 2 == 0)
        throw std::domain_error("table1: n_max must be odd, in [3,11]");
    std::ostringstream os;
    os << "# boolpred v1\n";
    os << "n,smse_majority,smse_optimal,excess,lower_bound_eq3\n";
    for (int n = 3; n <= n_max; n += 2) {
        Rational maj = *seq_cost_noiseless_symmetric(majority(n), LossKind::quadratic)
                            .total_exact;
        Rational opt = dp_optimal(n).optimal_cost();
        Rational excess = maj - opt;
        os << n << "," << fmt4(to_double(maj)) << "," << fmt4(to_double(opt)) << ","
           << fmt4(to_double(excess)) << "," << fmt4(bound_set(n, 0.0).noiseless_lb) << "\n";
    }
    out.write(os.str());
    return 0;
}

json bound_row(int n, double alpha) {
    BoundSet b = bound_set(n, alpha);
    double maj_cost = seq_cost_symmetric(majority(n), ChannelParams{alpha},
                                         LossKind::quadratic)
                          .total;
    json j;
    j["alpha"] = num12(alpha);
    j["noiseless_lb"] = num12(b.noiseless_lb);
    j["maj_noiseless_ub_leading"] = num12(b.maj_noiseless_ub_leading);
    j["dic_noiseless"] = num12(b.dic_noiseless);
    j["noisy_lb"] = num12(b.noisy_lb);
    j["maj_noisy_ub_leading"] = num12(b.maj_noisy_ub_leading);
    if (b.maj_noisy_lb_leading)
        j["maj_noisy_lb_leading"] = num12(*b.maj_noisy_lb_leading);
    else
        j["maj_noisy_lb_leading"] = nullptr;
    j["dic_noisy"] = num12(b.dic_noisy);
    j["mu_alpha"] = num12(b.mu_alpha);
    j["h_maj_gaussian"] = num12(b.h_maj_gaussian);
    if (b.h_maj_quadratic_lb)
        j["h_maj_quadratic_lb"] = num12(*b.h_maj_quadratic_lb);
    else
        j["h_maj_quadratic_lb"] = nullptr;
    j["exact_majority_cost"] = num12(maj_cost);
    j["exact_dictator_cost"] = num12(b.dic_noisy);
    j["asymptotic_flags"] = {"maj_noiseless_ub_leading", "maj_noisy_ub_leading",
                             "maj_noisy_lb_leading", "h_maj_gaussian",
                             "h_maj_quadratic_lb"};
    return j;
}

int cmd_bounds(int n, const std::vector<double>& alphas, const std::string& format,
               const Output& out) {
    if (format == "json") {
        json j;
        j["schema"] = 1;
        j["n"] = n;
        json rows = json::array();
        for (double a : alphas) rows.push_back(bound_row(n, a));
        j["rows"] = rows;
        out.write(j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# boolpred v1\n";
        os << "alpha,noiseless_lb,maj_noiseless_ub_leading*,dic_noiseless,noisy_lb,"
              "maj_noisy_ub_leading*,maj_noisy_lb_leading*,dic_noisy,mu_alpha,"
              "h_maj_gaussian*,h_maj_quadratic_lb*,exact_majority_cost,exact_dictator_cost\n";
        for (double a : alphas) {
            json r = bound_row(n, a);
            os << fmt12(a);
            for (const char* key :
                 {"noiseless_lb", "maj_noiseless_ub_leading", "dic_noiseless", "noisy_lb",
                  "maj_noisy_ub_leading", "maj_noisy_lb_leading", "dic_noisy", "mu_alpha",
                  "h_maj_gaussian", "h_maj_quadratic_lb", "exact_majority_cost",
                  "exact_dictator_cost"}) {
                os << ",";
                if (r[key].is_null())
                    os << "";
                else
                    os << fmt12(r[key].get<double>());
            }
            os << "\n";
        }
        out.write(os.str());
    }
    return 0;
}

int cmd_verify(int n, double alpha, const Output& out) {
    if (n < 2 || n > 4) throw std::domain_error("verify: n must be in [2,4]");
    std::ostringstream os;
    bool ok = true;
    auto report = [&](const std::string& name, bool pass, const std::string& detail) {
        os << (pass ? "PASS" : "FAIL") << " " << name;
        if (!detail.empty()) os << " (" << detail << ")";
        os << "\n";
        ok = ok && pass;
    };

    // DP vs brute force at alpha = 0
    auto brute = brute_force(n, BruteObjective::min_smse, ChannelParams{0.0});
    Rational dp_min = dp_optimal(n).optimal_cost();
    report("dp-vs-brute-minimum", brute.exact_value == dp_min,
           "min = " + rational_str(dp_min));

    // balanced maximum attained by dictator
    std::int64_t half = std::int64_t{1} << (n - 1);
    auto mx = brute_force(n, BruteObjective::max_smse, ChannelParams{0.0}, half);
    report("balanced-max-is-dictator", mx.exact_value == Rational(n - 1, 4),
           "max = " + rational_str(mx.exact_value));

    // lower-bound certification and mutual-information cap over every function
    double lb0 = (n - 2.0 * std::log(2.0)) / 4.0;
    double g = 1.0 - 2.0 * alpha;
    double lbn = (n - 2.0 * std::log(2.0) * g * g) / 4.0;
    double mi_cap = 1.0 - binent(alpha);
    bool lb0_ok = true, lbn_ok = true, conj_ok = true;
    std::size_t size = std::size_t{1} << n;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << size); ++code) {
        std::vector<bool> bits(size);
        for (std::size_t i = 0; i < size; ++i) bits[i] = (code >> i) & 1u;
        TruthTable b(n, std::move(bits));
        Rational noiseless = *seq_cost_noiseless(b, LossKind::quadratic).total_exact;
        if (to_double(noiseless) < lb0 - 1e-12) lb0_ok = false;
        double noisy = seq_cost(b, ChannelParams{alpha}, LossKind::quadratic).total;
        if (noisy < lbn - 1e-9) lbn_ok = false;
        if (mutual_information(b, ChannelParams{alpha}) > mi_cap + 1e-9) conj_ok = false;
    }
    report("noiseless-lower-bound", lb0_ok, "");
    report("noisy-lower-bound", lbn_ok, "");
    report("mutual-information-cap", conj_ok, "");

    // Pinsker grid
    bool pinsker_ok = true;
    for (int i = 0; i <= 100 && pinsker_ok; ++i)
        for (int jj = 1; jj < 99; ++jj) {
            double a = i / 100.0, bb = jj / 99.0;
            if (bindiv(a, bb) < (4.0 / (2.0 * std::log(2.0))) * (a - bb) * (a - bb) - 1e-12) {
                pinsker_ok = false;
                break;
            }
        }
    report("pinsker-grid", pinsker_ok, "");

    out.write(os.str());
    return ok ? 0 : kExitVerifyFail;
}

std::vector<double> parse_alpha_grid(const std::string& grid) {
    std::vector<double> out;
    std::stringstream ss(grid);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    for (double a : out)
        if (!(a >= 0.0 && a <= 0.5)) throw std::domain_error("alpha outside [0, 1/2]");
    return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Sequential prediction cost of BSC outputs given a Boolean quantizer"};
    app.require_subcommand(1);

    // cost
    auto* cost = app.add_subcommand("cost", "sequential prediction cost of one function");
    std::string fn_spec, fn_file, loss_s = "quad", mode_s = "float", format = "json", out_path;
    int n = 0;
    double alpha = 0.0;
    cost->add_option("--fn", fn_spec, "named constructor");
    cost->add_option("--fn-file", fn_file, "truth table / profile JSON file");
    cost->add_option("--n", n, "input arity");
    cost->add_option("--alpha", alpha, "crossover probability");
    cost->add_option("--loss", loss_s, "quad | log")->check(CLI::IsMember({"quad", "log"}));
    cost->add_option("--mode", mode_s, "exact | float")->check(CLI::IsMember({"exact", "float"}));
    cost->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    cost->add_option("--out", out_path, "output path (default stdout)");

    // table1
    auto* table1 = app.add_subcommand("table1", "majority vs optimal noiseless SMSE table");
    int n_max = 11;
    std::string t1_out;
    table1->add_option("--n-max", n_max, "largest odd n (<= 11)");
    table1->add_option("--out", t1_out, "output path");

    // bounds / sweep
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds at one alpha");
    int bn = 9;
    double balpha = 0.1;
    std::string bformat = "json", bout;
    bounds_cmd->add_option("--n", bn, "arity");
    bounds_cmd->add_option("--alpha", balpha, "crossover probability");
    bounds_cmd->add_option("--format", bformat, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    bounds_cmd->add_option("--out", bout, "output path");

    auto* sweep = app.add_subcommand("sweep", "bounds over an alpha grid");
    int sn = 9;
    std::string sgrid = "0,0.05,0.1,0.15,0.2,0.25,0.3,0.35,0.4,0.45,0.5";
    std::string sformat = "csv", sout;
    sweep->add_option("--n", sn, "arity");
    sweep->add_option("--alpha-grid", sgrid, "comma-separated alphas");
    sweep->add_option("--format", sformat, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_option("--out", sout, "output path");

    // verify
    auto* verify = app.add_subcommand("verify", "brute-force invariant checks (n <= 4)");
    int vn = 3;
    double valpha = 0.0;
    std::string vout;
    verify->add_option("--n", vn, "arity (2..4)");
    verify->add_option("--alpha", valpha, "crossover probability");
    verify->add_option("--out", vout, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cost) {
            if (fn_spec.empty() == fn_file.empty())
                throw std::invalid_argument("cost: give exactly one of --fn / --fn-file");
            FunctionSpec fs =
                fn_file.empty() ? parse_function_spec(fn_spec, n) : load_function_file(fn_file);
            return cmd_cost(fs, ChannelParams{alpha},
                            loss_s == "quad" ? LossKind::quadratic : LossKind::logarithmic,
                            mode_s == "exact", format, Output{out_path});
        }
        if (*table1) return cmd_table1(n_max, Output{t1_out});
        if (*bounds_cmd) return cmd_bounds(bn, {balpha}, bformat, Output{bout});
        if (*sweep) return cmd_bounds(sn, parse_alpha_grid(sgrid), sformat, Output{sout});
        if (*verify) return cmd_verify(vn, valpha, Output{vout});
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace boolpred
