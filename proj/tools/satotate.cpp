// Command-line front end: builds angle caches, verifies equidistribution
// bounds against data, evaluates the explicit-bound formulas, audits
// Atkin-Serre exceptional primes and zero counts.
//
// Exit codes: 0 all checks satisfied (or nothing checked), 1 a satisfied
// flag came back false, 2 usage or runtime error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "satotate/bounds.hpp"
#include "satotate/conductor.hpp"
#include "satotate/errors.hpp"
#include "satotate/extremal.hpp"
#include "satotate/primes.hpp"
#include "satotate/store.hpp"

using namespace satotate;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

// Accepts "1.23", "pi", "pi/3", "2pi/3", "0.5pi".
double parse_angle(const std::string& s) {
    auto pos = s.find("pi");
    if (pos == std::string::npos) return std::stod(s);
    double num = 1.0;
    if (pos > 0) num = std::stod(s.substr(0, pos));
    double den = 1.0;
    auto rest = s.substr(pos + 2);
    if (!rest.empty()) {
        if (rest[0] != '/') throw DomainError("bad angle '" + s + "'");
        den = std::stod(rest.substr(1));
    }
    return num * kPi / den;
}

Interval parse_interval(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw DomainError("interval must be 'a,b' (radians; 'pi' forms allowed)");
    return Interval(parse_angle(s.substr(0, comma)),
                    parse_angle(s.substr(comma + 1)));
}

struct Output {
    bool as_json = false;
    bool with_timing = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int emit(ReportDocument& doc) const {
        if (with_timing)
            doc.timing_ms =
                std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
        if (as_json)
            std::cout << to_json(doc).dump(2) << "\n";
        else
            print_report(std::cout, doc);
        return doc.all_satisfied() ? 0 : 1;
    }
};

std::string default_cache_path(const std::string& label) {
    const char* dir = std::getenv("SATOTATE_CACHE_DIR");
    std::filesystem::path base = dir ? dir : ".";
    return (base / (label + ".csv")).string();
}

CurveParams parse_curve(const std::string& spec, std::int64_t N,
                        const std::string& label) {
    std::istringstream ss(spec);
    std::vector<std::int64_t> a;
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(std::stoll(tok));
    if (a.size() != 5)
        throw DomainError("--curve needs a1,a2,a3,a4,a6");
    return CurveParams(a[0], a[1], a[2], a[3], a[4], N, label);
}

json form_json(const FormParams& f) {
    return json{{"k", f.k},
                {"N", f.N},
                {"Q", f.Q},
                {"squarefree_level", f.squarefree_level},
                {"elliptic", f.elliptic},
                {"label", f.label}};
}

int run(int argc, char** argv) {
    CLI::App app{"Satake angles and explicit Sato-Tate bounds"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Output out;
    int threads = 1;
    bool log_space = false;
    app.add_flag("--json", out.as_json, "emit reports as JSON");
    app.add_flag("--timing", out.with_timing,
                 "include wall-clock timing in reports (breaks byte determinism)");
    app.add_option("--threads", threads, "worker threads for angle generation");
    app.add_flag("--log-space", log_space,
                 "treat --u as the primary variable and report per-x bounds");

    // ---- angles ---------------------------------------------------------
    auto* angles = app.add_subcommand("angles", "build or extend an angle cache");
    std::string curve_spec, coeff_path, out_path, label = "form";
    std::int64_t N = 0, xmax = 0;
    int k = 2;
    double Qflag = 0.0;
    bool elliptic_flag = false;
    angles->add_option("--curve", curve_spec, "a1,a2,a3,a4,a6");
    angles->add_option("--coeffs", coeff_path, "coefficient file (p a_p per line)");
    angles->add_option("--N", N, "level / conductor")->required();
    angles->add_option("--k", k, "weight (coefficient input; curves are k=2)");
    angles->add_option("--Q", Qflag, "conductor proxy override");
    angles->add_flag("--elliptic", elliptic_flag, "mark a coefficient form elliptic");
    angles->add_option("--label", label, "cache label");
    angles->add_option("--xmax", xmax, "prime cap")->required();
    angles->add_option("--out", out_path, "cache path (default: $SATOTATE_CACHE_DIR/<label>.csv)");

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "equidistribution vs the explicit bounds");
    std::string cache_path, interval_spec = "0,pi", plot_path;
    double xq = 0.0, grid_step = kPi / 64.0;
    int bins = 64;
    verify->add_option("--cache", cache_path)->required();
    verify->add_option("--x", xq)->required();
    verify->add_option("--interval", interval_spec, "a,b in radians ('pi' forms ok)");
    verify->add_option("--grid", grid_step, "discrepancy grid step");
    verify->add_option("--bins", bins, "histogram bins");
    verify->add_option("--plot", plot_path, "write theta histogram CSV here");

    // ---- bounds ---------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "evaluate explicit-bound formulas");
    double bx = 0.0, bu = 0.0, bT = 0.0, by = 0.0, bQ = 0.0, bt = 0.0;
    std::int64_t bN = 0;
    int bk = 2, bm = 1, bM = 1;
    bool sel_ell = false, sel_eta = false, sel_minrho = false, sel_zc = false,
         sel_n1 = false, sel_r1 = false, sel_r2 = false, sel_r3 = false,
         sel_et = false, sel_choose = false, sel_constants = false,
         sel_classical = false, sel_logc_sym = false, sel_logc_mxm = false,
         sel_main = false;
    std::string zc_mode = "full", red_spec;
    int cond_m = 0;
    bounds->add_option("--x", bx);
    bounds->add_option("--u", bu, "log x, used directly when given");
    bounds->add_option("--k", bk);
    bounds->add_option("--Q", bQ);
    bounds->add_option("--N", bN);
    bounds->add_option("--m", bm);
    bounds->add_option("--T", bT);
    bounds->add_option("--y", by);
    bounds->add_option("--M", bM);
    bounds->add_option("--t", bt);
    bounds->add_flag("--ell", sel_ell);
    bounds->add_flag("--eta", sel_eta);
    bounds->add_flag("--min-rho", sel_minrho);
    bounds->add_flag("--zero-count", sel_zc);
    bounds->add_option("--mode", zc_mode, "zero-count mode: full|T200|T1");
    bounds->add_flag("--n1", sel_n1);
    bounds->add_flag("--r1", sel_r1);
    bounds->add_flag("--r2", sel_r2);
    bounds->add_flag("--r3", sel_r3);
    bounds->add_flag("--erdos-turan", sel_et);
    bounds->add_flag("--choose-params", sel_choose);
    bounds->add_flag("--classical", sel_classical);
    bounds->add_flag("--logc-sym", sel_logc_sym);
    bounds->add_flag("--logc-mxm", sel_logc_mxm);
    bounds->add_flag("--main", sel_main);
    bounds->add_flag("--constants", sel_constants);
    bounds->add_option("--conductor", red_spec,
                       "reduction data p:mult|add:vp[,...] for the proof bound");
    bounds->add_option("--conductor-m", cond_m, "symmetric power for --conductor");

    // ---- atkin-serre ----------------------------------------------------
    auto* as = app.add_subcommand("atkin-serre", "dyadic exceptional-prime audit");
    std::string as_cache, as_mode = "both";
    double as_x = 0.0;
    as->add_option("--cache", as_cache)->required();
    as->add_option("--x", as_x)->required();
    as->add_option("--mode", as_mode, "statement|proof|both");

    // ---- zero-audit -----------------------------------------------------
    auto* za = app.add_subcommand("zero-audit", "zero count vs the vertical bound");
    std::string za_path;
    double za_T = 0.0, za_Q = 0.0;
    int za_m = 1, za_k = 2;
    za->add_option("--zeros", za_path)->required();
    za->add_option("--T", za_T)->required();
    za->add_option("--m", za_m)->required();
    za->add_option("--k", za_k)->required();
    za->add_option("--Q", za_Q)->required();

    // ---- constants ------------------------------------------------------
    auto* consts = app.add_subcommand("constants", "dump the constants table");

    CLI11_PARSE(app, argc, argv);

    if (angles->parsed()) {
        if (curve_spec.empty() == coeff_path.empty())
            throw DomainError("exactly one of --curve / --coeffs required");
        if (out_path.empty()) out_path = default_cache_path(label);

        FormParams form = [&] {
            if (!curve_spec.empty()) {
                auto curve = parse_curve(curve_spec, N, label);
                return FormParams::for_curve(curve);
            }
            auto squarefree = [](std::int64_t n) {
                for (std::int64_t d = 2; d * d <= n; ++d)
                    if (n % (d * d) == 0) return false;
                return true;
            };
            FormParams f(k, N, 1.0, squarefree(N), elliptic_flag, label);
            f.Q = Qflag > 0.0 ? Qflag : q_proxy(f);
            return f;
        }();

        // reuse or extend an existing cache with the same form
        std::optional<AngleTable> cached;
        if (std::filesystem::exists(out_path)) {
            try {
                auto prev = read_angle_cache(out_path);
                if (prev.form.k == form.k && prev.form.N == form.N &&
                    prev.form.Q == form.Q && prev.form.label == form.label)
                    cached = std::move(prev);
            } catch (const Error&) {
                // unreadable cache: rebuild
            }
        }

        AngleTable table{form, xmax, {}};
        if (cached && cached->xmax >= xmax) {
            table = std::move(*cached); // reuse; file stays as-is
        } else {
            if (!curve_spec.empty()) {
                auto curve = parse_curve(curve_spec, N, label);
                if (cached) {
                    // extend: keep computed entries, add the missing range
                    table.entries = std::move(cached->entries);
                    auto primes = sieve_primes(xmax);
                    for (auto p : primes) {
                        if (p <= cached->xmax || N % p == 0) continue;
                        std::int64_t a;
                        try {
                            a = ap_elliptic(curve, p);
                        } catch (const AmbiguousOrder&) {
                            a = ap_enumeration(curve, p);
                        }
                        table.entries.push_back(
                            PrimeAngle{p, a, theta_from_ap(a, p, form.k)});
                    }
                } else {
                    table = build_angle_table(curve, form, xmax, threads);
                }
            } else {
                table = build_angle_table(load_coefficients(coeff_path), form, xmax);
            }
            write_angle_cache(out_path, table);
        }

        ReportDocument doc;
        doc.command = "angles";
        doc.form = form_json(form);
        doc.inputs = json{{"xmax", xmax}, {"out", out_path}};
        doc.empirical = json{{"entries", table.entries.size()}};
        return out.emit(doc);
    }

    if (verify->parsed()) {
        auto table = read_angle_cache(cache_path);
        Interval I = parse_interval(interval_spec);
        auto counts = empirical_counts(table, xq, I);
        if (counts.pi_x == 0) throw EmptyRange("pi(x) = 0");
        std::int64_t pix = counts.pi_x;
        auto nI = counts.pi_f_I;
        double mu = mu_ST(I);
        double vI = counts.vartheta_f_I;
        auto scan = discrepancy_scan(table, xq, grid_step);

        ReportDocument doc;
        doc.command = "verify";
        doc.form = form_json(table.form);
        doc.inputs = json{{"x", xq},
                          {"interval", {I.a, I.b}},
                          {"grid_step", grid_step},
                          {"cache", cache_path}};
        doc.empirical = json{{"pi_f_I", nI},
                             {"pi_x", pix},
                             {"mu_ST", mu},
                             {"vartheta_f_I", vI},
                             {"discrepancy", std::fabs(static_cast<double>(nI) / pix - mu)},
                             {"worst_interval", {scan.worst.a, scan.worst.b}},
                             {"worst_discrepancy", scan.D}};

        double pib = pi_theorem_bound(xq, table.form.k, table.form.N,
                                      table.form.squarefree_level,
                                      table.form.elliptic, pix);
        doc.bounds.push_back(make_bound_report(
            "pi_theorem_bound", json{{"x", xq}, {"k", table.form.k}, {"N", table.form.N}},
            pib, std::fabs(static_cast<double>(nI) - mu * pix)));
        auto mb = main_theorem_bound(xq, table.form.k, table.form.Q);
        doc.bounds.push_back(make_bound_report(
            "main_theorem_bound_effective",
            json{{"x", xq}, {"k", table.form.k}, {"Q", table.form.Q}}, mb.effective,
            std::fabs(vI - mu * xq)));

        if (!plot_path.empty()) {
            std::ofstream pf(plot_path, std::ios::binary);
            if (!pf) throw ParseError("cannot open " + plot_path + " for writing");
            write_angle_histogram(pf, table, xq, bins);
        }
        return out.emit(doc);
    }

    if (bounds->parsed()) {
        ReportDocument doc;
        doc.command = "bounds";
        double u = bu > 0.0 ? bu : (bx > 0.0 ? std::log(bx) : 0.0);
        doc.inputs = json{{"k", bk}, {"Q", bQ}, {"m", bm}};
        if (bu > 0.0) doc.inputs["u"] = bu;
        if (bx > 0.0) doc.inputs["x"] = bx;

        auto push = [&](const std::string& name, json in, double v) {
            doc.bounds.push_back(make_bound_report(name, std::move(in), v));
        };
        double C = (bk - 1) * (bQ > 0 ? bQ : static_cast<double>(bN));
        if (sel_ell) push("ell", json{{"C", C}}, ell_u(u, C));
        if (sel_eta) push("eta_m", json{{"m", bm}, {"T", bT}}, eta_m(bm, bT, bk, bQ));
        if (sel_minrho) push("min_rho", json{{"m", bm}}, min_rho(bm, bk, bQ));
        if (sel_zc) {
            ZeroCountMode mode = zc_mode == "T200" ? ZeroCountMode::T200
                                : zc_mode == "T1"  ? ZeroCountMode::T1
                                                   : ZeroCountMode::full;
            push("zero_count_bound", json{{"T", bT}, {"mode", zc_mode}},
                 zero_count_bound(bT, bm, bk, bQ, mode));
        }
        if (sel_n1) push("N1_bound", json{{"T", bT}}, N1_bound(bT, bm, bk, bQ));
        if (sel_r1) push("R1_bound", json{{"x", bx}, {"y", by}, {"T", bT}},
                         R1_bound(bx, by, bm, bT, bk, bQ));
        if (sel_r2) push("R2_bound", json{{"x", bx}}, R2_bound(bx, bm));
        if (sel_r3) push("R3_bound", json{{"x", bx}, {"y", by}},
                         R3_bound(bx, by, bm, bk, bQ));
        if (sel_et)
            push("erdos_turan_bound", json{{"x", bx}, {"y", by}, {"M", bM}},
                 erdos_turan_bound(bx, by, bM, 0.0,
                                   std::vector<double>(static_cast<std::size_t>(bM), 0.0)));
        if (sel_choose) {
            auto cp = choose_parameters(u, bk, bQ);
            json in{{"u", u}};
            push("choose_parameters.M_f", in, cp.M_f);
            push("choose_parameters.M", in, static_cast<double>(cp.M));
            push("choose_parameters.T", in, cp.T);
            push("choose_parameters.y_over_x", in, cp.y_over_x);
            doc.empirical = json{{"triviality_regime", cp.triviality_regime}};
        }
        if (sel_logc_sym)
            push("logC_sym", json{{"m", bm}, {"t", bt}},
                 logC_sym(bm, bt, bk, std::log(static_cast<double>(bN > 0 ? bN : 1))));
        if (sel_logc_mxm) push("logC_mxm", json{{"m", bm}}, logC_mxm(bm, bk, bQ));
        if (sel_main) {
            auto mb = log_space ? main_theorem_bound_per_x(u, bk, bQ)
                                : main_theorem_bound(bx, bk, bQ);
            push("main_theorem_rhs", json{{"log_space", log_space}}, mb.theorem_rhs);
            push("main_theorem_effective", json{{"log_space", log_space}}, mb.effective);
        }
        if (sel_classical) {
            auto cb = classical_prime_bounds(bx);
            if (cb.theta_upper) push("theta_upper", json{{"x", bx}}, *cb.theta_upper);
            if (cb.theta_dev) push("theta_dev", json{{"x", bx}}, *cb.theta_dev);
            if (cb.pi_lower) push("pi_lower", json{{"x", bx}}, *cb.pi_lower);
            if (cb.pi_upper) push("pi_upper", json{{"x", bx}}, *cb.pi_upper);
            if (cb.pi_li_dev) push("pi_li_dev", json{{"x", bx}}, *cb.pi_li_dev);
            if (cb.li) push("li", json{{"x", bx}}, *cb.li);
        }
        if (!red_spec.empty()) {
            std::vector<LocalReduction> locals;
            std::istringstream rs(red_spec);
            std::string item;
            while (std::getline(rs, item, ',')) {
                auto c1 = item.find(':');
                auto c2 = item.find(':', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw DomainError("reduction entry must be p:mult|add:vp");
                LocalReduction l;
                l.p = std::stoll(item.substr(0, c1));
                auto t = item.substr(c1 + 1, c2 - c1 - 1);
                l.type = t == "mult" ? ReductionType::multiplicative
                                     : ReductionType::additive;
                l.vp = std::stoi(item.substr(c2 + 1));
                locals.push_back(l);
            }
            ReductionData red(std::move(locals));
            int mm = cond_m > 0 ? cond_m : bm;
            push("sym_conductor_proof_log", json{{"m", mm}},
                 sym_conductor_proof_bound(red, mm));
            push("sym_conductor_theorem_log", json{{"m", mm}},
                 sym_conductor_theorem_bound(
                     static_cast<std::int64_t>(std::llround(std::exp(red.log_level()))), mm));
        }
        if (sel_constants) {
            doc.empirical = json::object();
            for (const auto& c : constants::registry)
                doc.empirical[std::string(c.name)] = c.value;
        }
        return out.emit(doc);
    }

    if (as->parsed()) {
        auto table = read_angle_cache(as_cache);
        ReportDocument doc;
        doc.command = "atkin-serre";
        doc.form = form_json(table.form);
        doc.inputs = json{{"x", as_x}, {"mode", as_mode}, {"cache", as_cache}};
        double bound = atkin_serre_bound(as_x, table.form.k, table.form.N);
        auto add_mode = [&](const char* name, ASMode mode) {
            auto c = atkin_serre_exceptions(table, as_x, mode);
            if (c.total == 0) {
                doc.empirical["note"] = "empty dyadic range";
                return;
            }
            double ratio = static_cast<double>(c.exceptional) / c.total;
            auto r = make_bound_report(
                std::string("atkin_serre_ratio_") + name,
                json{{"x", as_x}, {"exceptional", c.exceptional}, {"total", c.total}},
                bound, ratio);
            doc.bounds.push_back(r);
        };
        if (as_mode == "statement" || as_mode == "both")
            add_mode("statement", ASMode::statement);
        if (as_mode == "proof" || as_mode == "both") add_mode("proof", ASMode::proof);
        doc.empirical["statement_threshold_at_x"] =
            std::log(std::log(as_x)) / std::sqrt(std::log(as_x));
        doc.empirical["proof_threshold"] =
            ell(as_x, (table.form.k - 1) * static_cast<double>(table.form.N));
        return out.emit(doc);
    }

    if (za->parsed()) {
        std::ifstream in(za_path, std::ios::binary);
        if (!in) throw ParseError("cannot open " + za_path);
        auto audit = check_zero_count(in, za_T, za_m, za_k, za_Q);
        ReportDocument doc;
        doc.command = "zero-audit";
        doc.inputs = json{{"T", za_T}, {"m", za_m}, {"k", za_k}, {"Q", za_Q},
                          {"zeros", za_path}};
        doc.bounds.push_back(make_bound_report(
            "zero_count", json{{"T", za_T}}, audit.bound,
            static_cast<double>(audit.count)));
        doc.bounds.push_back(make_bound_report("zero_count_full", json{{"T", za_T}},
                                               audit.bound_full,
                                               static_cast<double>(audit.count)));
        return out.emit(doc);
    }

    if (consts->parsed()) {
        ReportDocument doc;
        doc.command = "constants";
        doc.empirical = json::object();
        for (const auto& c : constants::registry)
            doc.empirical[std::string(c.name)] = c.value;
        return out.emit(doc);
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
