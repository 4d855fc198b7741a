// Command-line surface: exact counts, invariants, verification suites and
// reference tables with machine-readable output.
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "irrec/cache.hpp"
#include "irrec/curve.hpp"
#include "irrec/dessins.hpp"
#include "irrec/local.hpp"
#include "irrec/oracle.hpp"
#include "irrec/pruned.hpp"
#include "irrec/quantum.hpp"
#include "irrec/verify.hpp"
#include "json.hpp"

using namespace irrec;

namespace {

MuTuple parse_mu(const std::string& s) {
    MuTuple mu;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) mu.push_back(std::stol(item));
    }
    return mu;
}

std::string mu_join(const MuTuple& mu, char sep) {
    std::string s;
    for (size_t i = 0; i < mu.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(mu[i]);
    return s;
}

int cmd_count(const std::string& family, int g, const MuTuple& mu, long n,
              const std::string& curve_norm, bool as_json) {
    Rational value;
    MuTuple key_mu = mu;
    std::string cache_family = family;
    if (family == "epsilon") key_mu = {n};
    if (family == "u") cache_family += ":" + curve_norm;
    std::string key = cache::count_key(cache_family, g, key_mu);
    if (auto hit = cache::load(key)) {
        value = *hit;
    } else {
        if (family == "U") value = dessins::u_count(g, mu);
        else if (family == "B") value = dessins::b_big(g, mu);
        else if (family == "b") value = pruned::b_pruned(g, mu);
        else if (family == "u")
            value = local::u_airy(g, mu, curve_norm == "full" ? AiryNorm::Square : AiryNorm::HalfSquare);
        else if (family == "epsilon") value = dessins::epsilon_hz(g, n);
        else {
            std::cerr << "unknown family: " << family << "\n";
            return 2;
        }
        cache::store(key, value);
    }
    if (as_json) {
        nlohmann::json j;
        j["family"] = family;
        j["g"] = g;
        j["mu"] = (family == "epsilon") ? MuTuple{n} : mu;
        j["value"]["num"] = value.get_num().get_str();
        j["value"]["den"] = value.get_den().get_str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return 0;
}

int cmd_invariant(const std::string& curve_name, int g, int n, long expand, bool as_json) {
    const SpectralCurve* curve = find_curve(curve_name);
    if (!curve) {
        std::cerr << "unknown curve: " << curve_name << "\n";
        return 2;
    }
    const auto& w = curve->eo_invariant(g, n);
    if (expand < 0) {
        std::string body;
        if (n == 1 && w.body.term_count() <= 64) {
            RatFunc flat;
            for (const auto& t : w.body.terms()) flat += t.f[0] * t.coef;
            body = flat.str("z");
        } else if (n <= 3 && w.body.term_count() <= 64) {
            body = w.body.to_multirat().str();
        } else {
            body = w.body.str();
        }
        if (as_json) {
            nlohmann::json j;
            j["curve"] = curve_name;
            j["g"] = g;
            j["n"] = n;
            j["body"] = body;
            j["symmetry_guaranteed"] = w.symmetry_guaranteed;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "omega^" << g << "_" << n << " / prod dz_i = " << body << "\n";
            if (!w.symmetry_guaranteed) std::cout << "note: symmetry not guaranteed (flat zero)\n";
        }
        return 0;
    }
    std::vector<Rational> centers(static_cast<size_t>(n), Rational(0));
    std::vector<long> orders(static_cast<size_t>(n), expand);
    auto tensor = w.body.taylor_tensor(centers, orders);
    nlohmann::json coeffs = nlohmann::json::array();
    std::vector<size_t> dims(static_cast<size_t>(n), static_cast<size_t>(expand) + 1);
    size_t total = 1;
    for (auto d : dims) total *= d;
    for (size_t flat = 0; flat < total; ++flat) {
        if (tensor[flat] == 0) continue;
        size_t rem = flat;
        std::vector<long> e(static_cast<size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            e[static_cast<size_t>(i)] = static_cast<long>(rem % dims[static_cast<size_t>(i)]);
            rem /= dims[static_cast<size_t>(i)];
        }
        if (as_json) {
            nlohmann::json row;
            row["exponents"] = e;
            row["num"] = tensor[flat].get_num().get_str();
            row["den"] = tensor[flat].get_den().get_str();
            coeffs.push_back(row);
        } else {
            std::cout << "z^(" << mu_join(e, ',') << "): " << to_string(tensor[flat]) << "\n";
        }
    }
    if (as_json) {
        nlohmann::json j;
        j["curve"] = curve_name;
        j["g"] = g;
        j["n"] = n;
        j["order"] = expand;
        j["coefficients"] = coeffs;
        std::cout << j.dump() << "\n";
    }
    return 0;
}

struct TableRow {
    int g;
    long n;
    MuTuple mu;
    Rational value;
    std::string status;
    std::string anchor;
};

void emit_rows(const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json e;
            e["g"] = r.g;
            e["n"] = r.n;
            e["mu"] = r.mu;
            e["value_num"] = r.value.get_num().get_str();
            e["value_den"] = r.value.get_den().get_str();
            e["status"] = r.status;
            e["source_anchor"] = r.anchor;
            j.push_back(e);
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "g,n,mu,value_num,value_den,status,source_anchor\n";
    for (const auto& r : rows) {
        std::cout << r.g << "," << r.n << "," << mu_join(r.mu, ';') << ","
                  << r.value.get_num().get_str() << "," << r.value.get_den().get_str() << ","
                  << r.status << "," << r.anchor << "\n";
    }
}

int cmd_table(const std::string& what, long max_arg, const std::string& format) {
    std::vector<TableRow> rows;
    if (what == "appendix") {
        long mmax = max_arg > 0 ? max_arg : 6;
        auto push = [&](int g, const MuTuple& mu, const Rational& printed, const std::string& anchor) {
            Rational cs = 1;
            for (long m : mu) cs *= dessins::c_factor(g, m);
            Rational computed = dessins::b_big(g, mu) / cs;
            rows.push_back({g, static_cast<long>(mu.size()), mu, computed,
                            computed == printed ? "pass" : "discrepancy", anchor});
        };
        for (long m = 1; m <= mmax; ++m) {
            push(0, {m}, ratio(1, m * (m + 1)), "row (0,1)");
            push(1, {m}, ratio((m - 1) * (m - 2), 12), "row (1,1)");
            push(2, {m}, ratio((m - 1) * (m - 2) * (m - 3) * (m - 4) * (5 * m * m - 7 * m + 6), 1440),
                 "row (2,1)");
        }
        for (long a = 1; a <= std::min<long>(mmax, 4); ++a)
            for (long b = a; b <= std::min<long>(mmax, 4); ++b) {
                push(0, {a, b}, ratio(1, 2 * (a + b)), "row (0,2)");
                long val = 2 * a * a * b * b + 2 * a * a * a * b + 2 * a * b * b * b - a * a * a -
                           b * b * b - 9 * a * a * b - 9 * a * b * b + 4 * a * a + 4 * b * b +
                           14 * a * b - 5 * a - 5 * b + 2;
                push(1, {a, b}, ratio(val, 12), "row (1,2)");
            }
        push(0, {1, 1, 1}, ratio(1, 4), "row (0,3)");
        push(0, {2, 1, 1}, ratio(1, 4), "row (0,3)");
    } else if (what == "pruned-table") {
        long mmax = max_arg > 0 ? max_arg : 6;
        auto push = [&](int g, const MuTuple& mu, const Rational& printed, const std::string& anchor) {
            Rational computed = pruned::b_pruned(g, mu);
            rows.push_back({g, static_cast<long>(mu.size()), mu, computed,
                            computed == printed ? "pass" : "discrepancy", anchor});
        };
        for (long m = 1; m <= mmax; ++m) {
            push(0, {m}, Rational(0), "row (0,1)");
            push(0, {m, m}, ratio(1, m), "row (0,2)");
            push(1, {m}, (m % 2 == 0) ? ratio(m * m - 4, 24) : ratio(m * m - 1, 24), "row (1,1)");
            Rational u(m * m);
            push(2, {m},
                 (m % 2 == 0) ? Rational((u - 4) * (u - 16) * (5 * u * u - 38 * u + 72) / 276480)
                              : Rational((u - 1) * (u - 9) * (5 * u * u - 88 * u + 227) / 276480),
                 "row (2,1)");
        }
        push(0, {1, 1, 1}, Rational(2), "row (0,3)");
        push(0, {2, 2, 1}, Rational(2), "row (0,3)");
        for (long a = 1; a <= 2; ++a)
            for (long b = a; b <= 3; ++b) {
                Rational s(a * a + b * b);
                push(1, {a, b},
                     ((a + b) % 2 == 0) ? Rational((s - 2) * (s - 4) / 48)
                                        : Rational((s - 1) * (s - 5) / 48),
                     "row (1,2)");
            }
        // the (0,4) row: the printed polynomial evaluates to half the count
        for (const MuTuple& mu : std::vector<MuTuple>{{1, 1, 1, 1}, {2, 1, 1, 1}}) {
            Rational printed = -1;
            for (long m : mu) printed += Rational(m * m);
            Rational computed = pruned::b_pruned(0, mu);
            rows.push_back({0, 4, mu, computed, computed == printed ? "pass" : "discrepancy",
                            "row (0,4)"});
        }
    } else if (what == "volumes") {
        long gmax = max_arg > 0 ? max_arg : 3;
        for (int g = 1; g <= gmax; ++g)
            for (int n = 1; n <= 3; ++n) {
                VolumePoly v = local::volumes(g, n);
                for (const auto& [e, c] : v.poly.coeffs()) {
                    MuTuple mu(e.begin(), e.end());
                    rows.push_back({g, n, mu, c, "pass", "volume coefficient"});
                }
            }
    } else if (what == "wave") {
        long emax = max_arg > 0 ? max_arg : 8;
        for (long e = 1; e <= emax; ++e)
            for (long v = 2; v <= 2 * e; ++v)
                rows.push_back({0, e, {v}, quantum::f_bullet(v, e), "pass", "wave coefficient"});
    } else {
        std::cerr << "unknown table: " << what << "\n";
        return 2;
    }
    emit_rows(rows, format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact topological recursion and dessin enumeration toolkit"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "print one exact weighted count");
    std::string family, mu_str_arg, curve_norm = "half";
    int g_arg = 0;
    long n_arg = 0;
    bool json_flag = false;
    count->add_option("family", family, "one of U, B, b, u, epsilon")->required();
    count->add_option("--g", g_arg, "genus")->required();
    count->add_option("--mu", mu_str_arg, "comma-separated boundary tuple");
    count->add_option("--n", n_arg, "edge count (epsilon family)");
    count->add_option("--curve", curve_norm, "u-family normalization: half (x=z^2/2) or full (x=z^2)");
    count->add_flag("--json", json_flag, "machine-readable output");

    // invariant
    auto* inv = app.add_subcommand("invariant", "print an invariant omega^g_n");
    std::string curve_name = "dessin";
    int inv_g = 0, inv_n = 1;
    long expand = -1;
    bool inv_json = false;
    inv->add_option("--curve", curve_name, "dessin|airy|airy-half|gauss-regular|flat-counterexample")
        ->required();
    inv->add_option("--g", inv_g, "genus")->required();
    inv->add_option("--n", inv_n, "number of variables")->required();
    inv->add_option("--expand", expand, "print Taylor coefficients at 0 through this order");
    inv->add_flag("--json", inv_json, "machine-readable output");

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    long dmax = 6;
    int threads = 1;
    bool ver_json = false, verbose = false;
    ver->add_option("suite", suite, "main-theorem|three-term|pruned|structure|quantum|one-point|"
                                    "volumes|dilaton-string|oracle|all");
    ver->add_option("--dmax", dmax, "oracle sweep bound");
    ver->add_option("--threads", threads, "worker threads for enumeration");
    ver->add_flag("--json", ver_json, "machine-readable report");
    ver->add_flag("--verbose", verbose, "print passing checks too");

    // table
    auto* tab = app.add_subcommand("table", "reproduce a reference table from computed values");
    std::string what, format = "csv";
    long max_arg = 0;
    tab->add_option("what", what, "appendix|pruned-table|volumes|wave")->required();
    tab->add_option("--max", max_arg, "range bound (rows/order)");
    tab->add_option("--format", format, "csv|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed()) return cmd_count(family, g_arg, parse_mu(mu_str_arg), n_arg, curve_norm, json_flag);
        if (inv->parsed()) return cmd_invariant(curve_name, inv_g, inv_n, expand, inv_json);
        if (ver->parsed()) {
            verify::Options opt;
            opt.dmax = dmax;
            opt.threads = threads;
            bool known = false;
            for (const auto& s : verify::suite_names()) known |= (s == suite);
            if (!known) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            Report r = verify::run_suite(suite, opt);
            std::cout << (ver_json ? r.render_json() : r.render_text(verbose));
            return r.hard_failures() == 0 ? 0 : 1;
        }
        if (tab->parsed()) {
            if (format != "csv" && format != "json") {
                std::cerr << "unknown format: " << format << "\n";
                return 2;
            }
            return cmd_table(what, max_arg, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
