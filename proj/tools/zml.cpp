#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zml.hpp"

namespace {

using zml::check;
using zml::json;

enum exit_code : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_io = 3,
    exit_numeric = 4,
    exit_capacity = 5,
};

struct run_config {
    std::string command;
    double t_lo = 0.0;
    double t_hi = 0.0; // 0: the cache's upper end, or the command default
    std::vector<double> k_list;
    double threshold_c = zml::default_threshold_c;
    std::uint64_t prime_cutoff = zml::default_ck_cutoff;
    std::uint64_t n_samples = 100000;
    std::uint64_t seed = 12345;
    std::string cache_path = "zeros.zml";
    std::string out_path;
    std::string summary_path;
    std::string format = "csv";
    unsigned threads = 0;
    bool timing = false;

    // command specific
    unsigned nu = 2;
    unsigned nodes = 64;
    unsigned points = 8;
    unsigned max_ab = 12;
    double log_T = 100.0;
    double schedule_k = 0.5;
    std::vector<unsigned> ell;
};

json echo(const run_config& c)
{
    json j;
    j["t_lo"] = c.t_lo;
    j["t_hi"] = c.t_hi;
    j["k_list"] = c.k_list;
    j["threshold_c"] = c.threshold_c;
    j["prime_cutoff"] = c.prime_cutoff;
    j["n_samples"] = c.n_samples;
    j["seed"] = c.seed;
    j["cache_path"] = c.cache_path;
    j["out_path"] = c.out_path;
    j["threads"] = c.threads;
    j["format"] = c.format;
    if (c.command == "deriv") {
        j["nu"] = c.nu;
        j["nodes"] = c.nodes;
    } else if (c.command == "shifted") {
        j["points"] = c.points;
    } else if (c.command == "landau") {
        j["max_ab"] = c.max_ab;
    } else if (c.command == "randmodel") {
        j["log_T"] = c.log_T;
        j["schedule_k"] = c.schedule_k;
        j["ell"] = c.ell;
    }
    return j;
}

// Data table of one command, written in either format.
struct table_output {
    json rows = json::array();
    std::function<void(std::ostream&)> csv;
};

struct command_result {
    std::vector<check> checks;
    table_output table;
    json resolved = json::object(); // defaults filled in by the command
};

check info(std::string name, bool pass, double observed, double expected, double tolerance,
           std::string note = {})
{
    return check{0, std::move(name), pass, observed, expected, tolerance, std::move(note)};
}

zml::zero_list load_cache(const run_config& c, const zml::eval_config& cfg)
{
    auto z = zml::load_zeros(c.cache_path, cfg.hash());
    if (z.config_mismatch) {
        std::cerr << "zml: warning: cache was computed with a different evaluation config\n";
    }
    return z;
}

double upper(const run_config& c, const zml::zero_list& z) { return c.t_hi > 0 ? c.t_hi : z.t_hi; }

std::vector<double> ks_or(const run_config& c, std::vector<double> fallback)
{
    return c.k_list.empty() ? fallback : c.k_list;
}

command_result cmd_zeros(const run_config& c, const zml::eval_config& cfg)
{
    const double hi = c.t_hi > 0 ? c.t_hi : 1000.0;
    auto z = zml::find_zeros(c.t_lo, hi, cfg, c.threads);
    zml::save_zeros(z, c.cache_path);
    command_result r;
    r.resolved["t_hi"] = hi;
    const double n = static_cast<double>(z.size());
    r.checks.push_back(info("zeros.count", true, n, zml::count_zeros_rvm(std::max(hi, 10.0)) -
                                                         (c.t_lo >= 10 ? zml::count_zeros_rvm(c.t_lo) : 0.0),
                            3.0, "expected from the smooth counting function"));
    r.checks.push_back(info("zeros.degenerate", z.degenerate_count() == 0,
                            static_cast<double>(z.degenerate_count()), 0.0, 0.0));
    for (const auto& rec : z) {
        r.table.rows.push_back({{"index", rec.index},
                                {"gamma", rec.gamma},
                                {"abs_zeta_prime", rec.abs_zeta_prime},
                                {"gamma_error", rec.gamma_error}});
    }
    r.table.csv = [z](std::ostream& os) { zml::write_zeros_csv(z, os); };
    return r;
}

command_result cmd_jk(const run_config& c, const zml::eval_config& cfg)
{
    const auto z = load_cache(c, cfg);
    const double hi = upper(c, z);
    command_result r;
    r.resolved["t_hi"] = hi;
    r.resolved["k_list"] = ks_or(c, {0.5, 1.0, 2.0});
    std::vector<zml::moment_result> rows;
    for (double k : ks_or(c, {0.5, 1.0, 2.0})) {
        const auto cst = k == 0.0 ? zml::conjecture_constant{} : [&] {
            const auto table = zml::sieve_primes(4 * c.prime_cutoff);
            return zml::c_k(k, c.prime_cutoff, table);
        }();
        const auto m = zml::discrete_moment_jk(z, k, c.t_lo, hi, cst);
        rows.push_back(m);
        const bool ok = std::isfinite(m.value) && m.value >= 0 && (k != 0.0 || m.value == 1.0);
        r.checks.push_back(info("jk.k" + zml::fmt17(k), ok, m.value, m.predicted, 0.0,
                                "observed J_k, expected C_k (log T)^{k(k+2)}"));
        r.table.rows.push_back(zml::to_json(m));
    }
    r.table.csv = [rows](std::ostream& os) { zml::write_moments_csv(os, rows); };
    return r;
}

command_result cmd_shifted(const run_config& c, const zml::eval_config& cfg)
{
    const auto z = load_cache(c, cfg);
    const double hi = upper(c, z);
    const double radius = 1.0 / std::log(hi);
    command_result r;
    r.resolved["t_hi"] = hi;
    r.resolved["k_list"] = ks_or(c, {1.0});
    std::vector<zml::moment_result> rows;
    for (double k : ks_or(c, {1.0})) {
        double lo_ratio = std::numeric_limits<double>::infinity();
        double hi_ratio = 0.0;
        bool finite = true;
        for (unsigned m = 0; m < c.points; ++m) {
            const auto alpha = std::polar(radius, zml::two_pi * m / c.points);
            const auto s = zml::shifted_moment(z, k, alpha, c.t_lo, hi, cfg, c.threads);
            finite = finite && std::isfinite(s.value);
            lo_ratio = std::min(lo_ratio, s.ratio);
            hi_ratio = std::max(hi_ratio, s.ratio);
            rows.push_back(s);
            r.table.rows.push_back(zml::to_json(s));
        }
        const auto zero = zml::shifted_moment(z, k, {0.0, 0.0}, c.t_lo, hi, cfg, c.threads);
        rows.push_back(zero);
        r.table.rows.push_back(zml::to_json(zero));
        const std::string tag = "shifted.k" + zml::fmt17(k);
        r.checks.push_back(info(tag + ".finite", finite, finite ? 1.0 : 0.0, 1.0, 0.0));
        r.checks.push_back(info(tag + ".alpha_zero", k == 0.0 || zero.value == 0.0, zero.value, 0.0, 0.0));
        r.checks.push_back(info(tag + ".ratio_min", lo_ratio > 1e-2, lo_ratio, 1e-2, 0.0));
        r.checks.push_back(info(tag + ".ratio_max", hi_ratio < 1e2, hi_ratio, 1e2, 0.0));
    }
    r.table.csv = [rows](std::ostream& os) { zml::write_moments_csv(os, rows); };
    return r;
}

command_result cmd_deriv(const run_config& c, const zml::eval_config& cfg)
{
    const auto z = load_cache(c, cfg);
    const double hi = upper(c, z);
    command_result r;
    r.resolved["t_hi"] = hi;
    r.resolved["k_list"] = ks_or(c, {1.0});
    std::vector<zml::moment_result> rows;
    for (double k : ks_or(c, {1.0})) {
        const auto rep = zml::derivative_moment(z, k, c.nu, c.t_lo, hi, cfg, c.nodes, c.threads);
        rows.push_back(rep.direct);
        auto j = zml::to_json(rep.direct);
        j["cauchy_bound"] = zml::num(rep.cauchy_bound);
        j["circle_max_moment"] = zml::num(rep.circle_max_moment);
        j["max_reconstruction_error"] = zml::num(rep.max_reconstruction_error);
        j["nodes"] = rep.nodes;
        j["radius"] = rep.radius;
        r.table.rows.push_back(j);
        const std::string tag = "deriv.k" + zml::fmt17(k) + "_nu" + std::to_string(c.nu);
        const bool finite = std::isfinite(rep.direct.value) && std::isfinite(rep.cauchy_bound);
        r.checks.push_back(info(tag + ".finite", finite, rep.direct.value, rep.cauchy_bound, 0.0));
        r.checks.push_back(info(tag + ".direct_le_bound", rep.direct.value <= rep.cauchy_bound,
                                rep.direct.value, rep.cauchy_bound, 0.0));
        r.checks.push_back(info(tag + ".reconstruction", rep.max_reconstruction_error <= 1e-6,
                                rep.max_reconstruction_error, 0.0, 1e-6));
    }
    r.table.csv = [rows](std::ostream& os) { zml::write_moments_csv(os, rows); };
    return r;
}

command_result cmd_landau(const run_config& c, const zml::eval_config& cfg)
{
    const auto z = load_cache(c, cfg);
    const double T = c.t_lo > 0 ? c.t_lo : 1000.0;
    command_result r;
    r.resolved["T"] = T;
    std::vector<zml::landau_check> rows;
    double worst = 0.0;
    for (std::uint64_t a = 1; a <= c.max_ab; ++a) {
        for (std::uint64_t b = 1; b <= c.max_ab; ++b) {
            auto l = zml::landau_sum(a, b, z, T);
            worst = std::max(worst, l.ratio());
            rows.push_back(l);
            r.table.rows.push_back(zml::to_json(l));
        }
    }
    r.checks.push_back(info("landau.max_ratio", worst <= 5.0, worst, 5.0, 0.0,
                            "max |empirical - main| / (sqrt(ab) log^2 T)"));
    r.table.csv = [rows](std::ostream& os) { zml::write_landau_csv(os, rows); };
    return r;
}

command_result cmd_classify(const run_config& c, const zml::eval_config& cfg)
{
    const auto z = load_cache(c, cfg);
    const double T = c.t_lo > 0 ? c.t_lo : 1000.0;
    const double k = c.k_list.empty() ? 0.5 : c.k_list.front();
    const auto sched = zml::beta_schedule(k, T, c.threshold_c);
    const double need = sched.bound(sched.I_index > 0 ? sched.I_index : 1);
    const auto table = zml::sieve_primes(static_cast<std::uint64_t>(std::max(100.0, need)) + 1);
    const zml::classifier cls(sched, table);
    if (!z.covers(T, 2.0 * T)) {
        throw zml::coverage_error("classify: cache does not cover (T, 2T]");
    }
    const auto [lo, hi] = z.range(T, 2.0 * T);
    const auto labels = zml::parallel_map<zml::zero_class>(hi - lo, c.threads,
                                                          [&](std::size_t i) { return cls(z[lo + i].gamma); });
    std::vector<zml::classified_zero> rows;
    std::map<std::string, std::size_t> census;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        rows.push_back({z[lo + i].gamma, labels[i]});
        ++census[labels[i].name()];
    }
    command_result r;
    r.resolved["T"] = T;
    r.resolved["k"] = k;
    r.resolved["I_index"] = sched.I_index;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        json j{{"gamma", rows[i].gamma}, {"label", rows[i].cls.name()}};
        j["witness"] = rows[i].cls.witness
                           ? json::array({rows[i].cls.witness->first, rows[i].cls.witness->second})
                           : json(nullptr);
        j["G_max_over_thresholds"] = zml::num(rows[i].cls.g_max_over_thresholds);
        r.table.rows.push_back(j);
    }
    std::size_t total = 0;
    for (const auto& [name, n] : census) {
        total += n;
        r.checks.push_back(info("classify.census." + name, true, static_cast<double>(n), 0.0, 0.0));
    }
    r.checks.push_back(info("classify.partition", total == rows.size(), static_cast<double>(total),
                            static_cast<double>(rows.size()), 0.0, "I = " + std::to_string(sched.I_index)));
    r.table.csv = [rows](std::ostream& os) { zml::write_classification_csv(os, rows); };
    return r;
}

command_result cmd_randmodel(const run_config& c, const zml::eval_config&)
{
    const auto sched = zml::beta_schedule_log(c.schedule_k, c.log_T, c.threshold_c);
    if (!sched.classification_enabled()) {
        throw zml::classification_disabled_error("randmodel: " + sched.diagnostic());
    }
    const unsigned j = sched.I_index;
    const auto table = zml::sieve_primes(static_cast<std::uint64_t>(sched.bound(j)) + 100);
    command_result r;
    r.resolved["k_list"] = ks_or(c, {0.5, 1.0, 2.0});
    r.resolved["I_index"] = j;
    for (double k : ks_or(c, {0.5, 1.0, 2.0})) {
        const auto e = zml::sample_random_model(k, j, sched, table, c.n_samples, c.seed, c.threads);
        const double z = std::abs(e.mc_value - e.analytic_value) / e.mc_stderr;
        r.checks.push_back(info("randmodel.k" + zml::fmt17(k), z <= 3.0, z, 0.0, 3.0,
                                "|mc - analytic| / stderr"));
        auto row = zml::to_json(e);
        row["k"] = k;
        r.table.rows.push_back(row);
    }
    if (!c.ell.empty()) {
        const auto ex = zml::mixed_moment_expectation(c.ell, j, sched, table, zml::moment_mode::exact);
        const auto mc = zml::mixed_moment_expectation(c.ell, j, sched, table, zml::moment_mode::mc,
                                                      c.n_samples, c.seed, c.threads);
        const double z = std::abs(mc.value - ex.value) / mc.stderr_;
        r.checks.push_back(info("randmodel.mixed", z <= 3.0, z, 0.0, 3.0,
                                "exact " + zml::fmt17(ex.value) + ", mc " + zml::fmt17(mc.value)));
        r.table.rows.push_back({{"ell", c.ell}, {"exact", ex.value}, {"mc", mc.value}, {"mc_stderr", mc.stderr_}});
    }
    auto rows = r.table.rows;
    r.table.csv = [rows](std::ostream& os) {
        os << "k,analytic,mc,mc_stderr,n_samples,seed\n";
        for (const auto& row : rows) {
            if (!row.contains("k")) {
                continue;
            }
            os << zml::fmt17(row["k"].get<double>()) << ',' << zml::fmt17(row["analytic"].get<double>()) << ','
               << zml::fmt17(row["mc"].get<double>()) << ',' << zml::fmt17(row["mc_stderr"].get<double>())
               << ',' << row["n_samples"].get<std::uint64_t>() << ',' << row["seed"].get<std::uint64_t>()
               << '\n';
        }
    };
    return r;
}

command_result cmd_ck(const run_config& c, const zml::eval_config&)
{
    const auto table = zml::sieve_primes(std::max<std::uint64_t>(4 * c.prime_cutoff, 40000));
    command_result r;
    r.resolved["k_list"] = ks_or(c, {0.5, 1.0, 2.0});
    std::vector<zml::conjecture_constant> rows;
    for (double k : ks_or(c, {0.5, 1.0, 2.0})) {
        const auto a = zml::c_k(k, c.prime_cutoff, table);
        const auto b = zml::c_k(k, 2 * c.prime_cutoff, table);
        const double change = std::abs(a.value - b.value);
        r.checks.push_back(info("ck.k" + zml::fmt17(k) + ".cutoff_doubling", change <= a.tail_bound, change, 0.0,
                                a.tail_bound));
        rows.push_back(a);
        r.table.rows.push_back(zml::to_json(a));
    }
    r.table.csv = [rows](std::ostream& os) { zml::write_constants_csv(os, rows); };
    return r;
}

command_result cmd_clt(const run_config& c, const zml::eval_config& cfg)
{
    const auto z = load_cache(c, cfg);
    const double hi = upper(c, z);
    const auto s = zml::hejhal_clt_stats(z, c.t_lo, hi);
    command_result r;
    r.resolved["t_hi"] = hi;
    r.checks.push_back(info("clt.mean_vs_loglog", std::abs(s.mean - s.loglog_T) <= 1.0, s.mean, s.loglog_T, 1.0));
    r.checks.push_back(info("clt.ks_distance", std::isfinite(s.ks_distance), s.ks_distance, 0.0, 0.0));
    r.table.rows.push_back(zml::to_json(s));
    for (int b = 0; b < zml::clt_bins; ++b) {
        r.table.rows.push_back({{"bin_lo", zml::clt_histogram::bin_lo(b)},
                                {"bin_hi", zml::clt_histogram::bin_hi(b)},
                                {"count", s.histogram.counts[static_cast<std::size_t>(b)]}});
    }
    const auto h = s.histogram;
    r.table.csv = [h](std::ostream& os) { zml::write_histogram_csv(os, h); };
    return r;
}

command_result cmd_verify(const run_config& c, const zml::eval_config& cfg)
{
    zml::acceptance_options opt;
    opt.cfg = cfg;
    opt.threads = c.threads;
    std::optional<zml::zero_list> cache;
    if (!c.cache_path.empty() && std::ifstream(c.cache_path).good()) {
        cache = load_cache(c, cfg);
    }
    const auto z = zml::zeros_for_acceptance(cache, opt.trend_T_hi, cfg, c.threads);
    command_result r;
    r.checks = zml::run_acceptance(z, opt);
    for (const auto& ch : r.checks) {
        r.table.rows.push_back(zml::to_json(ch));
    }
    auto checks = r.checks;
    r.table.csv = [checks](std::ostream& os) {
        os << "criterion,name,status,observed,expected,tolerance\n";
        for (const auto& ch : checks) {
            os << ch.criterion << ',' << ch.name << ',' << (ch.pass ? "pass" : "fail") << ','
               << zml::fmt17(ch.observed) << ',' << zml::fmt17(ch.expected) << ',' << zml::fmt17(ch.tolerance)
               << '\n';
        }
    };
    return r;
}

void write_outputs(const run_config& c, const command_result& r, const json& summary)
{
    if (!c.out_path.empty()) {
        std::ofstream os(c.out_path, std::ios::binary);
        if (!os) {
            throw std::ios_base::failure("cannot open " + c.out_path);
        }
        if (c.format == "json") {
            json doc;
            doc["version"] = zml::artifact_version;
            doc["command"] = c.command;
            doc["config"] = summary["config"];
            doc["rows"] = r.table.rows;
            os << doc.dump(2) << '\n';
        } else {
            zml::write_csv_preamble(os, summary["config"]);
            r.table.csv(os);
        }
    }
    const std::string text = summary.dump(2) + "\n";
    if (c.summary_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(c.summary_path, std::ios::binary);
        if (!os) {
            throw std::ios_base::failure("cannot open " + c.summary_path);
        }
        os << text;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Discrete moments of zeta'(rho): zero computation and verification suites"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI config file; flags override it");

    run_config c;
    zml::eval_config cfg;

    using handler = command_result (*)(const run_config&, const zml::eval_config&);
    const std::vector<std::tuple<std::string, std::string, handler>> commands{
        {"zeros", "find zeros on (t_lo, t_hi] and write the cache", cmd_zeros},
        {"jk", "discrete moments J_k with conjectural predictions", cmd_jk},
        {"shifted", "shifted moments on the circle |alpha| = 1/log T", cmd_shifted},
        {"deriv", "higher-derivative moments and the contour bound", cmd_deriv},
        {"landau", "Landau sums over an (a, b) grid on (T, 2T]", cmd_landau},
        {"classify", "classification census of the zeros in (T, 2T]", cmd_classify},
        {"randmodel", "random-model expectations, analytic against Monte Carlo", cmd_randmodel},
        {"ck", "table of conjectural constants C_k", cmd_ck},
        {"clt", "distribution of log|zeta'(rho)| and its histogram", cmd_clt},
        {"verify", "full acceptance suite", cmd_verify},
    };

    std::map<CLI::App*, handler> dispatch;
    for (const auto& [name, help, fn] : commands) {
        auto* sub = app.add_subcommand(name, help);
        dispatch[sub] = fn;
        sub->add_option("--t-lo", c.t_lo, "lower end of the height window")->check(CLI::NonNegativeNumber);
        sub->add_option("--t-hi", c.t_hi, "upper end of the height window (default: cache coverage)")
            ->check(CLI::Range(0.0, zml::max_zero_height));
        sub->add_option("--k", c.k_list, "moment exponents")->delimiter(',');
        sub->add_option("--threshold-c", c.threshold_c, "schedule threshold constant (1000; randmodel defaults to 2)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--prime-cutoff", c.prime_cutoff, "Euler product cutoff")
            ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{100000000}));
        sub->add_option("--samples", c.n_samples, "Monte Carlo samples")
            ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1000000000}));
        sub->add_option("--seed", c.seed, "Monte Carlo seed");
        sub->add_option("--cache", c.cache_path, "zero cache path");
        sub->add_option("--out", c.out_path, "data table output path");
        sub->add_option("--summary", c.summary_path, "summary JSON path (default: stdout)");
        sub->add_option("--format", c.format, "data table format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", c.threads, "worker threads (default: ZML_THREADS or 1)")
            ->check(CLI::Range(1u, 1024u));
        sub->add_flag("--timing", c.timing, "record wall time in the summary");
        sub->add_option("--target-error", cfg.target_abs_error, "absolute error target for zeta")
            ->check(CLI::Range(1e-15, 1e-3));
        if (name == "deriv") {
            sub->add_option("--nu", c.nu, "derivative order")->check(CLI::Range(1u, 20u));
            sub->add_option("--nodes", c.nodes, "contour quadrature nodes")->check(CLI::Range(8u, 4096u));
        } else if (name == "shifted") {
            sub->add_option("--points", c.points, "points on the circle")->check(CLI::Range(1u, 1024u));
        } else if (name == "landau") {
            sub->add_option("--max-ab", c.max_ab, "largest a and b")->check(CLI::Range(1u, 1000u));
        } else if (name == "randmodel") {
            sub->add_option("--log-t", c.log_T, "log T of the schedule")->check(CLI::Range(5.0, 1e6));
            sub->add_option("--schedule-k", c.schedule_k, "k used to build the schedule")
                ->check(CLI::PositiveNumber);
            sub->add_option("--ell", c.ell, "mixed moment exponents")->delimiter(',');
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    CLI::App* sub = app.get_subcommands().front();
    c.command = sub->get_name();
    if (c.command == "randmodel" && sub->count("--threshold-c") == 0) {
        c.threshold_c = zml::desk_threshold_c;
    }
    if (c.threads == 0) {
        c.threads = zml::threads_from_env();
    }
    try {
        cfg.validate();
        if (c.t_hi > 0 && c.t_hi <= c.t_lo) {
            throw zml::domain_error("need t_lo < t_hi");
        }
        const auto t0 = std::chrono::steady_clock::now();
        const auto result = dispatch.at(sub)(c, cfg);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        json config = echo(c);
        config["eval_config_hash"] = cfg.hash();
        config["resolved"] = result.resolved;
        const auto summary =
            zml::make_summary(c.command, config, result.checks, c.timing ? std::optional<double>(ms) : std::nullopt);
        write_outputs(c, result, summary);
        return zml::all_pass(result.checks) ? exit_ok : exit_check_failed;
    } catch (const zml::capacity_error& e) {
        std::cerr << "zml: capacity: " << e.what() << '\n';
        return exit_capacity;
    } catch (const zml::numeric_error& e) {
        std::cerr << "zml: numeric: " << e.what() << '\n';
        return exit_numeric;
    } catch (const zml::malformed_file_error& e) {
        std::cerr << "zml: cache: " << e.what() << '\n';
        return exit_io;
    } catch (const zml::coverage_error& e) {
        std::cerr << "zml: cache: " << e.what() << '\n';
        return exit_io;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "zml: io: " << e.what() << '\n';
        return exit_io;
    } catch (const zml::error& e) {
        std::cerr << "zml: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "zml: internal: " << e.what() << '\n';
        return exit_numeric;
    }
}
