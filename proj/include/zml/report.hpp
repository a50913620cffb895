#ifndef ZML_REPORT_HPP
#define ZML_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "zml/conjecture.hpp"
#include "zml/landau.hpp"
#include "zml/majorant.hpp"
#include "zml/moments.hpp"
#include "zml/random_model.hpp"

namespace zml {

inline constexpr const char* artifact_version = "1.0.0";

using json = nlohmann::ordered_json;

struct check {
    int criterion = 0;
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string note;
};

// Non-finite values become null so the output stays valid JSON.
inline json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

inline std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline json to_json(const check& c)
{
    json j;
    j["name"] = c.name;
    j["status"] = c.pass ? "pass" : "fail";
    j["observed"] = num(c.observed);
    j["expected"] = num(c.expected);
    j["tolerance"] = num(c.tolerance);
    if (c.criterion > 0) {
        j["criterion"] = c.criterion;
    }
    if (!c.note.empty()) {
        j["note"] = c.note;
    }
    return j;
}

inline json to_json(const moment_result& m)
{
    json j;
    j["kind"] = to_string(m.kind);
    j["k"] = num(m.k);
    j["nu"] = m.nu;
    j["alpha"] = json::array({num(m.alpha.real()), num(m.alpha.imag())});
    j["t_lo"] = num(m.t_lo);
    j["t_hi"] = num(m.t_hi);
    j["count"] = num(m.count_or_length);
    j["value"] = num(m.value);
    j["predicted"] = num(m.predicted);
    j["ratio"] = num(m.ratio);
    return j;
}

inline json to_json(const conjecture_constant& c)
{
    json j;
    j["k"] = num(c.k);
    j["barnes_ratio"] = num(c.barnes_ratio);
    j["euler_product"] = num(c.euler_product);
    j["prime_cutoff"] = c.prime_cutoff;
    j["tail_bound"] = num(c.tail_bound);
    j["value"] = num(c.value);
    return j;
}

inline json to_json(const landau_check& c)
{
    json j;
    j["a"] = c.a;
    j["b"] = c.b;
    j["T"] = num(c.T);
    j["count"] = c.count;
    j["empirical"] = json::array({num(c.empirical.real()), num(c.empirical.imag())});
    j["main_term"] = num(c.main_term);
    j["error_envelope"] = num(c.error_envelope);
    j["deviation"] = num(c.deviation());
    return j;
}

inline json to_json(const random_model_estimate& e)
{
    json j;
    j["analytic"] = num(e.analytic_value);
    j["mc"] = num(e.mc_value);
    j["mc_stderr"] = num(e.mc_stderr);
    j["n_samples"] = e.n_samples;
    j["seed"] = e.seed;
    j["small_prime_correction"] = num(e.small_prime_correction);
    return j;
}

inline json to_json(const clt_stats& s)
{
    json j;
    j["count"] = s.count;
    j["excluded_degenerate"] = s.excluded_degenerate;
    j["loglog_T"] = num(s.loglog_T);
    j["mean"] = num(s.mean);
    j["variance"] = num(s.variance);
    j["ks_distance"] = num(s.ks_distance);
    j["ks_distance_empirical"] = num(s.ks_distance_empirical);
    j["standardized_mean"] = num(s.standardized_mean);
    j["standardized_variance"] = num(s.standardized_variance);
    return j;
}

// {command, version, config, checks, timing_ms}; timing_ms is null unless supplied,
// which keeps summaries byte-identical between runs.
inline json make_summary(const std::string& command, const json& config,
                         const std::vector<check>& checks,
                         std::optional<double> timing_ms = std::nullopt)
{
    json j;
    j["command"] = command;
    j["version"] = artifact_version;
    j["config"] = config;
    j["checks"] = json::array();
    for (const auto& c : checks) {
        j["checks"].push_back(to_json(c));
    }
    j["timing_ms"] = timing_ms ? json(*timing_ms) : json(nullptr);
    return j;
}

inline bool all_pass(const std::vector<check>& checks)
{
    for (const auto& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

inline void write_csv_preamble(std::ostream& os, const json& config)
{
    os << "# zml " << artifact_version << ' ' << config.dump() << '\n';
}

inline void write_moments_csv(std::ostream& os, const std::vector<moment_result>& rows)
{
    os << "kind,k,nu,alpha_re,alpha_im,t_lo,t_hi,count,value,predicted,ratio\n";
    for (const auto& m : rows) {
        os << to_string(m.kind) << ',' << fmt17(m.k) << ',' << m.nu << ',' << fmt17(m.alpha.real())
           << ',' << fmt17(m.alpha.imag()) << ',' << fmt17(m.t_lo) << ',' << fmt17(m.t_hi) << ','
           << fmt17(m.count_or_length) << ',' << fmt17(m.value) << ',' << fmt17(m.predicted) << ','
           << fmt17(m.ratio) << '\n';
    }
}

inline void write_landau_csv(std::ostream& os, const std::vector<landau_check>& rows)
{
    os << "a,b,T,count,empirical_re,empirical_im,main_term,error_envelope,deviation\n";
    for (const auto& c : rows) {
        os << c.a << ',' << c.b << ',' << fmt17(c.T) << ',' << c.count << ','
           << fmt17(c.empirical.real()) << ',' << fmt17(c.empirical.imag()) << ','
           << fmt17(c.main_term) << ',' << fmt17(c.error_envelope) << ',' << fmt17(c.deviation())
           << '\n';
    }
}

inline void write_constants_csv(std::ostream& os, const std::vector<conjecture_constant>& rows)
{
    os << "k,barnes_ratio,euler_product,prime_cutoff,tail_bound,value\n";
    for (const auto& c : rows) {
        os << fmt17(c.k) << ',' << fmt17(c.barnes_ratio) << ',' << fmt17(c.euler_product) << ','
           << c.prime_cutoff << ',' << fmt17(c.tail_bound) << ',' << fmt17(c.value) << '\n';
    }
}

struct classified_zero {
    double gamma = 0.0;
    zero_class cls;
};

inline void write_classification_csv(std::ostream& os, const std::vector<classified_zero>& rows)
{
    os << "gamma,label,witness_i,witness_ell,G_max_over_thresholds\n";
    for (const auto& r : rows) {
        os << fmt17(r.gamma) << ',' << r.cls.name() << ',';
        if (r.cls.witness) {
            os << r.cls.witness->first << ',' << r.cls.witness->second;
        } else {
            os << ',';
        }
        os << ',' << fmt17(r.cls.g_max_over_thresholds) << '\n';
    }
}

inline void write_histogram_csv(std::ostream& os, const clt_histogram& h)
{
    os << "bin_lo,bin_hi,count\n";
    for (int b = 0; b < clt_bins; ++b) {
        os << fmt17(clt_histogram::bin_lo(b)) << ',' << fmt17(clt_histogram::bin_hi(b)) << ','
           << h.counts[static_cast<std::size_t>(b)] << '\n';
    }
}

} // namespace zml

#endif // ZML_REPORT_HPP
