#include <gtest/gtest.h>

#include <sstream>

#include "common.hpp"

using namespace zml;

TEST(Summary, Schema)
{
    std::vector<check> checks{{1, "a", true, 1.0, 1.0, 0.0, ""}, {2, "b", false, 2.0, 1.0, 0.5, "why"}};
    const json s = make_summary("jk", json{{"k_list", {1.0}}}, checks);
    EXPECT_EQ(s["command"], "jk");
    EXPECT_EQ(s["version"], artifact_version);
    EXPECT_TRUE(s["timing_ms"].is_null());
    ASSERT_EQ(s["checks"].size(), 2u);
    for (const char* key : {"name", "status", "observed", "expected", "tolerance"}) {
        EXPECT_TRUE(s["checks"][0].contains(key)) << key;
    }
    EXPECT_EQ(s["checks"][0]["status"], "pass");
    EXPECT_EQ(s["checks"][1]["status"], "fail");
    EXPECT_EQ(s["checks"][1]["note"], "why");
    EXPECT_FALSE(all_pass(checks));
    EXPECT_TRUE(all_pass({checks[0]}));

    const json timed = make_summary("jk", json::object(), checks, 12.5);
    EXPECT_EQ(timed["timing_ms"], 12.5);
}

TEST(Summary, KeyOrderAndDeterminism)
{
    const json a = make_summary("zeros", json{{"t_hi", 100.0}}, {});
    const json b = make_summary("zeros", json{{"t_hi", 100.0}}, {});
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a.dump().rfind("{\"command\":\"zeros\"", 0), 0u);
}

TEST(Summary, NonFiniteBecomesNull)
{
    const json c = to_json(check{3, "x", false, std::numeric_limits<double>::quiet_NaN(), 1.0,
                                 std::numeric_limits<double>::infinity(), ""});
    EXPECT_TRUE(c["observed"].is_null());
    EXPECT_TRUE(c["tolerance"].is_null());
    EXPECT_EQ(c["criterion"], 3);
}

TEST(Csv, MomentsRoundTripDigits)
{
    moment_result m;
    m.k = 1.0;
    m.t_hi = 1000.0;
    m.count_or_length = 649.0;
    m.value = 0.1 + 0.2;
    std::ostringstream os;
    write_csv_preamble(os, json{{"a", 1}});
    write_moments_csv(os, {m});
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# zml 1.0.0 {\"a\":1}");
    std::getline(in, line);
    EXPECT_EQ(line, "kind,k,nu,alpha_re,alpha_im,t_lo,t_hi,count,value,predicted,ratio");
    std::getline(in, line);
    EXPECT_NE(line.find("0.30000000000000004"), std::string::npos);
    EXPECT_EQ(line.rfind("JK,1,1,0,0,0,1000,649,", 0), 0u);
}

TEST(Csv, Headers)
{
    std::ostringstream l;
    write_landau_csv(l, {});
    EXPECT_EQ(l.str(), "a,b,T,count,empirical_re,empirical_im,main_term,error_envelope,deviation\n");
    std::ostringstream c;
    write_constants_csv(c, {});
    EXPECT_EQ(c.str(), "k,barnes_ratio,euler_product,prime_cutoff,tail_bound,value\n");
    std::ostringstream z;
    classified_zero row;
    row.gamma = 14.5;
    write_classification_csv(z, {row});
    EXPECT_EQ(z.str(), "gamma,label,witness_i,witness_ell,G_max_over_thresholds\n14.5,T,,,0\n");
    std::ostringstream h;
    write_histogram_csv(h, clt_histogram{});
    std::istringstream hin(h.str());
    std::string line;
    std::size_t rows = 0;
    while (std::getline(hin, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, static_cast<std::size_t>(clt_bins) + 1);
}

TEST(Acceptance, CriterionTitles)
{
    for (int c = 1; c <= acceptance_criteria; ++c) {
        EXPECT_STRNE(criterion_title(c), "") << c;
    }
    EXPECT_STREQ(criterion_title(0), "");
}
