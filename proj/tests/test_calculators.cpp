#include "scy/calculators.hpp"
#include "scy/config.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>

using namespace scy;

TEST_CASE("Euler number of the resolution")
{
    // smooth (2,2,2,2) complete intersection: h11 = 1, h12 = 65, so e = -128; each node adds 2
    CHECK(resolution_euler() == -128 + 2 * 96);
}

TEST_CASE("Hodge numbers")
{
    Hodge h = hodge_numbers(32, 64);
    CHECK(h.h11 == 32);
    CHECK(h.h12 == 0);
    h = hodge_numbers(40, 80);
    CHECK(h.h12 == 0);
    h = hodge_numbers(18, 32);
    CHECK(h.h11 == 18);
    CHECK(h.h12 == 2);
    CHECK_THROWS_AS(hodge_numbers(10, 31), std::invalid_argument);
}

TEST_CASE("string Euler numbers")
{
    auto trivial = string_euler({0}, [](int, int) -> std::optional<double> { return 64.0; });
    CHECK(trivial.complete);
    CHECK(trivial.value == 64);
    auto make = [](int n_nodes, int n_curves, int curve_euler) {
        FixedLocusReport f;
        for (int k = 0; k < n_nodes; ++k) {
            FixedComponent c;
            c.kind = "node";
            c.euler = 2;
            f.components.push_back(c);
        }
        for (int k = 0; k < n_curves; ++k) {
            FixedComponent c;
            c.kind = "curve";
            c.euler = curve_euler;
            f.components.push_back(c);
        }
        return f;
    };
    int s = involution_index(2);
    CHECK(string_euler({0, s}, involution_oracle(s, make(16, 0, 0))).value == 80);
    CHECK(string_euler({0, s}, involution_oracle(s, make(0, 4, 0))).value == 32);
    CHECK(string_euler({0, s}, involution_oracle(s, make(0, 4, 2))).value == 44);
    CHECK(involution_euler_shortcut(make(0, 4, 2)) == 44);
    // missing data for a commuting pair is reported, not guessed
    auto partial = string_euler({0, s}, [](int g, int h) -> std::optional<double> {
        if (g == 0 && h == 0) return 64.0;
        return std::nullopt;
    });
    CHECK_FALSE(partial.complete);
}

TEST_CASE("group specifications")
{
    CHECK(parse_group_spec("trivial").size() == 1);
    CHECK(parse_group_spec("sigma3").size() == 2);
    CHECK(parse_group_spec("J").size() == 2);
    CHECK(parse_group_spec("HatGamma20[2]n").size() == 12288);
    CHECK_THROWS(parse_group_spec("sigma11"));
    CHECK_THROWS(parse_group_spec("nonsense"));
}

TEST_CASE("quotient reports")
{
    const PicardData& pd = picard_data();
    QuotientReport t = trivial_report(pd);
    CHECK(t.pic_resolution == 32);
    CHECK(t.euler == 64);
    CHECK(t.hodge.h11 == 32);
    CHECK(t.hodge.h12 == 0);
    CHECK(t.extendable);
    const auto& rows = published_rows();
    for (int i = 1; i <= 10; ++i) {
        QuotientReport r = involution_report(i, pd);
        CHECK(r.pic_regular == rows[i - 1].pic_regular);
        CHECK(r.pic_resolution == rows[i - 1].pic);
        CHECK(r.euler == rows[i - 1].euler);
        CHECK(r.pic_resolution == r.pic_regular + r.fixed_components);
        CHECK(r.euler == 2 * (r.hodge.h11 - r.hodge.h12));
        CHECK(r.hodge.h11 == r.pic_resolution);
        CHECK(r.euler_paths_agree);
    }
    QuotientReport a = involution_report(2, pd), b = involution_report(2, pd);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
    CHECK(report_to_text(a).find("sigma2") == 0);
}

TEST_CASE("configuration files")
{
    Config c = Config::parse("# comment\n picard_cache = /tmp/x.json \ntheta_samples=30 # trailing\n\nhilbert_cap = 12\n");
    CHECK(c.picard_cache == "/tmp/x.json");
    CHECK(c.theta_samples == 30);
    CHECK(c.hilbert_cap == 12);
    CHECK(c.theta_seed == Config{}.theta_seed);
    CHECK_THROWS(Config::parse("unknown = 1\n"));
    CHECK_THROWS(Config::parse("theta_samples 3\n"));
    CHECK_THROWS(Config::parse("theta_samples = many\n"));
    CHECK_THROWS(Config::parse("theta_samples = 0x\n"));
    CHECK_THROWS(Config::parse("theta_samples = 0\n"));
    CHECK_THROWS(Config::parse("picard_seed = -1\n"));
    CHECK_THROWS(Config::load("/nonexistent/scy.conf"));
    std::string path = "scy_test_config.conf";
    {
        std::ofstream out(path);
        for (auto& [k, v] : c.entries()) out << k << " = " << v << "\n";
    }
    Config back = Config::load(path);
    CHECK(back.entries() == c.entries());
    std::remove(path.c_str());
}
