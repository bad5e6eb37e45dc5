#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace {

struct Outcome {
    int status = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "bredon");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = bredon::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(SAMPLES_DIR) + "/" + name; }

nlohmann::ordered_json parsed(const Outcome& o) { return nlohmann::ordered_json::parse(o.out); }

} // namespace

TEST(Cli, BredonCyclicJson) {
    const auto o = run({"bredon", "--in", "<x|x^6>", "--format", "json"});
    ASSERT_EQ(o.status, 0) << o.err;
    const auto j = parsed(o);
    EXPECT_EQ(j.begin().key(), "schema");
    EXPECT_EQ(j["H0"]["rank"], 6);
    EXPECT_EQ(j["H1"]["rank"], 0);
    EXPECT_EQ(j["H2"]["rank"], 0);
    EXPECT_EQ(j["higher"], "ALL_ZERO");
    EXPECT_EQ(j["aspherical_source"], "one-relator");
}

TEST(Cli, RootProperPower) {
    const auto o = run({"root", "--in", "<x,y|(x*y)^3>"});
    ASSERT_EQ(o.status, 0) << o.err;
    const auto j = parsed(o);
    EXPECT_EQ(j["root"], "x*y");
    EXPECT_EQ(j["log"], 3);
}

TEST(Cli, HempelCheckRejectsBadShape) {
    const auto o = run({"hempel-check", "--file", sample("not_hempel.pres")});
    EXPECT_EQ(o.status, 1);
    EXPECT_NE(o.err.find("not a Hempel-form presentation"), std::string::npos);
    EXPECT_NE(o.err.find("not-hempel-form"), std::string::npos);
}

TEST(Cli, HempelCheckAndHnnOnSample) {
    auto o = run({"hempel-check", "--file", sample("hempel_genus2.pres")});
    ASSERT_EQ(o.status, 0) << o.err;
    auto j = parsed(o);
    EXPECT_TRUE(j["hempel"].get<bool>());
    EXPECT_EQ(j["nu"], 0);

    o = run({"hnn", "--file", sample("hempel_nu1.pres")});
    ASSERT_EQ(o.status, 0) << o.err;
    j = parsed(o);
    EXPECT_EQ(j["nu"], 1);
    EXPECT_EQ(j["conjugation_relators"].size(), 3u);

    o = run({"hnn", "--file", sample("hempel_nu1.pres"), "--format", "text"});
    ASSERT_EQ(o.status, 0);
    EXPECT_NO_THROW(bredon::parse_presentation(o.out));
}

TEST(Cli, BredonNecDeclaredTorsion) {
    const auto o = run({"bredon", "--file", sample("nec_2_3.pres")});
    ASSERT_EQ(o.status, 0) << o.err;
    const auto j = parsed(o);
    EXPECT_EQ(j["H0"]["rank"], 5);
    EXPECT_EQ(j["H1"]["torsion"], nlohmann::ordered_json::array({2}));
    EXPECT_TRUE(j["H2"].is_null());
    EXPECT_EQ(j["higher"], "EQUALS_H_BG");
}

TEST(Cli, TorsionFlagMatchesDirective) {
    const auto a = run({"bredon", "--in", "<c1, c2, a1 | c1^2, c2^3, c1^-1 c2^-1 a1^2>", "--torsion", "0=2",
                        "--torsion", "1=3"});
    const auto b = run({"bredon", "--file", sample("nec_2_3.pres")});
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"bredon", "--in", "<x|x^2>", "--torsion", "zero"}).status, 2);
}

TEST(Cli, KTheoryTextAndInterpretations) {
    auto o = run({"ktheory", "--file", sample("genus2_surface.pres"), "--format", "text"});
    ASSERT_EQ(o.status, 0) << o.err;
    EXPECT_NE(o.out.find("K0 = Z^2"), std::string::npos);
    EXPECT_NE(o.out.find("K1 = Z^4"), std::string::npos);
    o = run({"ktheory", "--file", sample("cyclic6.pres"), "--h0-interpretation", "literal"});
    ASSERT_EQ(o.status, 0) << o.err;
    EXPECT_EQ(parsed(o)["h0_interpretation"], "LITERAL_RC_G");
    EXPECT_EQ(run({"ktheory", "--file", sample("nec_2_3.pres")}).status, 1);
    EXPECT_EQ(run({"ktheory", "--file", sample("genus2_surface.pres"), "--h0-interpretation", "literal"}).status,
              1);
    EXPECT_EQ(run({"ktheory", "--file", sample("cyclic6.pres"), "--h0-interpretation", "other"}).status, 2);
}

TEST(Cli, SnfFoxParseOracleCombinator) {
    auto o = run({"snf", "--file", sample("matrix.json")});
    ASSERT_EQ(o.status, 0) << o.err;
    auto j = parsed(o);
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(run({"fox", "--in", "<x,y|[x,y]>"}).status, 0);
    EXPECT_EQ(run({"parse", "--file", sample("nec_2_3.pres")}).status, 0);
    o = run({"oracle", "--n", "7"});
    ASSERT_EQ(o.status, 0) << o.err;
    EXPECT_EQ(run({"oracle", "--n", "1"}).status, 2);
    o = run({"combinator", "--ha", R"([{"rank":0},{"rank":0},{"rank":0},{"rank":0},{"rank":2}])", "--hb",
             R"([{"rank":0},{"rank":0},{"rank":0},{"rank":0},{"rank":0,"torsion":[4,2]}])", "--degree", "4"});
    ASSERT_EQ(o.status, 0) << o.err;
    j = parsed(o);
    EXPECT_EQ(j["H"]["rank"], 2);
    EXPECT_EQ(j["H"]["torsion"], nlohmann::ordered_json::array({2, 4}));
    EXPECT_EQ(run({"combinator", "--ha", "[]", "--hb", "[]", "--degree", "2"}).status, 1);
    EXPECT_EQ(run({"combinator", "--ha", "{", "--hb", "[]", "--degree", "3"}).status, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"bogus"}).status, 2);
    EXPECT_EQ(run({"bredon", "--in", "<x|x>", "--unknown"}).status, 2);
    EXPECT_EQ(run({"bredon", "--in", "<x|y>"}).status, 2);
    EXPECT_EQ(run({"bredon", "--in", "<x|x x^-1>"}).status, 1);
    EXPECT_EQ(run({"bredon", "--file", "/nonexistent/file"}).status, 2);
    EXPECT_EQ(run({"bredon"}).status, 2);
    EXPECT_EQ(run({"--help"}).status, 0);
    const auto e = run({"bredon", "--in", "<x|x x^-1>"});
    EXPECT_EQ(e.err.rfind("error[degenerate-relator]", 0), 0u);
}

TEST(Cli, OutputIsDeterministic) {
    for (const char* f : {"hempel_nu1.pres", "nec_2_3.pres", "proper_power.pres"}) {
        const auto a = run({"bredon", "--file", sample(f)});
        const auto b = run({"bredon", "--file", sample(f)});
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.status, b.status);
    }
}
