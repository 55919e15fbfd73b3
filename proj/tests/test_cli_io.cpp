#include "support.hpp"

#include "singquiv/report.hpp"

#include <doctest.h>

using namespace singquiv;

namespace {

InputError::Kind error_kind(const std::string& text, std::string* message = nullptr)
{
    try {
        parse_spec(text);
    } catch (const InputError& e) {
        if (message)
            *message = e.what();
        return e.kind();
    }
    FAIL("expected an InputError for: " << text);
    return InputError::Kind::Unknown;
}

} // namespace

TEST_CASE("parsing the golden descriptions")
{
    const auto s = parse_spec(testing::kEx1);
    CHECK(s.name == "ex1");
    CHECK(s.vertices == std::vector<std::string>{"1", "2"});
    REQUIRE(s.arrows.size() == 3);
    CHECK(s.arrows[2].id == "gamma");
    CHECK(s.arrows[2].source == "2");
    CHECK(s.arrows[2].target == "2");
    REQUIRE(s.forbids.size() == 3);
    CHECK(s.forbids[0].first == "beta");
    CHECK(s.forbids[0].second == "alpha");
    CHECK(s.forbids[0].line == 6);

    const auto a = build_from_spec(s);
    // traversal order: beta then alpha is the product alpha*beta
    const auto& q = a.quiver();
    const auto alpha = a.arrow_index(q.arrow_index("alpha"));
    const auto beta = a.arrow_index(q.arrow_index("beta"));
    CHECK_FALSE(a.multiply(alpha, beta).has_value());
    CHECK(a.multiply(beta, alpha).has_value());

    const auto d = parse_spec(testing::kDual);
    CHECK(d.vertices == std::vector<std::string>{"1"});
    CHECK(build_from_spec(d).dim() == 2);
}

TEST_CASE("comments, blank lines and the default name")
{
    const auto s = parse_spec("# header\n\nvertex a   # trailing\narrow x a a\nforbid x x\n");
    CHECK(s.name == "unnamed");
    CHECK(s.vertices == std::vector<std::string>{"a"});
    CHECK(s.forbids.size() == 1);
}

TEST_CASE("forward references are resolved after the whole file is read")
{
    const auto s = parse_spec("forbid f g\narrow f 1 2\narrow g 2 3\nvertices 1 2 3\n");
    CHECK(build_from_spec(s).dim() == 5);
}

TEST_CASE("parse errors")
{
    std::string msg;
    CHECK(error_kind("quiver\n", &msg) == InputError::Kind::Syntax);
    CHECK(msg.find("line 1") != std::string::npos);
    CHECK(error_kind("vertex 1\nlinks 1 2\n", &msg) == InputError::Kind::Syntax);
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(error_kind("vertex 1\nvertex 1\n") == InputError::Kind::Duplicate);
    CHECK(error_kind("vertices 1 2\narrow a 1 2\narrow a 2 1\n") == InputError::Kind::Duplicate);
    CHECK(error_kind("vertex 1\narrow a 1 3\n", &msg) == InputError::Kind::UnknownIdentifier);
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(error_kind("vertex 1\narrow a 1 1\nforbid a b\n") == InputError::Kind::UnknownIdentifier);
    CHECK(error_kind("vertex 1\narrow a 1 1 1\n") == InputError::Kind::Syntax);
}

TEST_CASE("a forbidden pair whose arrows do not meet names its line")
{
    std::string msg;
    const char* text = "quiver bad\nvertices 1 2 3\narrow alpha 1 2\narrow gamma 3 3\nforbid alpha gamma\n";
    CHECK(error_kind(text, &msg) == InputError::Kind::NotComposable);
    CHECK(msg == "line 5: NotComposable: alpha ends at 2 but gamma starts at 3");
}

TEST_CASE("render and parse round-trip")
{
    for (const char* text : {testing::kEx1, testing::kDual, testing::kFork, testing::kA3}) {
        const auto s = parse_spec(text);
        const auto again = parse_spec(render_spec(s));
        CHECK(again.name == s.name);
        CHECK(again.vertices == s.vertices);
        CHECK(again.arrows.size() == s.arrows.size());
        CHECK(again.forbids == s.forbids);
        CHECK(render_spec(again) == render_spec(s));
    }
    for (const auto& e : testing::random_corpus(50, 41)) {
        const auto again = parse_spec(render_spec(e.spec));
        CHECK(render_spec(again) == render_spec(e.spec));
        CHECK(build_from_spec(again).dim() == e.dim);
    }
}

TEST_CASE("the analysis JSON keeps a fixed key order")
{
    const auto a = testing::algebra(testing::kEx1);
    const auto j = report_json("ex1", a, analyze(a, PrimeField{}));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"name", "dimA", "dimB", "dimM", "dimY", "dimZ", "relation_quiver",
                                           "relation_quiver_class", "prop_main", "mu", "nu", "pd_kY_leftB",
                                           "pd_kZ_rightA", "verdict_singular_equiv_with_level", "level_witness",
                                           "warnings"});
    CHECK(j["relation_quiver_class"] == "Other");
    CHECK(j["prop_main"] == true);
    CHECK(j["pd_kZ_rightA"] == "Infinite");
    CHECK(j["verdict_singular_equiv_with_level"] == true);
    CHECK(j["relation_quiver"]["vertices"].size() == 3);
    CHECK(j["relation_quiver"]["arrows"].size() == 3);

    const auto d = testing::algebra(testing::kDual);
    const auto jd = report_json("dual", d, analyze(d, PrimeField{}));
    CHECK(jd["level_witness"]["found"] == true);
    CHECK(jd["level_witness"]["n"] == 0);
}

TEST_CASE("same seed, same bytes")
{
    const auto a = testing::algebra(testing::kEx1);
    AnalysisOptions opt;
    opt.seed = 99;
    const auto first = report_json("ex1", a, analyze(a, PrimeField{}, opt)).dump(2);
    const auto second = report_json("ex1", a, analyze(a, PrimeField{}, opt)).dump(2);
    CHECK(first == second);
}

TEST_CASE("dumps")
{
    const auto ex1 = testing::algebra(testing::kEx1);
    const auto b = dump_json(ex1, DumpTarget::B, PrimeField{});
    std::vector<std::string> labels;
    for (const auto& e : b["basis"])
        labels.push_back(e["label"]);
    CHECK(labels == std::vector<std::string>{"e_alpha", "e_beta", "e_gamma", "[alpha beta]", "[beta gamma]",
                                             "[gamma gamma]"});

    const auto dual = testing::algebra(testing::kDual);
    const auto m = dump_json(dual, DumpTarget::M, RationalField{});
    CHECK(m["dim"] == 2);
    CHECK(m["basis"].size() == 2);
    for (const char* side : {"left_action", "right_action"})
        for (const auto& [x, mat] : m[side].items()) {
            CHECK(mat.size() == 2);
            CHECK(mat[0].size() == 2);
        }
    // x sends (e_1,x) to (x,x)
    CHECK(m["left_action"]["x"] == nlohmann::ordered_json::parse("[[0,0],[1,0]]"));

    const auto a3 = dump_json(testing::algebra(testing::kA3), DumpTarget::A, PrimeField{});
    CHECK(a3["dim"] == 6);
    CHECK(a3["basis"][5]["label"] == "b*a");

    CHECK(dump_text(ex1, DumpTarget::Z, PrimeField{}).find("([gamma gamma]|e_2,gamma)") != std::string::npos);
    CHECK_THROWS_AS(parse_dump_target("X"), InputError);
}

TEST_CASE("invariant suite on the golden algebras")
{
    for (const char* text : {testing::kEx1, testing::kDual, testing::kFork, testing::kA3}) {
        const auto checks = run_invariants(testing::algebra(text), PrimeField{});
        CHECK_FALSE(has_failure(checks));
        for (const auto& c : checks)
            CHECK_MESSAGE(c.status == CheckStatus::Pass, c.group << ": " << c.name << " " << c.detail);
    }
}

TEST_CASE("a corrupted M is reported by name")
{
    VerifyOptions opt;
    opt.corrupt_M = true;
    const auto checks = run_invariants(testing::algebra(testing::kEx1), PrimeField{}, opt);
    CHECK(has_failure(checks));
    const auto text = checks_text(checks);
    CHECK(text.find("[FAIL] actions: M matches its action formulas") != std::string::npos);
}
