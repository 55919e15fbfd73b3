#include "support.hpp"

#include "singquiv/constructions.hpp"

#include <doctest.h>

using namespace singquiv;
using singquiv::testing::algebra;

namespace {

/// Counts read straight from the quiver description and the naive path list.
struct Counts {
    std::size_t M = 0, Y = 0, Z = 0, D = 0;
};

Counts naive_counts(const QuiverSpec& s)
{
    std::set<std::pair<std::string, std::string>> f;
    for (const auto& d : s.forbids)
        f.insert({d.first, d.second});
    struct P {
        std::string source, target, first; // first traversed arrow, empty for e_v
    };
    std::vector<P> paths;
    for (const auto& v : s.vertices)
        paths.push_back({v, v, ""});
    auto arrow = [&](const std::string& id) {
        return *std::find_if(s.arrows.begin(), s.arrows.end(), [&](const auto& a) { return a.id == id; });
    };
    for (const auto& w : testing::naive_paths(s, s.arrows.size()).words)
        paths.push_back({arrow(w.front()).source, arrow(w.back()).target, w.front()});
    Counts c;
    for (const auto& a : s.arrows) {
        std::size_t out_r = 0; // arrows of R leaving a: forbidden pairs starting with a
        for (const auto& g : s.arrows)
            out_r += f.count({a.id, g.id});
        for (const auto& p : paths) {
            if (p.source == a.target) {
                ++c.M;
                if (p.first.empty() || !f.count({a.id, p.first})) {
                    ++c.D;
                    c.Z += 1 + out_r;
                }
            }
            if (p.target == a.target)
                ++c.Y;
        }
    }
    return c;
}

std::vector<std::string> names(const LabeledBimodule& lb, const std::vector<std::size_t>& idx)
{
    std::vector<std::string> out;
    for (auto i : idx)
        out.push_back(lb.labels[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::size_t> block_sizes(const std::vector<std::vector<std::size_t>>& blocks)
{
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
        out.push_back(b.size());
    return out;
}

/// The same matrices read over (A, A): valid when B and A share vertex and
/// generator counts, i.e. under an identification B = A sending generators to generators.
template <class F>
Bimodule<F> transported(const Bimodule<F>& m, const FramePtr& frame)
{
    return Bimodule<F>(frame, m.field(), m.dims(), m.gens());
}

} // namespace

TEST_CASE("ex1 bimodule dimensions and labels")
{
    const Setting s(algebra(testing::kEx1));
    const auto m = build_M(s), y = build_Y(s), z = build_Z(s);
    CHECK(m.dim() == 10);
    CHECK(y.dim() == 11);
    CHECK(z.dim() == 8);
    const auto d = decompositions_of_M(s, m);
    CHECK(block_sizes(d.left) == std::vector<std::size_t>{3, 4, 3});
    CHECK(names(m, d.D) == std::vector<std::string>{"(beta,alpha)", "(e_1,beta)", "(e_2,alpha)", "(e_2,gamma)",
                                                    "(gamma,alpha)"});
    CHECK(block_sizes(d.right) == std::vector<std::size_t>{2, 2, 2, 2, 2});
}

TEST_CASE("dual numbers labels")
{
    const Setting s(algebra(testing::kDual));
    const auto m = build_M(s), y = build_Y(s), z = build_Z(s);
    CHECK(m.labels == std::vector<std::string>{"(e_1,x)", "(x,x)"});
    CHECK(y.labels == std::vector<std::string>{"(x|e_1)", "(x|x)"});
    CHECK(z.labels == std::vector<std::string>{"(e_x|e_1,x)", "([x x]|e_1,x)"});
    const auto d = decompositions_of_M(s, m);
    CHECK(names(m, d.D) == std::vector<std::string>{"(e_1,x)"});
    CHECK(block_sizes(d.right) == std::vector<std::size_t>{2});
}

TEST_CASE_TEMPLATE("over the dual numbers M, kY and kZ are the regular bimodule", F, PrimeField, RationalField)
{
    const F k{};
    std::mt19937_64 rng(9);
    const Setting s(algebra(testing::kDual));
    const auto reg = bimodule_as_onesided(regular_bimodule(s.AA, k));
    for (const auto& [lb, frame] : {std::pair{build_M(s), s.AB}, std::pair{build_Y(s), s.BA}, std::pair{build_Z(s), s.BA}}) {
        const auto r = realize(lb, frame, k);
        const auto t = bimodule_as_onesided(transported(r.bimodule, s.AA));
        const auto iso = is_isomorphic(t, reg, rng);
        REQUIRE_MESSAGE(iso.verdict == Verdict::Yes, lb.name);
        CHECK(is_homomorphism(t, reg, *iso.witness));
        CHECK(is_invertible(k, *iso.witness));
    }
}

TEST_CASE("the Z action through a forbidden square")
{
    const Setting s(algebra(testing::kEx1));
    const auto z = build_Z(s);
    const std::size_t gamma = s.A.arrow_index(s.A.quiver().arrow_index("gamma"));
    const auto& col = z.right_action[gamma][z.index_of("(e_gamma|e_2,gamma)")];
    REQUIRE(col.size() == 1);
    CHECK(z.labels[col[0].label] == "([gamma gamma]|e_2,gamma)");
    CHECK(col[0].coeff == 1);
}

TEST_CASE("arrow components of Z")
{
    const Setting s(algebra(testing::kEx1));
    const auto z = build_Z(s);
    const auto& q = s.A.quiver();
    CHECK(names(z, alpha_Z_labels(z, q.arrow_index("gamma"))) ==
          sorted({"(e_gamma|e_2,gamma)", "([gamma gamma]|e_2,gamma)"}));
    CHECK(names(z, alpha_Z_labels(z, q.arrow_index("alpha"))) ==
          sorted({"(e_alpha|beta,alpha)", "(e_alpha|e_2,alpha)", "(e_alpha|gamma,alpha)", "([alpha beta]|e_1,beta)"}));
}

TEST_CASE("splitting Y")
{
    {
        const Setting s(algebra(testing::kEx1));
        const auto y = build_Y(s);
        const auto sp = split_Y(s, y);
        CHECK(sp.y_second.empty());
        CHECK(sp.mu.empty());
        CHECK(sp.y_prime.size() == 11);
        CHECK(names(y, sp.y_top) == std::vector<std::string>{"(alpha|e_2)", "(alpha|gamma)", "(alpha|gamma*alpha)",
                                                             "(beta|e_1)", "(gamma|alpha)", "(gamma|e_2)"});
    }
    {
        const Setting s(algebra(testing::kFork));
        const auto y = build_Y(s);
        const auto sp = split_Y(s, y);
        CHECK(names(y, sp.y_second) == std::vector<std::string>{"(w|w)", "(x|x)"});
        const auto& q = s.A.quiver();
        CHECK(sp.mu == std::map<std::size_t, std::size_t>{{q.arrow_index("x"), 1}, {q.arrow_index("w"), 1}});
        CHECK(sp.y_second.size() + sp.y_prime.size() == y.dim());
    }
    {
        // no relations: every arrow is a source of R and Y'' is every (alpha|q alpha)
        const Setting s(algebra(testing::kA3));
        const auto y = build_Y(s);
        const auto sp = split_Y(s, y);
        CHECK(names(y, sp.y_second) == std::vector<std::string>{"(a|a)", "(b|b)", "(b|b*a)"});
    }
}

TEST_CASE("an algebra without relations: B acts on M through idempotents only")
{
    const Setting s(algebra(testing::kA3));
    const auto m = build_M(s);
    CHECK(s.B.dim() == 2);
    for (std::size_t beta = 0; beta < s.B.dim(); ++beta)
        for (std::size_t l = 0; l < m.dim(); ++l) {
            const auto& col = m.right_action[beta][l];
            if (m.parts[l][1] == beta) {
                REQUIRE(col.size() == 1);
                CHECK(col[0].label == l);
            } else {
                CHECK(col.empty());
            }
        }
}

TEST_CASE_TEMPLATE("constructions on the random corpus", F, PrimeField, RationalField)
{
    const F k{};
    for (const auto& e : testing::random_corpus(60, 21)) {
        const Setting s(build_from_spec(e.spec));
        const auto c = naive_counts(e.spec);
        const auto m = build_M(s), y = build_Y(s), z = build_Z(s);
        CHECK(m.dim() == c.M);
        CHECK(y.dim() == c.Y);
        CHECK(z.dim() == c.Z);
        CHECK(decompositions_of_M(s, m).D.size() == c.D);
        const auto rm = realize(m, s.AB, k);
        const auto ry = realize(y, s.BA, k);
        const auto rz = realize(z, s.BA, k);
        CHECK(formula_violation(m, rm) == std::nullopt);
        CHECK(formula_violation(y, ry) == std::nullopt);
        CHECK(formula_violation(z, rz) == std::nullopt);
        CHECK(bimodule_violation(rm.bimodule) == std::nullopt);
        CHECK(bimodule_violation(ry.bimodule) == std::nullopt);
        CHECK(bimodule_violation(rz.bimodule) == std::nullopt);
        const auto dc = verify_dual_isos(s, k);
        CHECK_MESSAGE(dc.phi_ok, render_spec(e.spec));
        CHECK_MESSAGE(dc.psi_ok, render_spec(e.spec));
    }
}

TEST_CASE("dual isomorphisms on the golden algebras")
{
    for (const char* text : {testing::kEx1, testing::kDual, testing::kFork, testing::kA3}) {
        const Setting s(algebra(text));
        const auto p = verify_dual_isos(s, PrimeField{});
        CHECK(p.phi_ok);
        CHECK(p.psi_ok);
        const auto q = verify_dual_isos(s, RationalField{});
        CHECK(q.phi_ok);
        CHECK(q.psi_ok);
    }
}
