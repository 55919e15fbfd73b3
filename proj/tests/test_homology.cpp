#include "support.hpp"

#include "singquiv/homology.hpp"

#include <doctest.h>

using namespace singquiv;
using singquiv::testing::algebra;

namespace {

std::size_t arrow(const QMAlgebra& a, const char* id) { return a.quiver().arrow_index(id); }

} // namespace

TEST_CASE("pd of simples over B from the relation quiver")
{
    const Quiver r = relation_quiver(algebra(testing::kEx1));
    CHECK(pd_simple_rsz(r, "gamma") == PdResult::infinite());
    CHECK(pd_simple_rsz(r, "alpha") == PdResult::finite(0));
    CHECK(pd_simple_rsz(r, "beta") == PdResult::finite(1));
}

TEST_CASE_TEMPLATE("pd of simples: combinatorics against syzygy chains", F, PrimeField, RationalField)
{
    const F k{};
    std::mt19937_64 rng(12);
    for (const auto& e : testing::random_corpus(40, 31)) {
        const Setting s(build_from_spec(e.spec));
        const auto& r = s.B.relation_quiver();
        for (std::size_t v = 0; v < r.vertex_count(); ++v) {
            const auto bf = pd_module_bruteforce(simple_module(s.B.basis_algebra(), k, v), kDefaultPdCap, rng);
            if (bf.pd.is_conclusive()) {
                CHECK(bf.pd == pd_simple_rsz(r, v));
            }
        }
    }
}

TEST_CASE("pd of arrow modules in ex1")
{
    const auto a = algebra(testing::kEx1);
    CHECK(pd_arrow_module(a, arrow(a, "gamma"), Side::Right) == PdResult::infinite());
    CHECK(pd_arrow_module(a, arrow(a, "beta"), Side::Right) == PdResult::infinite());
    CHECK(pd_arrow_module(a, arrow(a, "alpha"), Side::Left) == PdResult::finite(0));
}

TEST_CASE_TEMPLATE("brute-force pd on ex1 modules", F, PrimeField, RationalField)
{
    const F k{};
    std::mt19937_64 rng(13);
    const Setting s(algebra(testing::kEx1));
    const auto z = realize(build_Z(s), s.BA, k);
    const auto gz = pd_module_bruteforce(alpha_Z_module(z, arrow(s.A, "gamma")), 8, rng);
    CHECK(gz.pd == PdResult::infinite());
    REQUIRE(gz.period.has_value());
    CHECK(gz.period->first < gz.period->second);

    const auto y = realize(build_Y(s), s.BA, k);
    CHECK(pd_module_bruteforce(left_restriction(y.bimodule), 8, rng).pd == PdResult::finite(0));

    const auto zero = pd_module_bruteforce(zero_module(s.A.basis_algebra(), k), 8, rng);
    CHECK(zero.pd == PdResult::finite(0));
    CHECK(zero.warnings.size() == 1);

    // S_1 over A: A e_1 -> S_1 has kernel span{alpha, beta*alpha, gamma*alpha} = A alpha, which is A e_2-free
    const auto s1 = pd_module_bruteforce(simple_module(s.A.basis_algebra(), k, 0), 8, rng);
    CHECK(s1.pd == PdResult::finite(1));
    CHECK(s1.syzygy_dims == std::vector<std::size_t>{1, 3});
}

TEST_CASE("syzygy multiplicities")
{
    {
        const Setting s(algebra(testing::kEx1));
        const auto y = build_Y(s);
        const auto m = syzygy_multiplicities(s, y, split_Y(s, y));
        CHECK(m.mu.empty());
        CHECK(m.nu.empty());
        CHECK(pd_kY_leftB(s, m) == PdResult::finite(0));
    }
    {
        const Setting s(algebra(testing::kFork));
        const auto y = build_Y(s);
        const auto m = syzygy_multiplicities(s, y, split_Y(s, y));
        const auto& q = s.A.quiver();
        CHECK(m.mu == std::map<std::size_t, std::size_t>{{q.arrow_index("x"), 1}, {q.arrow_index("w"), 1}});
        CHECK(m.nu == std::map<std::size_t, std::size_t>{{q.arrow_index("y"), 3}});
    }
    {
        const Setting s(algebra(testing::kA3));
        const auto y = build_Y(s);
        CHECK(syzygy_multiplicities(s, y, split_Y(s, y)).nu.empty());
    }
}

TEST_CASE_TEMPLATE("the syzygy of kY' matches the multiplicities on the fork", F, PrimeField, RationalField)
{
    const F k{};
    std::mt19937_64 rng(14);
    const Setting s(algebra(testing::kFork));
    const auto ly = build_Y(s);
    const auto sp = split_Y(s, ly);
    const auto y = realize(ly, s.BA, k);
    std::vector<std::size_t> pos;
    for (auto l : sp.y_prime)
        pos.push_back(y.position[l]);
    const auto yp = span_of_positions(left_restriction(y.bimodule), pos);
    CHECK(yp.dim() == 6);
    const auto om = syzygy(yp);
    CHECK(om.cover.cover.dim() == 9);
    const auto mult = syzygy_multiplicities(s, ly, sp);
    const auto iso = is_isomorphic(om.module, semisimple(s.B.basis_algebra(), k, mult.nu), rng);
    CHECK(iso.verdict == Verdict::Yes);
}

TEST_CASE("the main criterion and the component classification")
{
    const Quiver r = relation_quiver(algebra(testing::kEx1));
    CHECK(prop_main_criterion(r));
    CHECK(gorenstein_classify(r) == RelationQuiverClass::Other);

    Quiver bad; // a loop at 0 entered twice from 1
    bad.add_vertex("0");
    bad.add_vertex("1");
    bad.add_arrow("l", 0, 0);
    bad.add_arrow("u", 1, 0);
    bad.add_arrow("v", 1, 0);
    CHECK_FALSE(prop_main_criterion(bad));

    Quiver empty;
    empty.add_vertex("a");
    empty.add_vertex("b");
    CHECK(prop_main_criterion(empty));
    CHECK(gorenstein_classify(empty) == RelationQuiverClass::AllBasicOrAcyclic);

    CHECK(gorenstein_classify(relation_quiver(algebra(testing::kDual))) == RelationQuiverClass::AllBasicOrAcyclic);
    CHECK(gorenstein_classify(relation_quiver(
              algebra("quiver g\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\nforbid a b\n"))) ==
          RelationQuiverClass::AllBasicOrAcyclic);
}

TEST_CASE_TEMPLATE("level search on the dual numbers", F, PrimeField, RationalField)
{
    const F k{};
    std::mt19937_64 rng(15);
    const Setting s(algebra(testing::kDual));
    const auto m = realize(build_M(s), s.AB, k);
    const auto y = realize(build_Y(s), s.BA, k);
    const auto ls = level_witness_search(s, m, y, 3, rng);
    REQUIRE(ls.found);
    CHECK(ls.n == 0);
    REQUIRE(ls.attempts.size() == 1);
    const auto& at = ls.attempts[0];
    CHECK(at.M_left_projective);
    CHECK(at.M_right_projective);
    CHECK(at.N_left_projective);
    CHECK(at.N_right_projective);
    CHECK(at.iso_A == Verdict::Yes);
    CHECK(at.iso_B == Verdict::Yes);
    CHECK(at.witnesses_checked);
}

TEST_CASE_TEMPLATE("level search without relations", F, PrimeField, RationalField)
{
    const F k{};
    std::mt19937_64 rng(16);
    const Setting s(algebra(testing::kA3));
    // A is not projective over A (x) A^op, so level 0 needs more than vanishing singularity data
    CHECK_FALSE(is_projective(bimodule_as_onesided(regular_bimodule(s.AA, k))));
    const auto m = realize(build_M(s), s.AB, k);
    const auto y = realize(build_Y(s), s.BA, k);
    const auto ls = level_witness_search(s, m, y, 3, rng);
    REQUIRE_FALSE(ls.attempts.empty());
    CHECK(ls.attempts[0].iso_A == Verdict::No);
    REQUIRE(ls.found);
    CHECK(ls.n == 1);
}

TEST_CASE_TEMPLATE("analysis reports", F, PrimeField, RationalField)
{
    const F k{};
    {
        const auto rep = analyze(algebra(testing::kEx1), k);
        CHECK(rep.constructions_ok);
        CHECK(rep.dimA == 7);
        CHECK(rep.dimB == 6);
        CHECK(rep.dimM == 10);
        CHECK(rep.dimY == 11);
        CHECK(rep.dimZ == 8);
        CHECK(rep.relation_quiver_class == RelationQuiverClass::Other);
        CHECK(rep.prop_main);
        CHECK(rep.pd_kY_leftB == PdResult::finite(0));
        CHECK(rep.pd_kZ_rightA == PdResult::infinite());
        CHECK(rep.verdict);
        CHECK(rep.warnings.empty());
    }
    {
        const auto rep = analyze(algebra(testing::kDual), k);
        CHECK(rep.relation_quiver_class == RelationQuiverClass::AllBasicOrAcyclic);
        CHECK(rep.verdict);
        CHECK(rep.level.found);
        CHECK(rep.level.n == 0);
    }
    {
        const auto rep = analyze(algebra(testing::kA3), k);
        CHECK(rep.pd_kY_leftB.is_finite());
        CHECK(rep.pd_kZ_rightA.is_finite());
        CHECK(rep.verdict);
    }
    {
        AnalysisOptions opt;
        opt.level_search = false;
        const auto rep = analyze(algebra(testing::kFork), k, opt);
        CHECK(rep.level.attempts.empty());
        CHECK(rep.constructions_ok);
    }
}

TEST_CASE("pd bookkeeping")
{
    CHECK(pd_max(PdResult::finite(2), PdResult::finite(3)) == PdResult::finite(3));
    CHECK(pd_max(PdResult::finite(2), PdResult::infinite()) == PdResult::infinite());
    CHECK(pd_max(PdResult::at_least(4), PdResult::finite(7)) == PdResult::at_least(7));
    CHECK(pd_max(PdResult::at_least(4), PdResult::finite(1)) == PdResult::at_least(4));
    CHECK(to_string(PdResult::finite(0)) == "Finite(0)");
    CHECK(to_string(PdResult::infinite()) == "Infinite");
    CHECK(to_string(PdResult::at_least(10)) == "AtLeast(10)");
}
