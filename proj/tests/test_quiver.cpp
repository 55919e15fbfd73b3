#include "support.hpp"

#include <doctest.h>

using namespace singquiv;

namespace {

/// R of ex1: gamma loop, gamma -> beta, beta -> alpha.
Quiver ex1_relation_quiver()
{
    Quiver r;
    for (const char* v : {"alpha", "beta", "gamma"})
        r.add_vertex(v);
    r.add_arrow("[alpha beta]", 1, 0);
    r.add_arrow("[beta gamma]", 2, 1);
    r.add_arrow("[gamma gamma]", 2, 2);
    return r;
}

/// Oracle for left-boundedness: some path of length |Q_1| + 1 starts at v iff
/// a cycle is reachable from v.
bool has_long_path_from(const Quiver& q, std::size_t v, bool reverse)
{
    std::vector<std::size_t> frontier{v};
    for (std::size_t len = 0; len <= q.arrow_count(); ++len) {
        std::vector<std::size_t> next;
        for (auto u : frontier)
            for (auto a : reverse ? q.in_arrows(u) : q.out_arrows(u))
                next.push_back(reverse ? q.arrow(a).source : q.arrow(a).target);
        if (next.empty())
            return false;
        frontier = std::move(next);
    }
    return true;
}

} // namespace

TEST_CASE("boundedness in the ex1 relation quiver")
{
    const Quiver r = ex1_relation_quiver();
    CHECK_FALSE(is_left_bounded(r, "gamma"));
    CHECK(is_left_bounded(r, "alpha"));
    CHECK(is_left_bounded(r, "beta"));
    CHECK_FALSE(is_right_bounded(r, "alpha"));
    CHECK_FALSE(is_right_bounded(r, "gamma"));
    CHECK_FALSE(is_right_bounded(r, "beta"));
}

TEST_CASE("boundedness on small quivers")
{
    Quiver point;
    point.add_vertex("1");
    CHECK(is_left_bounded(point, "1"));
    CHECK(is_right_bounded(point, "1"));

    Quiver line;
    line.add_vertex("1");
    line.add_vertex("2");
    line.add_arrow("a", 0, 1);
    CHECK(is_right_bounded(line, "2"));
    CHECK(longest_path_to(line, 1) == 1u);
    CHECK(longest_path_from(line, 1) == 0u);
    CHECK(longest_path_from(line, 0) == 1u);
}

TEST_CASE("longest paths are unbounded exactly when a cycle is reachable")
{
    const Quiver r = ex1_relation_quiver();
    CHECK_FALSE(longest_path_from(r, 2).has_value());
    CHECK(longest_path_from(r, 0) == 0u);
    CHECK_FALSE(longest_path_to(r, 0).has_value());
}

TEST_CASE("vertex degrees")
{
    const Quiver r = ex1_relation_quiver();
    const auto g = vertex_degrees(r, "gamma");
    CHECK(g.in_degree == 1);
    CHECK_FALSE(g.is_source);
    const auto b = vertex_degrees(r, "beta");
    CHECK(b.in_degree == 1);
    CHECK_FALSE(b.is_source);
    Quiver point;
    point.add_vertex("v");
    CHECK(vertex_degrees(point, "v").in_degree == 0);
    CHECK(vertex_degrees(point, "v").is_source);
}

TEST_CASE("component classification")
{
    const auto c = classify_components(ex1_relation_quiver());
    REQUIRE(c.size() == 1);
    CHECK(c[0].vertices == std::vector<std::size_t>{0, 1, 2});
    CHECK(c[0].kind == ComponentKind::Other);

    Quiver loop;
    loop.add_vertex("x");
    loop.add_arrow("l", 0, 0);
    CHECK(classify_components(loop).at(0).kind == ComponentKind::BasicCycle);

    // R for 1 -> 2 -> 3 with the composite forbidden: a single arrow
    const Quiver r = relation_quiver(testing::algebra("quiver l\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\nforbid a b\n"));
    const auto lc = classify_components(r);
    REQUIRE(lc.size() == 1);
    CHECK(lc[0].kind == ComponentKind::Acyclic);

    Quiver mixed; // a 2-cycle, an isolated vertex, a 2-cycle with a chord
    for (int i = 0; i < 5; ++i)
        mixed.add_vertex(std::to_string(i));
    mixed.add_arrow("a", 0, 1);
    mixed.add_arrow("b", 1, 0);
    mixed.add_arrow("c", 3, 4);
    mixed.add_arrow("d", 4, 3);
    mixed.add_arrow("e", 3, 3);
    const auto mc = classify_components(mixed);
    REQUIRE(mc.size() == 3);
    CHECK(mc[0].kind == ComponentKind::BasicCycle);
    CHECK(mc[1].kind == ComponentKind::Acyclic);
    CHECK(mc[2].kind == ComponentKind::Other);
}

TEST_CASE("left-boundedness agrees with the long-path oracle on random quivers")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Quiver q;
        const std::size_t n = 1 + rng() % 5;
        for (std::size_t v = 0; v < n; ++v)
            q.add_vertex(std::to_string(v));
        const std::size_t m = rng() % 7;
        for (std::size_t a = 0; a < m; ++a)
            q.add_arrow("a" + std::to_string(a), rng() % n, rng() % n);
        const auto on_cycle = vertices_on_cycles(q);
        for (std::size_t v = 0; v < n; ++v) {
            CHECK(is_left_bounded(q, v) == !has_long_path_from(q, v, false));
            CHECK(is_right_bounded(q, v) == !has_long_path_from(q, v, true));
            if (on_cycle[v]) {
                CHECK_FALSE(is_left_bounded(q, v));
            }
        }
    }
}

TEST_CASE("quiver construction rejects bad identifiers")
{
    Quiver q;
    q.add_vertex("1");
    CHECK_THROWS_AS(q.add_vertex("1"), InputError);
    CHECK_THROWS_AS(q.vertex_index("2"), InputError);
    CHECK_THROWS_AS(q.arrow_index("a"), InputError);
}
