#pragma once

// Shared fixtures for the unit tests and the acceptance run: the golden
// algebras, a brute-force path enumerator used as an independent oracle, and
// the seeded random corpus.

#include "singquiv/spec_format.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace singquiv::testing {

inline const char* const kEx1 = "quiver ex1\n"
                                "vertices 1 2\n"
                                "arrow alpha 1 2\n"
                                "arrow beta 2 1\n"
                                "arrow gamma 2 2\n"
                                "forbid beta alpha\n"
                                "forbid gamma beta\n"
                                "forbid gamma gamma\n";

inline const char* const kDual = "quiver dual\nvertex 1\narrow x 1 1\nforbid x x\n";

/// 1 => 2 -> 3 with x, w : 1 -> 2, y : 2 -> 3, both composites through y forbidden.
inline const char* const kFork = "quiver fork\n"
                                 "vertices 1 2 3\n"
                                 "arrow x 1 2\n"
                                 "arrow w 1 2\n"
                                 "arrow y 2 3\n"
                                 "forbid x y\n"
                                 "forbid w y\n";

inline const char* const kA3 = "quiver a3\nvertices 1 2 3\narrow a 1 2\narrow b 2 3\n";

inline QMAlgebra algebra(const char* text) { return build_from_spec(parse_spec(text)); }

/// Arrow words in traversal order that avoid every forbidden pair, found by
/// breadth-first extension without consulting the algebra's own basis. Words
/// of length max_len + 1 are reported through `overflow`.
struct NaivePaths {
    std::vector<std::vector<std::string>> words; // nontrivial paths only
    bool overflow = false;
};

inline NaivePaths naive_paths(const QuiverSpec& s, std::size_t max_len)
{
    std::set<std::pair<std::string, std::string>> forbidden;
    for (const auto& f : s.forbids)
        forbidden.insert({f.first, f.second});
    auto source = [&](const std::string& a) {
        return std::find_if(s.arrows.begin(), s.arrows.end(), [&](const auto& d) { return d.id == a; })->source;
    };
    auto target = [&](const std::string& a) {
        return std::find_if(s.arrows.begin(), s.arrows.end(), [&](const auto& d) { return d.id == a; })->target;
    };
    NaivePaths out;
    std::vector<std::vector<std::string>> layer;
    for (const auto& a : s.arrows)
        layer.push_back({a.id});
    for (std::size_t len = 1; !layer.empty(); ++len) {
        if (len > max_len) {
            out.overflow = true;
            break;
        }
        std::vector<std::vector<std::string>> next;
        for (const auto& w : layer) {
            out.words.push_back(w);
            for (const auto& a : s.arrows)
                if (target(w.back()) == source(a.id) && !forbidden.count({w.back(), a.id})) {
                    auto v = w;
                    v.push_back(a.id);
                    next.push_back(std::move(v));
                }
        }
        layer = std::move(next);
    }
    return out;
}

/// dim A by enumeration, or nullopt when some word longer than |Q_1| avoids F
/// (then an arrow repeats inside a nonzero word and powers of that cycle survive).
inline std::optional<std::size_t> naive_dim(const QuiverSpec& s)
{
    const auto p = naive_paths(s, s.arrows.size());
    if (p.overflow)
        return std::nullopt;
    return s.vertices.size() + p.words.size();
}

struct CorpusEntry {
    QuiverSpec spec;
    std::size_t dim;
};

/// Random quadratic monomial algebras: at most `max_vertices` vertices and
/// `max_arrows` arrows, each composable pair forbidden with probability 1/2,
/// kept only when finite dimensional with dim A <= max_dim.
inline std::vector<CorpusEntry> random_corpus(std::size_t count, std::uint64_t seed, std::size_t max_vertices = 4,
                                              std::size_t max_arrows = 5, std::size_t max_dim = 40)
{
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    std::set<std::string> seen;
    for (std::size_t attempt = 0; out.size() < count && attempt < 200 * count; ++attempt) {
        QuiverSpec s;
        s.name = "r" + std::to_string(out.size());
        const std::size_t nv = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
        const std::size_t na = std::uniform_int_distribution<std::size_t>(1, max_arrows)(rng);
        for (std::size_t v = 0; v < nv; ++v)
            s.vertices.push_back(std::to_string(v + 1));
        std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
        for (std::size_t a = 0; a < na; ++a)
            s.arrows.push_back({"a" + std::to_string(a), s.vertices[pick(rng)], s.vertices[pick(rng)]});
        for (const auto& f : s.arrows)
            for (const auto& g : s.arrows)
                if (f.target == g.source && (rng() & 1))
                    s.forbids.push_back({f.id, g.id, 0});
        const auto d = naive_dim(s);
        if (!d || *d > max_dim)
            continue;
        std::string key = render_spec(s);
        key.erase(0, key.find('\n'));
        if (!seen.insert(key).second)
            continue;
        out.push_back({std::move(s), *d});
    }
    return out;
}

} // namespace singquiv::testing
