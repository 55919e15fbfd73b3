#include "singquiv/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace singquiv {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
{
    for (auto& v : vertices)
        add_vertex(std::move(v));
    for (auto& a : arrows)
        add_arrow(std::move(a.id), a.source, a.target);
}

std::size_t Quiver::add_vertex(std::string id)
{
    if (find_vertex(id))
        throw InputError(InputError::Kind::Duplicate, "duplicate vertex id '" + id + "'");
    vertices_.push_back(std::move(id));
    out_.emplace_back();
    in_.emplace_back();
    return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(std::string id, std::size_t source, std::size_t target)
{
    if (find_arrow(id))
        throw InputError(InputError::Kind::Duplicate, "duplicate arrow id '" + id + "'");
    if (source >= vertices_.size() || target >= vertices_.size())
        throw InputError(InputError::Kind::UnknownIdentifier, "arrow '" + id + "' has an undeclared endpoint");
    arrows_.push_back({std::move(id), source, target});
    const std::size_t a = arrows_.size() - 1;
    out_[source].push_back(a);
    in_[target].push_back(a);
    return a;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& id) const
{
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].id == id)
            return a;
    return std::nullopt;
}

std::size_t Quiver::vertex_index(const std::string& id) const
{
    if (auto v = find_vertex(id))
        return *v;
    throw InputError(InputError::Kind::UnknownIdentifier, "unknown vertex '" + id + "'");
}

std::size_t Quiver::arrow_index(const std::string& id) const
{
    if (auto a = find_arrow(id))
        return *a;
    throw InputError(InputError::Kind::UnknownIdentifier, "unknown arrow '" + id + "'");
}

Quiver Quiver::reversed() const
{
    Quiver r;
    for (const auto& v : vertices_)
        r.add_vertex(v);
    for (const auto& a : arrows_)
        r.add_arrow(a.id, a.target, a.source);
    return r;
}

namespace {

void check_vertex(const Quiver& q, std::size_t v)
{
    if (v >= q.vertex_count())
        throw InputError(InputError::Kind::UnknownIdentifier, "vertex index " + std::to_string(v) + " out of range");
}

std::vector<bool> reachable_from(const Quiver& q, std::size_t v)
{
    std::vector<bool> seen(q.vertex_count(), false);
    std::vector<std::size_t> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (auto a : q.out_arrows(u)) {
            const std::size_t w = q.arrow(a).target;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

} // namespace

std::vector<std::size_t> strongly_connected_components(const Quiver& q, std::size_t* count)
{
    // Tarjan, iterative.
    const std::size_t n = q.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::size_t next_index = 0, next_comp = 0;

    struct Frame {
        std::size_t v;
        std::size_t edge;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        std::vector<Frame> calls{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!calls.empty()) {
            auto& f = calls.back();
            const auto& outs = q.out_arrows(f.v);
            if (f.edge < outs.size()) {
                const std::size_t w = q.arrow(outs[f.edge++]).target;
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::size_t v = f.v;
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            calls.pop_back();
            if (!calls.empty())
                low[calls.back().v] = std::min(low[calls.back().v], low[v]);
        }
    }
    if (count)
        *count = next_comp;
    return comp;
}

std::vector<bool> vertices_on_cycles(const Quiver& q)
{
    std::size_t ncomp = 0;
    const auto comp = strongly_connected_components(q, &ncomp);
    std::vector<std::size_t> size(ncomp, 0);
    for (auto c : comp)
        ++size[c];
    std::vector<bool> on_cycle(q.vertex_count(), false);
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        on_cycle[v] = size[comp[v]] >= 2;
    for (const auto& a : q.arrows())
        if (a.source == a.target)
            on_cycle[a.source] = true;
    return on_cycle;
}

bool is_left_bounded(const Quiver& q, std::size_t v)
{
    check_vertex(q, v);
    const auto reach = reachable_from(q, v);
    const auto cyc = vertices_on_cycles(q);
    for (std::size_t u = 0; u < q.vertex_count(); ++u)
        if (reach[u] && cyc[u])
            return false;
    return true;
}

bool is_left_bounded(const Quiver& q, const std::string& v) { return is_left_bounded(q, q.vertex_index(v)); }

bool is_right_bounded(const Quiver& q, std::size_t v)
{
    check_vertex(q, v);
    return is_left_bounded(q.reversed(), v);
}

bool is_right_bounded(const Quiver& q, const std::string& v) { return is_right_bounded(q, q.vertex_index(v)); }

std::optional<std::size_t> longest_path_from(const Quiver& q, std::size_t v)
{
    if (!is_left_bounded(q, v))
        return std::nullopt;
    // The reachable subgraph is acyclic; memoised depth-first longest path.
    std::vector<std::optional<std::size_t>> memo(q.vertex_count());
    std::function<std::size_t(std::size_t)> depth = [&](std::size_t u) -> std::size_t {
        if (memo[u])
            return *memo[u];
        std::size_t best = 0;
        for (auto a : q.out_arrows(u))
            best = std::max(best, 1 + depth(q.arrow(a).target));
        memo[u] = best;
        return best;
    };
    return depth(v);
}

std::optional<std::size_t> longest_path_to(const Quiver& q, std::size_t v)
{
    check_vertex(q, v);
    return longest_path_from(q.reversed(), v);
}

VertexDegrees vertex_degrees(const Quiver& q, std::size_t v)
{
    check_vertex(q, v);
    const std::size_t in = q.in_arrows(v).size();
    return {in, in == 0};
}

VertexDegrees vertex_degrees(const Quiver& q, const std::string& v) { return vertex_degrees(q, q.vertex_index(v)); }

std::string to_string(ComponentKind kind)
{
    switch (kind) {
    case ComponentKind::BasicCycle:
        return "BasicCycle";
    case ComponentKind::Acyclic:
        return "Acyclic";
    case ComponentKind::Other:
        return "Other";
    }
    return "Other";
}

std::vector<Component> classify_components(const Quiver& q)
{
    const std::size_t n = q.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : q.arrows()) {
        const std::size_t ra = find(a.source), rb = find(a.target);
        if (ra != rb)
            parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    const auto cyc = vertices_on_cycles(q);

    std::vector<Component> out;
    std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t r = find(v);
        if (slot[r] == static_cast<std::size_t>(-1)) {
            slot[r] = out.size();
            out.push_back({{}, ComponentKind::Acyclic});
        }
        out[slot[r]].vertices.push_back(v);
    }
    for (auto& c : out) {
        bool any_cycle = false, all_degree_one = true;
        for (auto v : c.vertices) {
            any_cycle = any_cycle || cyc[v];
            if (q.in_arrows(v).size() != 1 || q.out_arrows(v).size() != 1)
                all_degree_one = false;
        }
        if (!any_cycle)
            c.kind = ComponentKind::Acyclic;
        else if (all_degree_one)
            c.kind = ComponentKind::BasicCycle;
        else
            c.kind = ComponentKind::Other;
    }
    return out;
}

} // namespace singquiv
