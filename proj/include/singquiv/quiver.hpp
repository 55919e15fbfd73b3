#pragma once

#include "singquiv/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace singquiv {

/// Finite directed multigraph. Vertices and arrows carry opaque string ids and
/// are indexed densely in declaration order.
class Quiver {
public:
    struct Arrow {
        std::string id;
        std::size_t source;
        std::size_t target;
    };

    Quiver() = default;

    /// Validates uniqueness of ids and that arrow endpoints are declared.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t add_vertex(std::string id);
    std::size_t add_arrow(std::string id, std::size_t source, std::size_t target);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& vertex_id(std::size_t v) const { return vertices_.at(v); }
    const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::optional<std::size_t> find_vertex(const std::string& id) const;
    std::optional<std::size_t> find_arrow(const std::string& id) const;
    /// Throws InputError for unknown ids.
    std::size_t vertex_index(const std::string& id) const;
    std::size_t arrow_index(const std::string& id) const;

    const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_.at(v); }
    const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_.at(v); }

    /// Same vertices, every arrow reversed.
    Quiver reversed() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

/// No directed cycle is reachable from v.
bool is_left_bounded(const Quiver& q, std::size_t v);
bool is_left_bounded(const Quiver& q, const std::string& v);
/// No directed cycle reaches v.
bool is_right_bounded(const Quiver& q, std::size_t v);
bool is_right_bounded(const Quiver& q, const std::string& v);

/// Length of the longest path starting (ending) at v, nullopt when unbounded.
std::optional<std::size_t> longest_path_from(const Quiver& q, std::size_t v);
std::optional<std::size_t> longest_path_to(const Quiver& q, std::size_t v);

struct VertexDegrees {
    std::size_t in_degree;
    bool is_source;
};
VertexDegrees vertex_degrees(const Quiver& q, std::size_t v);
VertexDegrees vertex_degrees(const Quiver& q, const std::string& v);

/// Vertices lying on some directed cycle (the SCC has two or more vertices or carries a loop).
std::vector<bool> vertices_on_cycles(const Quiver& q);

enum class ComponentKind { BasicCycle, Acyclic, Other };
std::string to_string(ComponentKind kind);

struct Component {
    std::vector<std::size_t> vertices;
    ComponentKind kind;
};

/// Connected components of the underlying undirected graph, ordered by their smallest vertex.
std::vector<Component> classify_components(const Quiver& q);

/// Strongly connected components; component index per vertex.
std::vector<std::size_t> strongly_connected_components(const Quiver& q, std::size_t* count = nullptr);

} // namespace singquiv
