#pragma once

// Text format for quadratic monomial algebras.
//
//   quiver <name>
//   vertex <id>            or   vertices <id> <id> ...
//   arrow <id> <source> <target>
//   forbid <first> <second>
//
// `forbid f g` kills the path that traverses f and then g, the composite
// written g f in product notation. '#' starts a comment; lines may come in any
// order, but every identifier must be declared somewhere in the file.

#include "singquiv/monomial_algebra.hpp"

#include <string>
#include <vector>

namespace singquiv {

struct QuiverSpec {
    struct ArrowDecl {
        std::string id;
        std::string source;
        std::string target;
        bool operator==(const ArrowDecl&) const = default;
    };
    struct ForbidDecl {
        std::string first;
        std::string second;
        std::size_t line = 0;
        bool operator==(const ForbidDecl& o) const { return first == o.first && second == o.second; }
    };

    std::string name = "unnamed";
    std::vector<std::string> vertices;
    std::vector<ArrowDecl> arrows;
    std::vector<ForbidDecl> forbids;

    bool operator==(const QuiverSpec&) const = default;
};

/// Throws InputError; messages start with "line <n>:" when a line is at fault.
QuiverSpec parse_spec(const std::string& text);
QuiverSpec read_spec_file(const std::string& path);

/// Canonical text form; parse_spec(render_spec(s)) == s.
std::string render_spec(const QuiverSpec& s);

Quiver spec_quiver(const QuiverSpec& s);
/// Builds the algebra; throws InfiniteDimensional when some cycle survives.
QMAlgebra build_from_spec(const QuiverSpec& s);

} // namespace singquiv
