#pragma once

// Quadratic monomial algebras A = kQ/I and their radical square zero partners
// B = kR/J^2, where R is the relation quiver.
//
// Composition convention: a path is stored in traversal order, arrows()[0]
// being traversed first. The algebra product p * q is "q first, then p", so
// p * q is nonzero only when s(p) = t(q). A forbidden pair (a, b) means the
// composite "a then b", which is written b*a in product notation.

#include "singquiv/basis_algebra.hpp"
#include "singquiv/errors.hpp"
#include "singquiv/quiver.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace singquiv {

enum class Side { Left, Right };

inline std::string to_string(Side s) { return s == Side::Left ? "Left" : "Right"; }

class Path {
public:
    static Path trivial(std::size_t vertex) { return Path(vertex, vertex, {}); }
    /// Arrows in traversal order; throws NotComposable when consecutive arrows do not meet.
    static Path from_arrows(const Quiver& q, std::vector<std::size_t> traversal);

    bool is_trivial() const { return arrows_.empty(); }
    std::size_t length() const { return arrows_.size(); }
    std::size_t source() const { return source_; }
    std::size_t target() const { return target_; }
    const std::vector<std::size_t>& arrows() const { return arrows_; }
    /// First traversed (rightmost in product notation).
    std::size_t first_arrow() const { return arrows_.front(); }
    /// Last traversed (leftmost in product notation).
    std::size_t last_arrow() const { return arrows_.back(); }

    bool operator==(const Path&) const = default;

    /// Basis order: trivial paths by vertex, then by length, then lexicographic in traversal order.
    friend bool basis_less(const Path& a, const Path& b);

private:
    Path(std::size_t s, std::size_t t, std::vector<std::size_t> arrows)
        : source_(s), target_(t), arrows_(std::move(arrows))
    {
    }

    std::size_t source_;
    std::size_t target_;
    std::vector<std::size_t> arrows_;
};

/// A forbidden composite: `first` traversed, then `second`.
struct ForbiddenPair {
    std::size_t first;
    std::size_t second;
    bool operator==(const ForbiddenPair&) const = default;
    auto operator<=>(const ForbiddenPair&) const = default;
};

class QMAlgebra {
public:
    /// Enumerates the nonzero-path basis. Duplicate pairs are dropped. Throws
    /// NotComposable or InfiniteDimensional.
    QMAlgebra(Quiver quiver, std::vector<ForbiddenPair> forbidden);

    const Quiver& quiver() const { return quiver_; }
    /// Sorted by product notation: (second, first).
    const std::vector<ForbiddenPair>& forbidden() const { return forbidden_; }
    bool is_forbidden(std::size_t first, std::size_t second) const;

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& path(std::size_t i) const { return basis_.at(i); }
    std::optional<std::size_t> index_of(const Path& p) const;
    std::size_t trivial_index(std::size_t vertex) const { return vertex; }
    std::size_t arrow_index(std::size_t arrow) const { return arrow_basis_.at(arrow); }

    /// Index of p * q (q first), or nullopt when the product vanishes.
    std::optional<std::size_t> multiply(std::size_t p, std::size_t q) const;
    /// Path version; throws InputError when an operand is not a nonzero path.
    std::optional<Path> multiply(const Path& p, const Path& q) const;

    bool is_nonzero(const Path& p) const;

    std::string path_label(const Path& p) const;
    std::string path_label(std::size_t i) const { return path_label(basis_.at(i)); }

    const AlgebraPtr& basis_algebra() const { return algebra_; }

private:
    Quiver quiver_;
    std::vector<ForbiddenPair> forbidden_;
    std::vector<Path> basis_;
    std::map<std::vector<std::size_t>, std::size_t> index_;
    std::vector<std::size_t> arrow_basis_;
    AlgebraPtr algebra_;
};

/// build_algebra: parse-level entry point taking forbidden pairs in traversal order.
QMAlgebra build_algebra(const Quiver& q, const std::vector<ForbiddenPair>& forbidden);

/// Vertices are the arrows of Q (same ids); one arrow "[b a]" from a to b for each forbidden composite b*a.
Quiver relation_quiver(const QMAlgebra& a);

class RszAlgebra {
public:
    explicit RszAlgebra(Quiver relation_quiver);

    const Quiver& relation_quiver() const { return quiver_; }
    std::size_t dim() const { return quiver_.vertex_count() + quiver_.arrow_count(); }
    std::size_t idempotent_index(std::size_t vertex) const { return vertex; }
    std::size_t arrow_basis_index(std::size_t arrow) const { return quiver_.vertex_count() + arrow; }
    /// Basis index of the arrow from -> to, if present.
    std::optional<std::size_t> bracket(std::size_t from, std::size_t to) const;

    const AlgebraPtr& basis_algebra() const { return algebra_; }

private:
    Quiver quiver_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> bracket_;
    AlgebraPtr algebra_;
};

RszAlgebra build_rsz(const Quiver& r);

/// Basis indices of the left ideal A p (nonzero q * p) or right ideal p A (nonzero p * q).
std::vector<std::size_t> ideal_basis(const QMAlgebra& a, std::size_t p, Side side);

struct PresentationTerm {
    std::size_t vertex;     // the summand is the projective at this vertex
    std::size_t multiplier; // basis index: the summand maps in by multiplication with this element
    std::string label;
};

/// Two-term projective presentation  (+) P_j --> P_cover --> C --> 0.
/// Left side: P = A e_v and the maps are right multiplications; Right side: P = e_v A and
/// the maps are left multiplications. The cover sends its generator e_{cover_vertex}
/// to `cover_generator`.
struct PresentationData {
    Side side;
    std::vector<PresentationTerm> middle;
    std::size_t cover_vertex;
    std::size_t cover_generator;
    std::string cokernel;
};

/// The sequence  (+)_{b*alpha in F} A e_{t(b)} --b--> A e_{t(alpha)} --> A alpha --> 0, or its mirror.
PresentationData arrow_presentation(const QMAlgebra& a, std::size_t alpha, Side side);
/// The sequence  (+)_{b*alpha in F} B e_b --[b alpha]--> B e_alpha --> S_alpha --> 0.
PresentationData simple_presentation(const RszAlgebra& b, std::size_t alpha);

} // namespace singquiv
