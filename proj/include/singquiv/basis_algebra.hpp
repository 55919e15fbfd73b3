#pragma once

// A finite-dimensional basic algebra presented by a basis that is closed under
// multiplication up to zero: the product of two basis elements is a basis
// element or 0. Path algebras of quadratic monomial algebras, radical square
// zero algebras, their opposites and tensor products all have this form.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace singquiv {

class BasisAlgebra {
public:
    struct Element {
        std::string label;
        std::size_t left_vertex;  // e_left * x = x
        std::size_t right_vertex; // x * e_right = x
    };

    /// `table[i * dim + j]` is the index of basis[i] * basis[j], or -1 for zero.
    /// `idempotents[v]` is the basis index of the primitive idempotent of vertex v;
    /// every other basis element lies in the radical. `generators` are radical
    /// elements such that every radical basis element is g * y for a generator g.
    BasisAlgebra(std::string name, std::vector<std::string> vertex_labels, std::vector<Element> basis,
                 std::vector<std::int32_t> table, std::vector<std::size_t> idempotents,
                 std::vector<std::size_t> generators);

    /// Algebra with the product reversed.
    static BasisAlgebra opposite(const BasisAlgebra& a);
    /// a (x) b^op, basis index i * dim(b) + j for the pair (a_i, b_j).
    static BasisAlgebra tensor_with_opposite(const BasisAlgebra& a, const BasisAlgebra& b);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t vertex_count() const { return idempotents_.size(); }
    const std::string& vertex_label(std::size_t v) const { return vertex_labels_.at(v); }
    const Element& element(std::size_t i) const { return basis_.at(i); }
    const std::string& label(std::size_t i) const { return basis_.at(i).label; }

    std::optional<std::size_t> product(std::size_t i, std::size_t j) const
    {
        const auto r = table_[i * basis_.size() + j];
        if (r < 0)
            return std::nullopt;
        return static_cast<std::size_t>(r);
    }

    std::size_t idempotent(std::size_t vertex) const { return idempotents_.at(vertex); }
    bool is_idempotent(std::size_t i) const { return vertex_of_idempotent_.at(i).has_value(); }
    std::optional<std::size_t> vertex_of_idempotent(std::size_t i) const { return vertex_of_idempotent_.at(i); }
    const std::vector<std::size_t>& generators() const { return generators_; }
    /// Position of basis element i in generators(), if it is a generator.
    std::optional<std::size_t> generator_position(std::size_t i) const { return generator_pos_.at(i); }

    /// For a radical element x, a pair (g, y) with g a generator and x = g * y.
    std::pair<std::size_t, std::size_t> factorization(std::size_t i) const { return factor_.at(i); }
    /// Radical layer: 0 for idempotents, 1 for generators, ...
    std::size_t depth(std::size_t i) const { return depth_.at(i); }

    /// Basis of the left projective A e_v: elements whose right vertex is v.
    const std::vector<std::size_t>& left_projective_basis(std::size_t v) const { return by_right_.at(v); }
    /// Basis of the right projective e_v A: elements whose left vertex is v.
    const std::vector<std::size_t>& right_projective_basis(std::size_t v) const { return by_left_.at(v); }

    /// Checks associativity of the table and the idempotent identities; throws on failure.
    void validate() const;

private:
    std::string name_;
    std::vector<std::string> vertex_labels_;
    std::vector<Element> basis_;
    std::vector<std::int32_t> table_;
    std::vector<std::size_t> idempotents_;
    std::vector<std::optional<std::size_t>> vertex_of_idempotent_;
    std::vector<std::size_t> generators_;
    std::vector<std::optional<std::size_t>> generator_pos_;
    std::vector<std::pair<std::size_t, std::size_t>> factor_;
    std::vector<std::size_t> depth_;
    std::vector<std::vector<std::size_t>> by_right_;
    std::vector<std::vector<std::size_t>> by_left_;
};

using AlgebraPtr = std::shared_ptr<const BasisAlgebra>;

/// The algebras a bimodule lives over: a left algebra, a right algebra, the
/// opposite of the right one (over which right modules are left modules) and
/// the enveloping algebra left (x) right^op, built on first use.
class BimoduleFrame {
public:
    static std::shared_ptr<const BimoduleFrame> make(AlgebraPtr left, AlgebraPtr right);
    static std::shared_ptr<const BimoduleFrame> make(AlgebraPtr left, AlgebraPtr right, AlgebraPtr right_op);

    const AlgebraPtr& left() const { return left_; }
    const AlgebraPtr& right() const { return right_; }
    const AlgebraPtr& right_op() const { return right_op_; }
    const AlgebraPtr& enveloping() const;

private:
    BimoduleFrame(AlgebraPtr left, AlgebraPtr right, AlgebraPtr right_op)
        : left_(std::move(left)), right_(std::move(right)), right_op_(std::move(right_op))
    {
    }

    AlgebraPtr left_, right_, right_op_;
    mutable std::once_flag env_once_;
    mutable AlgebraPtr enveloping_;
};

using FramePtr = std::shared_ptr<const BimoduleFrame>;

/// The one-dimensional algebra k with a single vertex.
AlgebraPtr ground_field_algebra();

} // namespace singquiv
