#include "singquiv/basis_algebra.hpp"

#include <deque>
#include <stdexcept>

namespace singquiv {

BasisAlgebra::BasisAlgebra(std::string name, std::vector<std::string> vertex_labels, std::vector<Element> basis,
                           std::vector<std::int32_t> table, std::vector<std::size_t> idempotents,
                           std::vector<std::size_t> generators)
    : name_(std::move(name)),
      vertex_labels_(std::move(vertex_labels)),
      basis_(std::move(basis)),
      table_(std::move(table)),
      idempotents_(std::move(idempotents)),
      generators_(std::move(generators))
{
    const std::size_t n = basis_.size();
    if (table_.size() != n * n)
        throw std::invalid_argument("BasisAlgebra: table size mismatch");
    if (vertex_labels_.size() != idempotents_.size())
        throw std::invalid_argument("BasisAlgebra: vertex label count mismatch");

    vertex_of_idempotent_.assign(n, std::nullopt);
    for (std::size_t v = 0; v < idempotents_.size(); ++v)
        vertex_of_idempotent_.at(idempotents_[v]) = v;

    generator_pos_.assign(n, std::nullopt);
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        if (vertex_of_idempotent_.at(generators_[g]))
            throw std::invalid_argument("BasisAlgebra: an idempotent cannot be a generator");
        generator_pos_[generators_[g]] = g;
    }

    by_right_.assign(idempotents_.size(), {});
    by_left_.assign(idempotents_.size(), {});
    for (std::size_t i = 0; i < n; ++i) {
        by_right_.at(basis_[i].right_vertex).push_back(i);
        by_left_.at(basis_[i].left_vertex).push_back(i);
    }

    // Radical layers by breadth-first closure under left multiplication by generators.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    depth_.assign(n, unset);
    factor_.assign(n, {unset, unset});
    std::deque<std::size_t> queue;
    for (auto e : idempotents_) {
        depth_[e] = 0;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        const std::size_t y = queue.front();
        queue.pop_front();
        for (auto g : generators_) {
            auto x = product(g, y);
            if (x && depth_[*x] == unset) {
                depth_[*x] = depth_[y] + 1;
                factor_[*x] = {g, y};
                queue.push_back(*x);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (depth_[i] == unset)
            throw std::invalid_argument("BasisAlgebra '" + name_ + "': element " + basis_[i].label +
                                        " is not generated by the given generators");
}

void BasisAlgebra::validate() const
{
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& el = basis_[i];
        if (product(idempotents_[el.left_vertex], i) != i || product(i, idempotents_[el.right_vertex]) != i)
            throw std::logic_error(name_ + ": idempotent identities fail for " + el.label);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                auto ij = product(i, j);
                auto jl = product(j, l);
                auto left = ij ? product(*ij, l) : std::nullopt;
                auto right = jl ? product(i, *jl) : std::nullopt;
                if (left != right)
                    throw std::logic_error(name_ + ": multiplication is not associative");
            }
    }
    for (std::size_t v = 0; v < vertex_count(); ++v)
        for (std::size_t w = 0; w < vertex_count(); ++w) {
            auto p = product(idempotents_[v], idempotents_[w]);
            if ((v == w) != (p == idempotents_[v]) || (v != w && p))
                throw std::logic_error(name_ + ": idempotents are not orthogonal");
        }
}

BasisAlgebra BasisAlgebra::opposite(const BasisAlgebra& a)
{
    const std::size_t n = a.dim();
    std::vector<Element> basis;
    basis.reserve(n);
    for (const auto& el : a.basis_)
        basis.push_back({el.label, el.right_vertex, el.left_vertex});
    std::vector<std::int32_t> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            table[i * n + j] = a.table_[j * n + i];
    // Same generators; the constructor re-derives factorizations x = g *op y and
    // rejects the algebra if some radical element has no generator as right factor.
    return BasisAlgebra(a.name_ + "^op", a.vertex_labels_, std::move(basis), std::move(table), a.idempotents_,
                        a.generators_);
}

BasisAlgebra BasisAlgebra::tensor_with_opposite(const BasisAlgebra& a, const BasisAlgebra& b)
{
    const std::size_t na = a.dim(), nb = b.dim();
    const std::size_t va = a.vertex_count(), vb = b.vertex_count();
    std::vector<std::string> vlabels;
    for (std::size_t i = 0; i < va; ++i)
        for (std::size_t j = 0; j < vb; ++j)
            vlabels.push_back("(" + a.vertex_label(i) + "," + b.vertex_label(j) + ")");

    std::vector<Element> basis;
    basis.reserve(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const auto& x = a.element(i);
            const auto& y = b.element(j);
            // (e_u, e_w) (x, y) = (e_u x, y e_w)
            basis.push_back({x.label + " (x) " + y.label, x.left_vertex * vb + y.right_vertex,
                             x.right_vertex * vb + y.left_vertex});
        }

    const std::size_t n = na * nb;
    std::vector<std::int32_t> table(n * n, -1);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t i2 = 0; i2 < na; ++i2) {
                auto x = a.product(i, i2);
                if (!x)
                    continue;
                for (std::size_t j2 = 0; j2 < nb; ++j2) {
                    auto y = b.product(j2, j);
                    if (y)
                        table[(i * nb + j) * n + (i2 * nb + j2)] = static_cast<std::int32_t>(*x * nb + *y);
                }
            }

    std::vector<std::size_t> idem;
    for (std::size_t u = 0; u < va; ++u)
        for (std::size_t w = 0; w < vb; ++w)
            idem.push_back(a.idempotent(u) * nb + b.idempotent(w));

    std::vector<std::size_t> gens;
    for (auto g : a.generators())
        for (std::size_t w = 0; w < vb; ++w)
            gens.push_back(g * nb + b.idempotent(w));
    for (std::size_t u = 0; u < va; ++u)
        for (auto g : b.generators())
            gens.push_back(a.idempotent(u) * nb + g);

    return BasisAlgebra(a.name_ + " (x) " + b.name_ + "^op", std::move(vlabels), std::move(basis), std::move(table),
                        std::move(idem), std::move(gens));
}

std::shared_ptr<const BimoduleFrame> BimoduleFrame::make(AlgebraPtr left, AlgebraPtr right)
{
    auto op = std::make_shared<const BasisAlgebra>(BasisAlgebra::opposite(*right));
    return make(std::move(left), std::move(right), std::move(op));
}

std::shared_ptr<const BimoduleFrame> BimoduleFrame::make(AlgebraPtr left, AlgebraPtr right, AlgebraPtr right_op)
{
    return std::shared_ptr<const BimoduleFrame>(
        new BimoduleFrame(std::move(left), std::move(right), std::move(right_op)));
}

const AlgebraPtr& BimoduleFrame::enveloping() const
{
    std::call_once(env_once_, [this] {
        enveloping_ = std::make_shared<const BasisAlgebra>(BasisAlgebra::tensor_with_opposite(*left_, *right_));
    });
    return enveloping_;
}

AlgebraPtr ground_field_algebra()
{
    static const AlgebraPtr k = std::make_shared<const BasisAlgebra>(
        BasisAlgebra("k", {"*"}, {{"1", 0, 0}}, {0}, {0}, {}));
    return k;
}

} // namespace singquiv
