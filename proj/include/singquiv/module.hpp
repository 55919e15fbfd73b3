#pragma once

// Finite-dimensional modules over a BasisAlgebra.
//
// A module is stored as a representation: its basis is graded by vertices
// (block v spans e_v M, blocks laid out in vertex order) and each algebra
// generator g carries one matrix from block s(g) to block t(g), where s(g) and
// t(g) are the right and left vertices of g. Actions of the remaining basis
// elements are products along the algebra's factorizations. Right modules are
// left modules over the opposite algebra.

#include "singquiv/basis_algebra.hpp"
#include "singquiv/errors.hpp"
#include "singquiv/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace singquiv {

/// Per-vertex subspace bases (columns) of a module.
template <class F>
using Graded = std::vector<Mat<F>>;

template <class F>
class Module {
public:
    Module() = default;
    Module(AlgebraPtr algebra, F field, std::vector<std::size_t> dims, std::vector<Mat<F>> gens)
        : algebra_(std::move(algebra)), k_(std::move(field)), dims_(std::move(dims)), gens_(std::move(gens))
    {
        if (dims_.size() != algebra_->vertex_count())
            throw std::invalid_argument("Module: one block per vertex expected");
        if (gens_.size() != algebra_->generators().size())
            throw std::invalid_argument("Module: one matrix per generator expected");
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& el = algebra_->element(algebra_->generators()[i]);
            if (gens_[i].rows() != dims_[el.left_vertex] || gens_[i].cols() != dims_[el.right_vertex])
                throw std::invalid_argument("Module: generator matrix " + el.label + " has the wrong shape");
        }
        offsets_.resize(dims_.size());
        std::size_t off = 0;
        for (std::size_t v = 0; v < dims_.size(); ++v) {
            offsets_[v] = off;
            off += dims_[v];
        }
        total_ = off;
    }

    const AlgebraPtr& algebra() const { return algebra_; }
    const F& field() const { return k_; }
    std::size_t vertex_count() const { return dims_.size(); }
    std::size_t dim() const { return total_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim_at(std::size_t v) const { return dims_.at(v); }
    std::size_t offset(std::size_t v) const { return offsets_.at(v); }
    const Mat<F>& gen(std::size_t i) const { return gens_.at(i); }
    const std::vector<Mat<F>>& gens() const { return gens_; }

    /// Block e_{left(x)} M <- e_{right(x)} M of the action of basis element x.
    Mat<F> block_action(std::size_t x) const
    {
        if (auto v = algebra_->vertex_of_idempotent(x))
            return identity(k_, dims_[*v]);
        const auto [g, y] = algebra_->factorization(x);
        return multiply(k_, gens_[*algebra_->generator_position(g)], block_action(y));
    }

    /// Block actions of every basis element, computed along radical layers.
    std::vector<Mat<F>> all_block_actions() const
    {
        const std::size_t n = algebra_->dim();
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return algebra_->depth(a) < algebra_->depth(b); });
        std::vector<Mat<F>> out(n);
        for (auto x : order) {
            if (auto v = algebra_->vertex_of_idempotent(x)) {
                out[x] = identity(k_, dims_[*v]);
                continue;
            }
            const auto [g, y] = algebra_->factorization(x);
            out[x] = multiply(k_, gens_[*algebra_->generator_position(g)], out[y]);
        }
        return out;
    }

    /// The dim x dim matrix of basis element x.
    Mat<F> action(std::size_t x) const { return embed_block(x, block_action(x)); }

    Mat<F> embed_block(std::size_t x, const Mat<F>& block) const
    {
        const auto& el = algebra_->element(x);
        Mat<F> out = zeros(k_, total_, total_);
        const std::size_t r0 = offsets_[el.left_vertex], c0 = offsets_[el.right_vertex];
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                out(r0 + r, c0 + c) = block(r, c);
        return out;
    }

    /// Optional names of the basis vectors, in global order.
    std::vector<std::string> labels;

private:
    AlgebraPtr algebra_;
    F k_{};
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
    std::vector<Mat<F>> gens_;
};

/// A module map given by its blocks: blocks[v] maps e_v M to e_v N.
template <class F>
struct ModuleMap {
    std::vector<Mat<F>> blocks;
};

template <class F>
void require_same_algebra(const Module<F>& m, const Module<F>& n, const char* what)
{
    if (m.algebra() != n.algebra())
        throw InputError(InputError::Kind::Mismatch, std::string(what) + ": modules over different algebras");
}

template <class F>
std::vector<Mat<F>> zero_generators(const BasisAlgebra& a, const F& k, const std::vector<std::size_t>& dims)
{
    std::vector<Mat<F>> gens;
    for (auto g : a.generators())
        gens.push_back(zeros(k, dims[a.element(g).left_vertex], dims[a.element(g).right_vertex]));
    return gens;
}

template <class F>
Module<F> zero_module(const AlgebraPtr& a, const F& k)
{
    std::vector<std::size_t> dims(a->vertex_count(), 0);
    return Module<F>(a, k, dims, zero_generators(*a, k, dims));
}

template <class F>
Module<F> simple_module(const AlgebraPtr& a, const F& k, std::size_t v)
{
    std::vector<std::size_t> dims(a->vertex_count(), 0);
    dims.at(v) = 1;
    Module<F> s(a, k, dims, zero_generators(*a, k, dims));
    s.labels = {"S_" + a->vertex_label(v)};
    return s;
}

/// Basis elements of A e_v grouped by left vertex, each group in basis order.
inline std::vector<std::vector<std::size_t>> projective_blocks(const BasisAlgebra& a, std::size_t v)
{
    std::vector<std::vector<std::size_t>> out(a.vertex_count());
    for (auto x : a.left_projective_basis(v))
        out[a.element(x).left_vertex].push_back(x);
    return out;
}

/// Position of each basis element inside its block of projective_blocks.
inline std::vector<std::size_t> projective_positions(const BasisAlgebra& a, std::size_t v)
{
    std::vector<std::size_t> pos(a.dim(), 0);
    for (const auto& block : projective_blocks(a, v))
        for (std::size_t i = 0; i < block.size(); ++i)
            pos[block[i]] = i;
    return pos;
}

/// The indecomposable projective A e_v.
template <class F>
Module<F> regular_projective(const AlgebraPtr& a, const F& k, std::size_t v)
{
    const auto blocks = projective_blocks(*a, v);
    const auto pos = projective_positions(*a, v);
    std::vector<std::size_t> dims;
    for (const auto& b : blocks)
        dims.push_back(b.size());
    std::vector<Mat<F>> gens;
    for (auto g : a->generators()) {
        const auto& el = a->element(g);
        Mat<F> m = zeros(k, dims[el.left_vertex], dims[el.right_vertex]);
        for (std::size_t c = 0; c < blocks[el.right_vertex].size(); ++c)
            if (auto y = a->product(g, blocks[el.right_vertex][c]))
                m(pos[*y], c) = k.one();
        gens.push_back(std::move(m));
    }
    Module<F> p(a, k, dims, std::move(gens));
    for (const auto& b : blocks)
        for (auto x : b)
            p.labels.push_back(a->label(x));
    return p;
}

template <class F>
Module<F> direct_sum(const std::vector<const Module<F>*>& parts, const AlgebraPtr& a, const F& k)
{
    for (const auto* p : parts)
        if (p->algebra() != a)
            throw InputError(InputError::Kind::Mismatch, "direct_sum: modules over different algebras");
    std::vector<std::size_t> dims(a->vertex_count(), 0);
    for (const auto* p : parts)
        for (std::size_t v = 0; v < dims.size(); ++v)
            dims[v] += p->dim_at(v);
    std::vector<Mat<F>> gens = zero_generators(*a, k, dims);
    std::vector<std::size_t> off(dims.size(), 0);
    for (const auto* p : parts) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const auto& el = a->element(a->generators()[i]);
            const auto& src = p->gen(i);
            for (std::size_t r = 0; r < src.rows(); ++r)
                for (std::size_t c = 0; c < src.cols(); ++c)
                    gens[i](off[el.left_vertex] + r, off[el.right_vertex] + c) = src(r, c);
        }
        for (std::size_t v = 0; v < dims.size(); ++v)
            off[v] += p->dim_at(v);
    }
    Module<F> out(a, k, dims, std::move(gens));
    // labels follow the block layout: per vertex, the parts in order
    bool labelled = true;
    for (const auto* p : parts)
        labelled = labelled && p->labels.size() == p->dim();
    if (labelled)
        for (std::size_t v = 0; v < dims.size(); ++v)
            for (const auto* p : parts)
                for (std::size_t i = 0; i < p->dim_at(v); ++i)
                    out.labels.push_back(p->labels[p->offset(v) + i]);
    return out;
}

template <class F>
Module<F> direct_sum(const Module<F>& m, const Module<F>& n)
{
    require_same_algebra(m, n, "direct_sum");
    return direct_sum<F>({&m, &n}, m.algebra(), m.field());
}

/// Checks that the generator matrices satisfy every relation of the algebra.
/// Returns a description of the first violation.
template <class F>
std::optional<std::string> module_violation(const Module<F>& m)
{
    const auto& a = *m.algebra();
    const auto& k = m.field();
    const auto acts = m.all_block_actions();
    for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
        const std::size_t g = a.generators()[gi];
        for (std::size_t y = 0; y < a.dim(); ++y) {
            if (a.element(g).right_vertex != a.element(y).left_vertex)
                continue;
            const Mat<F> lhs = multiply(k, m.gen(gi), acts[y]);
            const auto gy = a.product(g, y);
            const bool ok = gy ? equal(k, lhs, acts[*gy]) : is_zero(k, lhs);
            if (!ok)
                return "action of " + a.label(g) + " * " + a.label(y) + " is inconsistent";
        }
    }
    return std::nullopt;
}

template <class F>
bool is_homomorphism(const Module<F>& m, const Module<F>& n, const ModuleMap<F>& f)
{
    const auto& a = *m.algebra();
    const auto& k = m.field();
    if (f.blocks.size() != m.vertex_count())
        return false;
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        if (f.blocks[v].rows() != n.dim_at(v) || f.blocks[v].cols() != m.dim_at(v))
            return false;
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const auto& el = a.element(a.generators()[i]);
        if (!equal(k, multiply(k, n.gen(i), f.blocks[el.right_vertex]),
                   multiply(k, f.blocks[el.left_vertex], m.gen(i))))
            return false;
    }
    return true;
}

template <class F>
ModuleMap<F> compose(const F& k, const ModuleMap<F>& g, const ModuleMap<F>& f)
{
    ModuleMap<F> out;
    for (std::size_t v = 0; v < f.blocks.size(); ++v)
        out.blocks.push_back(multiply(k, g.blocks[v], f.blocks[v]));
    return out;
}

template <class F>
bool is_invertible(const F& k, const ModuleMap<F>& f)
{
    for (const auto& b : f.blocks)
        if (b.rows() != b.cols() || rank(k, b) != b.rows())
            return false;
    return true;
}

/// The global dim(N) x dim(M) matrix of a module map.
template <class F>
Mat<F> full_matrix(const Module<F>& m, const Module<F>& n, const ModuleMap<F>& f)
{
    const auto& k = m.field();
    Mat<F> out = zeros(k, n.dim(), m.dim());
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        for (std::size_t r = 0; r < n.dim_at(v); ++r)
            for (std::size_t c = 0; c < m.dim_at(v); ++c)
                out(n.offset(v) + r, m.offset(v) + c) = f.blocks[v](r, c);
    return out;
}

/// Submodule spanned by an invariant graded subspace; throws if it is not invariant.
template <class F>
Module<F> submodule(const Module<F>& m, const Graded<F>& basis)
{
    const auto& a = *m.algebra();
    const auto& k = m.field();
    std::vector<SpanCoordinates<F>> coords;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        coords.emplace_back(k, basis.at(v));
        dims.push_back(basis[v].cols());
    }
    std::vector<Mat<F>> gens;
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const auto& el = a.element(a.generators()[i]);
        auto c = coords[el.left_vertex].try_coords(multiply(k, m.gen(i), basis[el.right_vertex]));
        if (!c)
            throw std::logic_error("submodule: subspace is not invariant under " + el.label);
        gens.push_back(std::move(*c));
    }
    return Module<F>(m.algebra(), k, dims, std::move(gens));
}

template <class F>
struct Quotient {
    Module<F> module;
    ModuleMap<F> projection;
};

template <class F>
Quotient<F> quotient(const Module<F>& m, const Graded<F>& sub)
{
    const auto& a = *m.algebra();
    const auto& k = m.field();
    std::vector<QuotientMap<F>> q;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        q.emplace_back(k, m.dim_at(v), sub.at(v));
        dims.push_back(q.back().dim());
    }
    std::vector<Mat<F>> gens;
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const auto& el = a.element(a.generators()[i]);
        gens.push_back(multiply(k, q[el.left_vertex].projection(),
                                select_columns(k, m.gen(i), q[el.right_vertex].kept())));
    }
    Quotient<F> out{Module<F>(m.algebra(), k, dims, std::move(gens)), {}};
    for (auto& qv : q)
        out.projection.blocks.push_back(qv.projection());
    return out;
}

/// rad M = sum of the images of the generators, per vertex.
template <class F>
Graded<F> radical(const Module<F>& m)
{
    const auto& a = *m.algebra();
    const auto& k = m.field();
    Graded<F> out;
    for (std::size_t w = 0; w < m.vertex_count(); ++w) {
        std::vector<const Mat<F>*> parts;
        for (std::size_t i = 0; i < a.generators().size(); ++i)
            if (a.element(a.generators()[i]).left_vertex == w)
                parts.push_back(&m.gen(i));
        out.push_back(column_space(k, hstack(k, parts, m.dim_at(w))));
    }
    return out;
}

template <class F>
std::vector<std::size_t> top_multiplicities(const Module<F>& m)
{
    const auto rad = radical(m);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < m.vertex_count(); ++v)
        out.push_back(m.dim_at(v) - rad[v].cols());
    return out;
}

/// A projective cover (+)_s A e_{i_s} --> M sending e_{i_s} of summand s to a
/// standard basis vector of block i_s lifting a basis of the top.
template <class F>
struct ProjectiveCover {
    Module<F> cover;
    std::vector<std::size_t> summand_vertex;
    std::vector<std::size_t> summand_generator; // index inside block summand_vertex[s] of M
    /// layout[w][c] = (summand, algebra basis element) of basis vector c of block w of the cover.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> layout;
    ModuleMap<F> map;
};

template <class F>
ProjectiveCover<F> projective_cover(const Module<F>& m)
{
    const auto& alg = m.algebra();
    const auto& a = *alg;
    const auto& k = m.field();
    const std::size_t nv = m.vertex_count();
    const auto rad = radical(m);

    ProjectiveCover<F> pc;
    for (std::size_t v = 0; v < nv; ++v)
        for (auto c : complement_columns(k, rad[v], identity(k, m.dim_at(v)))) {
            pc.summand_vertex.push_back(v);
            pc.summand_generator.push_back(c);
        }

    // Cover layout: block w lists, summand by summand, the basis of e_w A e_{i_s}.
    std::vector<std::vector<std::vector<std::size_t>>> pblocks(nv);
    std::vector<std::vector<std::size_t>> ppos(nv);
    std::vector<bool> have(nv, false);
    for (auto v : pc.summand_vertex)
        if (!have[v]) {
            have[v] = true;
            pblocks[v] = projective_blocks(a, v);
            ppos[v] = projective_positions(a, v);
        }
    pc.layout.assign(nv, {});
    std::vector<std::vector<std::size_t>> start(nv, std::vector<std::size_t>(pc.summand_vertex.size(), 0));
    for (std::size_t w = 0; w < nv; ++w)
        for (std::size_t s = 0; s < pc.summand_vertex.size(); ++s) {
            start[w][s] = pc.layout[w].size();
            for (auto x : pblocks[pc.summand_vertex[s]][w])
                pc.layout[w].push_back({s, x});
        }
    std::vector<std::size_t> dims(nv);
    for (std::size_t w = 0; w < nv; ++w)
        dims[w] = pc.layout[w].size();

    std::vector<Mat<F>> gens;
    for (auto g : a.generators()) {
        const auto& el = a.element(g);
        Mat<F> mat = zeros(k, dims[el.left_vertex], dims[el.right_vertex]);
        for (std::size_t c = 0; c < pc.layout[el.right_vertex].size(); ++c) {
            const auto [s, x] = pc.layout[el.right_vertex][c];
            if (auto y = a.product(g, x))
                mat(start[el.left_vertex][s] + ppos[pc.summand_vertex[s]][*y], c) = k.one();
        }
        gens.push_back(std::move(mat));
    }
    pc.cover = Module<F>(alg, k, dims, std::move(gens));
    for (std::size_t w = 0; w < nv; ++w)
        for (const auto& [s, x] : pc.layout[w])
            pc.cover.labels.push_back(a.label(x) + "#" + std::to_string(s));

    const auto acts = m.all_block_actions();
    for (std::size_t w = 0; w < nv; ++w) {
        Mat<F> blk = zeros(k, m.dim_at(w), dims[w]);
        for (std::size_t c = 0; c < dims[w]; ++c) {
            const auto [s, x] = pc.layout[w][c];
            const auto& act = acts[x];
            for (std::size_t r = 0; r < m.dim_at(w); ++r)
                blk(r, c) = act(r, pc.summand_generator[s]);
        }
        pc.map.blocks.push_back(std::move(blk));
    }
    return pc;
}

template <class F>
bool is_projective(const Module<F>& m)
{
    const auto top = top_multiplicities(m);
    std::size_t cover_dim = 0;
    for (std::size_t v = 0; v < top.size(); ++v)
        cover_dim += top[v] * m.algebra()->left_projective_basis(v).size();
    return cover_dim == m.dim();
}

template <class F>
struct Syzygy {
    ProjectiveCover<F> cover;
    Graded<F> kernel; // basis of the kernel inside the cover, per vertex
    Module<F> module;
};

template <class F>
Syzygy<F> syzygy(const Module<F>& m)
{
    Syzygy<F> out;
    out.cover = projective_cover(m);
    const auto& k = m.field();
    for (const auto& blk : out.cover.map.blocks)
        out.kernel.push_back(nullspace(k, blk));
    out.module = submodule(out.cover.cover, out.kernel);
    return out;
}

/// Data for computing Hom(M, -): a projective cover of M, generators of the
/// kernel of the cover, and a linear section of the cover map.
template <class F>
struct Presentation {
    const Module<F>* source = nullptr;
    ProjectiveCover<F> cover;
    Graded<F> relations; // per vertex: kernel elements generating the kernel as a module
    Graded<F> section;   // per vertex: cover coordinates of each basis vector of M
    std::vector<std::size_t> unknown_offset; // per summand, offset of its image vector
    std::size_t unknowns_for(const Module<F>& n) const
    {
        std::size_t u = 0;
        for (auto v : cover.summand_vertex)
            u += n.dim_at(v);
        return u;
    }
};

template <class F>
Presentation<F> present(const Module<F>& m)
{
    const auto& a = *m.algebra();
    const auto& k = m.field();
    Presentation<F> pr;
    pr.source = &m;
    pr.cover = projective_cover(m);
    const auto& p = pr.cover.cover;
    Graded<F> ker;
    for (const auto& blk : pr.cover.map.blocks)
        ker.push_back(nullspace(k, blk));
    for (std::size_t w = 0; w < m.vertex_count(); ++w) {
        std::vector<Mat<F>> images;
        for (std::size_t i = 0; i < a.generators().size(); ++i) {
            const auto& el = a.element(a.generators()[i]);
            if (el.left_vertex == w)
                images.push_back(multiply(k, p.gen(i), ker[el.right_vertex]));
        }
        std::vector<const Mat<F>*> ptrs;
        for (const auto& im : images)
            ptrs.push_back(&im);
        const Mat<F> rad = hstack(k, ptrs, p.dim_at(w));
        pr.relations.push_back(select_columns(k, ker[w], complement_columns(k, rad, ker[w])));
        auto sec = solve(k, pr.cover.map.blocks[w], identity(k, m.dim_at(w)));
        if (!sec)
            throw std::logic_error("present: cover map is not surjective");
        pr.section.push_back(std::move(*sec));
    }
    return pr;
}

/// Solution space of Hom(M, N) in terms of the images of the cover generators:
/// column j lists, summand after summand, the image of generator s in block i_s of N.
template <class F>
Mat<F> hom_solutions(const Presentation<F>& pr, const Module<F>& n, const std::vector<Mat<F>>& acts_n)
{
    const auto& k = n.field();
    const auto& pc = pr.cover;
    const std::size_t ns = pc.summand_vertex.size();
    std::vector<std::size_t> off(ns + 1, 0);
    for (std::size_t s = 0; s < ns; ++s)
        off[s + 1] = off[s] + n.dim_at(pc.summand_vertex[s]);
    std::size_t rows = 0;
    for (std::size_t w = 0; w < n.vertex_count(); ++w)
        rows += pr.relations[w].cols() * n.dim_at(w);
    Mat<F> sys = zeros(k, rows, off[ns]);
    std::size_t r0 = 0;
    for (std::size_t w = 0; w < n.vertex_count(); ++w) {
        const auto& rel = pr.relations[w];
        for (std::size_t j = 0; j < rel.cols(); ++j) {
            for (std::size_t c = 0; c < rel.rows(); ++c) {
                const auto coef = rel(c, j);
                if (k.is_zero(coef))
                    continue;
                const auto [s, x] = pc.layout[w][c];
                const auto& act = acts_n[x];
                for (std::size_t r = 0; r < act.rows(); ++r)
                    for (std::size_t q = 0; q < act.cols(); ++q)
                        if (!k.is_zero(act(r, q)))
                            sys(r0 + r, off[s] + q) = k.add(sys(r0 + r, off[s] + q), k.mul(coef, act(r, q)));
            }
            r0 += n.dim_at(w);
        }
    }
    return nullspace(k, sys);
}

/// The module map determined by the images of the cover generators.
template <class F>
ModuleMap<F> materialize(const Presentation<F>& pr, const Module<F>& n, const std::vector<Mat<F>>& acts_n,
                         const Vec<F>& images)
{
    const auto& k = n.field();
    const auto& pc = pr.cover;
    const std::size_t ns = pc.summand_vertex.size();
    std::vector<std::size_t> off(ns + 1, 0);
    for (std::size_t s = 0; s < ns; ++s)
        off[s + 1] = off[s] + n.dim_at(pc.summand_vertex[s]);
    ModuleMap<F> f;
    for (std::size_t w = 0; w < n.vertex_count(); ++w) {
        const auto& lay = pc.layout[w];
        Mat<F> fp = zeros(k, n.dim_at(w), lay.size());
        for (std::size_t c = 0; c < lay.size(); ++c) {
            const auto [s, x] = lay[c];
            const auto& act = acts_n[x];
            for (std::size_t r = 0; r < act.rows(); ++r) {
                auto acc = k.zero();
                for (std::size_t q = 0; q < act.cols(); ++q)
                    if (!k.is_zero(act(r, q)) && !k.is_zero(images[off[s] + q]))
                        acc = k.add(acc, k.mul(act(r, q), images[off[s] + q]));
                fp(r, c) = acc;
            }
        }
        f.blocks.push_back(multiply(k, fp, pr.section[w]));
    }
    return f;
}

/// Hom(M, N) for M presented by `pr`.
template <class F>
class HomSpace {
public:
    HomSpace(const Presentation<F>& pr, const Module<F>& n)
        : pr_(&pr), n_(&n), acts_(n.all_block_actions()), sol_(hom_solutions(pr, n, acts_))
    {
        require_same_algebra(*pr.source, n, "hom_space");
    }

    std::size_t dim() const { return sol_.cols(); }
    ModuleMap<F> basis_map(std::size_t j) const { return materialize(*pr_, *n_, acts_, column<F>(sol_, j)); }
    std::vector<ModuleMap<F>> basis() const
    {
        std::vector<ModuleMap<F>> out;
        for (std::size_t j = 0; j < dim(); ++j)
            out.push_back(basis_map(j));
        return out;
    }
    /// A map with independent uniformly random coordinates in the basis.
    ModuleMap<F> random_map(std::mt19937_64& rng) const
    {
        const auto& k = n_->field();
        Vec<F> c(sol_.cols());
        for (auto& x : c)
            x = k.random(rng);
        return materialize(*pr_, *n_, acts_, apply(k, sol_, c));
    }
    ModuleMap<F> combination(const Vec<F>& coeffs) const
    {
        return materialize(*pr_, *n_, acts_, apply(n_->field(), sol_, coeffs));
    }

private:
    const Presentation<F>* pr_;
    const Module<F>* n_;
    std::vector<Mat<F>> acts_;
    Mat<F> sol_;
};

template <class F>
std::vector<ModuleMap<F>> hom_space(const Module<F>& m, const Module<F>& n)
{
    require_same_algebra(m, n, "hom_space");
    const auto pr = present(m);
    return HomSpace<F>(pr, n).basis();
}

template <class F>
std::size_t hom_dimension(const Module<F>& m, const Module<F>& n)
{
    require_same_algebra(m, n, "hom_dimension");
    const auto pr = present(m);
    return HomSpace<F>(pr, n).dim();
}

enum class Verdict { Yes, No, Undetermined };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes:
        return "Yes";
    case Verdict::No:
        return "No";
    case Verdict::Undetermined:
        return "Undetermined";
    }
    return "Undetermined";
}

template <class F>
struct IsoResult {
    Verdict verdict = Verdict::Undetermined;
    std::optional<ModuleMap<F>> witness;
};

constexpr std::size_t kDefaultTrials = 64;

template <class F>
IsoResult<F> is_isomorphic(const Module<F>& m, const Module<F>& n, std::mt19937_64& rng,
                           std::size_t trials = kDefaultTrials)
{
    require_same_algebra(m, n, "is_isomorphic");
    if (m.dims() != n.dims() || top_multiplicities(m) != top_multiplicities(n))
        return {Verdict::No, std::nullopt};
    const auto& k = m.field();
    const auto pr = present(m);
    const HomSpace<F> hom(pr, n);
    if (m.dim() == 0)
        return {Verdict::Yes, hom.combination({})};
    if (hom.dim() == 0 || HomSpace<F>(pr, m).dim() != hom.dim())
        return {Verdict::No, std::nullopt};
    for (std::size_t t = 0; t < trials; ++t) {
        auto f = hom.random_map(rng);
        if (is_invertible(k, f))
            return {Verdict::Yes, std::move(f)};
    }
    return {Verdict::Undetermined, std::nullopt};
}

template <class F>
struct SummandResult {
    Verdict verdict = Verdict::Undetermined;
    std::optional<std::pair<ModuleMap<F>, ModuleMap<F>>> witness; // (f: X -> M, g: M -> X), g f invertible
};

/// Is X isomorphic to a direct summand of M?
template <class F>
SummandResult<F> is_direct_summand(const Module<F>& x, const Module<F>& m, std::mt19937_64& rng,
                                   std::size_t trials = kDefaultTrials)
{
    require_same_algebra(x, m, "is_direct_summand");
    const auto tx = top_multiplicities(x), tm = top_multiplicities(m);
    for (std::size_t v = 0; v < x.vertex_count(); ++v)
        if (x.dim_at(v) > m.dim_at(v) || tx[v] > tm[v])
            return {Verdict::No, std::nullopt};
    const auto& k = x.field();
    const auto px = present(x);
    const auto pm = present(m);
    const HomSpace<F> into(px, m), back(pm, x);
    if (x.dim() == 0)
        return {Verdict::Yes, std::pair(into.combination({}), back.combination({}))};
    if (into.dim() == 0 || back.dim() == 0)
        return {Verdict::No, std::nullopt};
    for (std::size_t t = 0; t < trials; ++t) {
        auto f = into.random_map(rng);
        auto g = back.random_map(rng);
        if (is_invertible(k, compose(k, g, f)))
            return {Verdict::Yes, std::pair(std::move(f), std::move(g))};
    }
    return {Verdict::Undetermined, std::nullopt};
}

template <class F>
struct StripResult {
    Module<F> module;
    std::vector<std::size_t> removed; // multiplicity of A e_v split off, per vertex
};

/// Splits off every projective direct summand. For each vertex i the pairing
/// c(g, v) = coefficient of e_i in g(v), for g in Hom(M, A e_i) and v in e_i M,
/// has rank equal to the multiplicity of A e_i in M; an invertible minor gives
/// maps P^r -> M -> P^r composing to an automorphism, and M is replaced by the
/// kernel of the second one.
template <class F>
StripResult<F> strip_projectives(const Module<F>& m)
{
    const auto& alg = m.algebra();
    const auto& k = m.field();
    StripResult<F> out{m, std::vector<std::size_t>(m.vertex_count(), 0)};
    for (std::size_t i = 0; i < m.vertex_count(); ++i) {
        if (out.module.dim_at(i) == 0)
            continue;
        const Module<F>& cur = out.module;
        const Module<F> p = regular_projective(alg, k, i);
        const std::size_t unit_row = projective_positions(*alg, i)[alg->idempotent(i)];
        const auto pr = present(cur);
        const HomSpace<F> hom(pr, p);
        if (hom.dim() == 0)
            continue;
        const auto maps = hom.basis();
        Mat<F> c = zeros(k, maps.size(), cur.dim_at(i));
        for (std::size_t r = 0; r < maps.size(); ++r)
            for (std::size_t l = 0; l < cur.dim_at(i); ++l)
                c(r, l) = maps[r].blocks[i](unit_row, l);
        const auto cols = independent_columns(k, c);
        if (cols.empty())
            continue;
        const auto rows = independent_columns(k, transpose(select_columns(k, c, cols)));
        Graded<F> ker;
        for (std::size_t w = 0; w < cur.vertex_count(); ++w) {
            std::vector<const Mat<F>*> parts;
            for (auto r : rows)
                parts.push_back(&maps[r].blocks[w]);
            ker.push_back(nullspace(k, vstack(k, parts, cur.dim_at(w))));
        }
        out.removed[i] = rows.size();
        out.module = submodule(cur, ker);
    }
    return out;
}

} // namespace singquiv
