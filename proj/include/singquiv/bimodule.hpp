#pragma once

// Bimodules over a pair of algebras (L, R), stored on the grid of blocks
// e_i M e_j (i a vertex of L, j a vertex of R; block index i * |R_0| + j).
// The generator matrices are kept in the order of the generators of the
// enveloping algebra L (x) R^op, so a bimodule is literally a left module over
// that algebra: first (g, e_j) for each generator g of L and vertex j of R,
// then (e_i, h) for each vertex i of L and generator h of R. The matrix of
// (e_i, h) is the right action m -> m h from e_i M e_{left(h)} to e_i M e_{right(h)}.

#include "singquiv/module.hpp"

#include <tuple>

namespace singquiv {

template <class F>
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(FramePtr frame, F field, std::vector<std::size_t> dims, std::vector<Mat<F>> gens)
        : frame_(std::move(frame)), k_(std::move(field)), dims_(std::move(dims)), gens_(std::move(gens))
    {
        const auto& l = *frame_->left();
        const auto& r = *frame_->right();
        if (dims_.size() != l.vertex_count() * r.vertex_count())
            throw std::invalid_argument("Bimodule: one block per vertex pair expected");
        if (gens_.size() != left_gen_count() * r.vertex_count() + l.vertex_count() * right_gen_count())
            throw std::invalid_argument("Bimodule: generator count mismatch");
        for (std::size_t g = 0; g < left_gen_count(); ++g)
            for (std::size_t j = 0; j < r.vertex_count(); ++j) {
                const auto& el = l.element(l.generators()[g]);
                const auto& m = left(g, j);
                if (m.rows() != dim_at(el.left_vertex, j) || m.cols() != dim_at(el.right_vertex, j))
                    throw std::invalid_argument("Bimodule: left action of " + el.label + " has the wrong shape");
            }
        for (std::size_t i = 0; i < l.vertex_count(); ++i)
            for (std::size_t h = 0; h < right_gen_count(); ++h) {
                const auto& el = r.element(r.generators()[h]);
                const auto& m = right(i, h);
                if (m.rows() != dim_at(i, el.right_vertex) || m.cols() != dim_at(i, el.left_vertex))
                    throw std::invalid_argument("Bimodule: right action of " + el.label + " has the wrong shape");
            }
        std::size_t off = 0;
        for (auto d : dims_) {
            offsets_.push_back(off);
            off += d;
        }
        total_ = off;
    }

    const FramePtr& frame() const { return frame_; }
    const F& field() const { return k_; }
    std::size_t left_vertices() const { return frame_->left()->vertex_count(); }
    std::size_t right_vertices() const { return frame_->right()->vertex_count(); }
    std::size_t left_gen_count() const { return frame_->left()->generators().size(); }
    std::size_t right_gen_count() const { return frame_->right()->generators().size(); }
    std::size_t block(std::size_t i, std::size_t j) const { return i * right_vertices() + j; }
    std::size_t dim() const { return total_; }
    std::size_t dim_at(std::size_t i, std::size_t j) const { return dims_.at(block(i, j)); }
    std::size_t offset(std::size_t i, std::size_t j) const { return offsets_.at(block(i, j)); }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<Mat<F>>& gens() const { return gens_; }

    /// Left action of generator g of L on e_{s(g)} M e_j.
    const Mat<F>& left(std::size_t g, std::size_t j) const { return gens_.at(g * right_vertices() + j); }
    /// Right action of generator h of R on e_i M e_{left(h)}.
    const Mat<F>& right(std::size_t i, std::size_t h) const
    {
        return gens_.at(left_gen_count() * right_vertices() + i * right_gen_count() + h);
    }

    std::vector<std::string> labels;

private:
    FramePtr frame_;
    F k_{};
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
    std::vector<Mat<F>> gens_;
};

/// Builds a bimodule from separately indexed left and right action matrices.
template <class F>
Bimodule<F> make_bimodule(const FramePtr& frame, const F& k, std::vector<std::size_t> dims,
                          const std::vector<std::vector<Mat<F>>>& left_by_gen,
                          const std::vector<std::vector<Mat<F>>>& right_by_vertex)
{
    std::vector<Mat<F>> gens;
    for (const auto& per_j : left_by_gen)
        for (const auto& m : per_j)
            gens.push_back(m);
    for (const auto& per_h : right_by_vertex)
        for (const auto& m : per_h)
            gens.push_back(m);
    return Bimodule<F>(frame, k, std::move(dims), std::move(gens));
}

/// The bimodule as a left module over L (x) R^op, same basis.
template <class F>
Module<F> bimodule_as_onesided(const Bimodule<F>& b)
{
    Module<F> m(b.frame()->enveloping(), b.field(), b.dims(), b.gens());
    m.labels = b.labels;
    return m;
}

template <class F>
Bimodule<F> onesided_as_bimodule(const FramePtr& frame, const Module<F>& m)
{
    if (m.algebra() != frame->enveloping())
        throw InputError(InputError::Kind::Mismatch, "module is not over the enveloping algebra of the frame");
    Bimodule<F> b(frame, m.field(), m.dims(), m.gens());
    b.labels = m.labels;
    return b;
}

/// A left module V over R viewed as an R-k-bimodule.
template <class F>
Bimodule<F> module_as_bimodule(const FramePtr& frame_with_k, const Module<F>& v)
{
    if (frame_with_k->left() != v.algebra() || frame_with_k->right()->vertex_count() != 1 ||
        !frame_with_k->right()->generators().empty())
        throw InputError(InputError::Kind::Mismatch, "module_as_bimodule: frame must be (algebra, k)");
    Bimodule<F> b(frame_with_k, v.field(), v.dims(), v.gens());
    b.labels = v.labels;
    return b;
}

/// Restriction to the left algebra; the basis is unchanged.
template <class F>
Module<F> left_restriction(const Bimodule<F>& b)
{
    const auto& l = *b.frame()->left();
    const auto& k = b.field();
    const std::size_t nl = b.left_vertices(), nr = b.right_vertices();
    std::vector<std::size_t> dims(nl, 0);
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            dims[i] += b.dim_at(i, j);
    std::vector<Mat<F>> gens;
    for (std::size_t g = 0; g < b.left_gen_count(); ++g) {
        const auto& el = l.element(l.generators()[g]);
        Mat<F> m = zeros(k, dims[el.left_vertex], dims[el.right_vertex]);
        std::size_t ro = 0, co = 0;
        for (std::size_t j = 0; j < nr; ++j) {
            const auto& blk = b.left(g, j);
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    m(ro + r, co + c) = blk(r, c);
            ro += blk.rows();
            co += blk.cols();
        }
        gens.push_back(std::move(m));
    }
    Module<F> out(b.frame()->left(), k, dims, std::move(gens));
    out.labels = b.labels;
    return out;
}

/// Restriction to the right algebra, as a left module over R^op. Block j
/// stacks e_i M e_j for i in order.
template <class F>
Module<F> right_restriction(const Bimodule<F>& b)
{
    const auto& r = *b.frame()->right();
    const auto& k = b.field();
    const std::size_t nl = b.left_vertices(), nr = b.right_vertices();
    std::vector<std::size_t> dims(nr, 0);
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t j = 0; j < nr; ++j)
            dims[j] += b.dim_at(i, j);
    std::vector<Mat<F>> gens;
    for (std::size_t h = 0; h < b.right_gen_count(); ++h) {
        const auto& el = r.element(r.generators()[h]);
        Mat<F> m = zeros(k, dims[el.right_vertex], dims[el.left_vertex]);
        std::size_t ro = 0, co = 0;
        for (std::size_t i = 0; i < nl; ++i) {
            const auto& blk = b.right(i, h);
            for (std::size_t rr = 0; rr < blk.rows(); ++rr)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    m(ro + rr, co + c) = blk(rr, c);
            ro += blk.rows();
            co += blk.cols();
        }
        gens.push_back(std::move(m));
    }
    Module<F> out(b.frame()->right_op(), k, dims, std::move(gens));
    if (b.labels.size() == b.dim())
        for (std::size_t j = 0; j < nr; ++j)
            for (std::size_t i = 0; i < nl; ++i)
                for (std::size_t c = 0; c < b.dim_at(i, j); ++c)
                    out.labels.push_back(b.labels[b.offset(i, j) + c]);
    return out;
}

/// The left L-module M e_j.
template <class F>
Module<F> column_restriction(const Bimodule<F>& b, std::size_t j)
{
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < b.left_vertices(); ++i)
        dims.push_back(b.dim_at(i, j));
    std::vector<Mat<F>> gens;
    for (std::size_t g = 0; g < b.left_gen_count(); ++g)
        gens.push_back(b.left(g, j));
    return Module<F>(b.frame()->left(), b.field(), dims, std::move(gens));
}

/// The left R^op-module e_i M.
template <class F>
Module<F> row_restriction(const Bimodule<F>& b, std::size_t i)
{
    std::vector<std::size_t> dims;
    for (std::size_t j = 0; j < b.right_vertices(); ++j)
        dims.push_back(b.dim_at(i, j));
    std::vector<Mat<F>> gens;
    for (std::size_t h = 0; h < b.right_gen_count(); ++h)
        gens.push_back(b.right(i, h));
    return Module<F>(b.frame()->right_op(), b.field(), dims, std::move(gens));
}

/// The regular bimodule A over the frame (A, A).
template <class F>
Bimodule<F> regular_bimodule(const FramePtr& frame, const F& k)
{
    const auto& a = *frame->left();
    if (frame->left() != frame->right())
        throw InputError(InputError::Kind::Mismatch, "regular_bimodule: frame must be (A, A)");
    const std::size_t nv = a.vertex_count();
    std::vector<std::vector<std::size_t>> blocks(nv * nv);
    std::vector<std::size_t> pos(a.dim());
    for (std::size_t x = 0; x < a.dim(); ++x) {
        auto& b = blocks[a.element(x).left_vertex * nv + a.element(x).right_vertex];
        pos[x] = b.size();
        b.push_back(x);
    }
    std::vector<std::size_t> dims;
    for (const auto& b : blocks)
        dims.push_back(b.size());
    std::vector<std::vector<Mat<F>>> left(a.generators().size()), right(nv);
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        const std::size_t ge = a.generators()[g];
        const auto& el = a.element(ge);
        for (std::size_t j = 0; j < nv; ++j) {
            Mat<F> m = zeros(k, dims[el.left_vertex * nv + j], dims[el.right_vertex * nv + j]);
            for (auto x : blocks[el.right_vertex * nv + j])
                if (auto y = a.product(ge, x))
                    m(pos[*y], pos[x]) = k.one();
            left[g].push_back(std::move(m));
        }
    }
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t h = 0; h < a.generators().size(); ++h) {
            const std::size_t he = a.generators()[h];
            const auto& el = a.element(he);
            Mat<F> m = zeros(k, dims[i * nv + el.right_vertex], dims[i * nv + el.left_vertex]);
            for (auto x : blocks[i * nv + el.left_vertex])
                if (auto y = a.product(x, he))
                    m(pos[*y], pos[x]) = k.one();
            right[i].push_back(std::move(m));
        }
    auto out = make_bimodule(frame, k, dims, left, right);
    for (const auto& b : blocks)
        for (auto x : b)
            out.labels.push_back(a.label(x));
    return out;
}

/// M (x)_R N for M over (L, R) and N over (R, S): block (i, l) is the quotient
/// of (+)_j e_i M e_j (x) e_j N e_l by (m h) (x) n - m (x) (h n) for the
/// generators h of R; idempotent relations are the block decomposition itself.
template <class F>
Bimodule<F> tensor_over(const Bimodule<F>& m, const Bimodule<F>& n, const FramePtr& result_frame)
{
    if (m.frame()->right() != n.frame()->left())
        throw InputError(InputError::Kind::Mismatch, "tensor_over: middle algebras differ");
    if (result_frame->left() != m.frame()->left() || result_frame->right() != n.frame()->right())
        throw InputError(InputError::Kind::Mismatch, "tensor_over: result frame does not match");
    const auto& k = m.field();
    const auto& mid = *m.frame()->right();
    const auto& lal = *m.frame()->left();
    const auto& ral = *n.frame()->right();
    const std::size_t nl = m.left_vertices(), nm = mid.vertex_count(), nr = n.right_vertices();

    // ambient layout of block (i, l): for each j, dim(e_i M e_j) * dim(e_j N e_l) entries, index (j, a, b)
    std::vector<std::vector<std::size_t>> amb_off(nl * nr, std::vector<std::size_t>(nm + 1, 0));
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t l = 0; l < nr; ++l) {
            auto& off = amb_off[i * nr + l];
            for (std::size_t j = 0; j < nm; ++j)
                off[j + 1] = off[j] + m.dim_at(i, j) * n.dim_at(j, l);
        }
    auto amb_index = [&](std::size_t i, std::size_t l, std::size_t j, std::size_t a, std::size_t b) {
        return amb_off[i * nr + l][j] + a * n.dim_at(j, l) + b;
    };

    std::vector<QuotientMap<F>> quot;
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t l = 0; l < nr; ++l) {
            const std::size_t amb = amb_off[i * nr + l][nm];
            std::size_t nrel = 0;
            for (std::size_t h = 0; h < mid.generators().size(); ++h) {
                const auto& el = mid.element(mid.generators()[h]);
                nrel += m.dim_at(i, el.left_vertex) * n.dim_at(el.right_vertex, l);
            }
            Mat<F> rel = zeros(k, amb, nrel);
            std::size_t col = 0;
            for (std::size_t h = 0; h < mid.generators().size(); ++h) {
                const auto& el = mid.element(mid.generators()[h]);
                const std::size_t ja = el.left_vertex, jb = el.right_vertex;
                const auto& rm = m.right(i, h);  // M(i, ja) -> M(i, jb)
                const auto& ln = n.left(h, l);   // N(jb, l) -> N(ja, l)
                for (std::size_t a = 0; a < m.dim_at(i, ja); ++a)
                    for (std::size_t b = 0; b < n.dim_at(jb, l); ++b, ++col) {
                        for (std::size_t a2 = 0; a2 < rm.rows(); ++a2)
                            if (!k.is_zero(rm(a2, a)))
                                rel(amb_index(i, l, jb, a2, b), col) =
                                    k.add(rel(amb_index(i, l, jb, a2, b), col), rm(a2, a));
                        for (std::size_t b2 = 0; b2 < ln.rows(); ++b2)
                            if (!k.is_zero(ln(b2, b)))
                                rel(amb_index(i, l, ja, a, b2), col) =
                                    k.sub(rel(amb_index(i, l, ja, a, b2), col), ln(b2, b));
                    }
            }
            quot.emplace_back(k, amb, rel);
            dims.push_back(quot.back().dim());
        }

    // decode ambient index -> (j, a, b)
    auto decode = [&](std::size_t i, std::size_t l, std::size_t idx) {
        const auto& off = amb_off[i * nr + l];
        std::size_t j = 0;
        while (off[j + 1] <= idx)
            ++j;
        const std::size_t rem = idx - off[j];
        const std::size_t w = n.dim_at(j, l);
        return std::tuple<std::size_t, std::size_t, std::size_t>{j, rem / w, rem % w};
    };

    std::vector<std::vector<Mat<F>>> left(lal.generators().size()), right(nl);
    for (std::size_t g = 0; g < lal.generators().size(); ++g) {
        const auto& el = lal.element(lal.generators()[g]);
        const std::size_t src = el.right_vertex, dst = el.left_vertex;
        for (std::size_t l = 0; l < nr; ++l) {
            const auto& qs = quot[src * nr + l];
            const auto& qd = quot[dst * nr + l];
            Mat<F> out = zeros(k, qd.dim(), qs.dim());
            for (std::size_t c = 0; c < qs.dim(); ++c) {
                const auto [j, a, b] = decode(src, l, qs.kept()[c]);
                const auto& lm = m.left(g, j);
                for (std::size_t a2 = 0; a2 < lm.rows(); ++a2) {
                    const auto coef = lm(a2, a);
                    if (k.is_zero(coef))
                        continue;
                    const std::size_t t = amb_index(dst, l, j, a2, b);
                    for (std::size_t r = 0; r < qd.dim(); ++r)
                        if (!k.is_zero(qd.projection()(r, t)))
                            out(r, c) = k.add(out(r, c), k.mul(coef, qd.projection()(r, t)));
                }
            }
            left[g].push_back(std::move(out));
        }
    }
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t d = 0; d < ral.generators().size(); ++d) {
            const auto& el = ral.element(ral.generators()[d]);
            const std::size_t src = el.left_vertex, dst = el.right_vertex;
            const auto& qs = quot[i * nr + src];
            const auto& qd = quot[i * nr + dst];
            Mat<F> out = zeros(k, qd.dim(), qs.dim());
            for (std::size_t c = 0; c < qs.dim(); ++c) {
                const auto [j, a, b] = decode(i, src, qs.kept()[c]);
                const auto& rn = n.right(j, d);
                for (std::size_t b2 = 0; b2 < rn.rows(); ++b2) {
                    const auto coef = rn(b2, b);
                    if (k.is_zero(coef))
                        continue;
                    const std::size_t t = amb_index(i, dst, j, a, b2);
                    for (std::size_t r = 0; r < qd.dim(); ++r)
                        if (!k.is_zero(qd.projection()(r, t)))
                            out(r, c) = k.add(out(r, c), k.mul(coef, qd.projection()(r, t)));
                }
            }
            right[i].push_back(std::move(out));
        }
    return make_bimodule(result_frame, k, dims, left, right);
}

/// M (x)_R V for a left R-module V, as a left L-module.
template <class F>
Module<F> tensor_over(const Bimodule<F>& m, const Module<F>& v)
{
    if (m.frame()->right() != v.algebra())
        throw InputError(InputError::Kind::Mismatch, "tensor_over: module is over the wrong algebra");
    const auto kalg = ground_field_algebra();
    const auto vframe = BimoduleFrame::make(v.algebra(), kalg, kalg);
    const auto rframe = BimoduleFrame::make(m.frame()->left(), kalg, kalg);
    return left_restriction(tensor_over(m, module_as_bimodule(vframe, v), rframe));
}

/// Flattened coordinates of a map: blocks concatenated, each row-major.
template <class F>
Vec<F> flatten(const ModuleMap<F>& f)
{
    Vec<F> out;
    for (const auto& b : f.blocks)
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out.push_back(b(r, c));
    return out;
}

enum class DualSide { LeftDual, RightDual };

/// A dual bimodule together with the bases it was built from: blocks[u * nw + w]
/// holds the flattened basis maps of that block and their coordinate system.
template <class F>
struct DualBimodule {
    Bimodule<F> bimodule;
    std::vector<std::vector<ModuleMap<F>>> basis;
    std::vector<SpanCoordinates<F>> coords;
};

namespace detail {

/// x -> x g on A e_c -> A e_d (g in e_c A e_d), blockwise over left vertices.
template <class F>
ModuleMap<F> right_multiplication(const BasisAlgebra& a, const F& k, std::size_t g)
{
    const auto& el = a.element(g);
    const auto src = projective_blocks(a, el.left_vertex);
    const auto dst_pos = projective_positions(a, el.right_vertex);
    const auto dst = projective_blocks(a, el.right_vertex);
    ModuleMap<F> f;
    for (std::size_t i = 0; i < a.vertex_count(); ++i) {
        Mat<F> m = zeros(k, dst[i].size(), src[i].size());
        for (std::size_t c = 0; c < src[i].size(); ++c)
            if (auto y = a.product(src[i][c], g))
                m(dst_pos[*y], c) = k.one();
        f.blocks.push_back(std::move(m));
    }
    return f;
}

template <class F>
Mat<F> columns_of(const F& k, const std::vector<ModuleMap<F>>& maps, std::size_t len)
{
    std::vector<Vec<F>> cols;
    for (const auto& f : maps)
        cols.push_back(flatten(f));
    return from_columns(k, cols, len);
}

template <class F>
std::size_t flat_length(const Module<F>& src, const Module<F>& dst)
{
    std::size_t n = 0;
    for (std::size_t v = 0; v < src.vertex_count(); ++v)
        n += src.dim_at(v) * dst.dim_at(v);
    return n;
}

} // namespace detail

/// LeftDual: Hom_L(M, L) with (b f)(m) = f(m b) and (f a)(m) = f(m) a.
/// RightDual: Hom_{R^op}(M, R) with (b f)(m) = b f(m) and (f a)(m) = f(a m).
/// Either way the result is a bimodule over (R, L), built on `result_frame`.
template <class F>
DualBimodule<F> dual_bimodule(const Bimodule<F>& m, DualSide side, const FramePtr& result_frame)
{
    const auto& lptr = m.frame()->left();
    const auto& rptr = m.frame()->right();
    if (result_frame->left() != rptr || result_frame->right() != lptr)
        throw InputError(InputError::Kind::Mismatch, "dual_bimodule: result frame must be (right, left)");
    const auto& k = m.field();
    const auto& L = *lptr;
    const auto& R = *rptr;
    const std::size_t nu = R.vertex_count(), nw = L.vertex_count();
    DualBimodule<F> out;
    std::vector<Module<F>> sources, targets;
    std::vector<std::size_t> dims(nu * nw, 0);
    out.basis.resize(nu * nw);

    if (side == DualSide::LeftDual) {
        for (std::size_t u = 0; u < nu; ++u)
            sources.push_back(column_restriction(m, u));
        for (std::size_t w = 0; w < nw; ++w)
            targets.push_back(regular_projective(lptr, k, w));
    } else {
        for (std::size_t w = 0; w < nw; ++w)
            sources.push_back(row_restriction(m, w));
        for (std::size_t u = 0; u < nu; ++u)
            targets.push_back(regular_projective(m.frame()->right_op(), k, u));
    }
    auto src_of = [&](std::size_t u, std::size_t w) -> const Module<F>& {
        return side == DualSide::LeftDual ? sources[u] : sources[w];
    };
    auto tgt_of = [&](std::size_t u, std::size_t w) -> const Module<F>& {
        return side == DualSide::LeftDual ? targets[w] : targets[u];
    };
    std::vector<Presentation<F>> pres;
    for (const auto& s : sources)
        pres.push_back(present(s));
    auto pres_of = [&](std::size_t u, std::size_t w) -> const Presentation<F>& {
        return side == DualSide::LeftDual ? pres[u] : pres[w];
    };

    for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t w = 0; w < nw; ++w) {
            const std::size_t b = u * nw + w;
            out.basis[b] = HomSpace<F>(pres_of(u, w), tgt_of(u, w)).basis();
            dims[b] = out.basis[b].size();
            const std::size_t len = detail::flat_length(src_of(u, w), tgt_of(u, w));
            out.coords.emplace_back(k, detail::columns_of(k, out.basis[b], len));
        }

    auto coords_of = [&](std::size_t u, std::size_t w, const std::vector<ModuleMap<F>>& maps) {
        const std::size_t len = detail::flat_length(src_of(u, w), tgt_of(u, w));
        auto c = out.coords[u * nw + w].try_coords(detail::columns_of(k, maps, len));
        if (!c)
            throw std::logic_error("dual_bimodule: induced action leaves the Hom space");
        return std::move(*c);
    };

    // left action of R on the dual: generator h in e_a R e_b maps block (b, w) to (a, w)
    std::vector<std::vector<Mat<F>>> left(R.generators().size());
    for (std::size_t h = 0; h < R.generators().size(); ++h) {
        const std::size_t he = R.generators()[h];
        const auto& el = R.element(he);
        const std::size_t a = el.left_vertex, bv = el.right_vertex;
        for (std::size_t w = 0; w < nw; ++w) {
            std::vector<ModuleMap<F>> images;
            if (side == DualSide::LeftDual) {
                // f -> f o (right action of h) : M e_a -> M e_b -> L e_w
                for (const auto& f : out.basis[bv * nw + w]) {
                    ModuleMap<F> g;
                    for (std::size_t i = 0; i < nw; ++i)
                        g.blocks.push_back(multiply(k, f.blocks[i], m.right(i, h)));
                    images.push_back(std::move(g));
                }
            } else {
                // f -> (left multiplication by h) o f : e_w M -> e_b R -> e_a R
                const auto& rop = *m.frame()->right_op();
                const auto mult = detail::right_multiplication(rop, k, he);
                for (const auto& f : out.basis[bv * nw + w])
                    images.push_back(compose(k, mult, f));
            }
            left[h].push_back(coords_of(a, w, images));
        }
    }
    // right action of L on the dual: generator g in e_c L e_d maps block (u, c) to (u, d)
    std::vector<std::vector<Mat<F>>> right(nu);
    for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t g = 0; g < L.generators().size(); ++g) {
            const std::size_t ge = L.generators()[g];
            const auto& el = L.element(ge);
            const std::size_t c = el.left_vertex, d = el.right_vertex;
            std::vector<ModuleMap<F>> images;
            if (side == DualSide::LeftDual) {
                // f -> (right multiplication by g) o f : M e_u -> L e_c -> L e_d
                const auto mult = detail::right_multiplication(L, k, ge);
                for (const auto& f : out.basis[u * nw + c])
                    images.push_back(compose(k, mult, f));
            } else {
                // f -> f o (left action of g) : e_d M -> e_c M -> e_u R
                for (const auto& f : out.basis[u * nw + c]) {
                    ModuleMap<F> h2;
                    for (std::size_t j = 0; j < nu; ++j)
                        h2.blocks.push_back(multiply(k, f.blocks[j], m.left(g, j)));
                    images.push_back(std::move(h2));
                }
            }
            right[u].push_back(coords_of(u, d, images));
        }
    out.bimodule = make_bimodule(result_frame, k, dims, left, right);
    return out;
}

} // namespace singquiv
