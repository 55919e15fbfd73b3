#pragma once

// The bimodules M = kX (over A, B), kY and kZ (over B, A) on explicit labelled
// bases, with the comparison maps into the A-dual and B-dual of M.
//
// Labels are sorted by arrow index, then by path basis index. Every label lies
// in one block e_i (-) e_j; the realized bimodule orders each block by label.

#include "singquiv/bimodule.hpp"
#include "singquiv/monomial_algebra.hpp"

#include <array>
#include <map>

namespace singquiv {

struct SparseEntry {
    std::size_t label;
    long long coeff;
};

using SparseColumn = std::vector<SparseEntry>;

struct LabeledBimodule {
    std::string name;
    AlgebraPtr left;
    AlgebraPtr right;
    std::vector<std::string> labels;
    /// Structural data of each label. M: {p, alpha, 0}; Y: {alpha, q, 0};
    /// Z: {x, p, alpha} with x a basis index of B and p, q basis indices of A.
    std::vector<std::array<std::size_t, 3>> parts;
    /// (left vertex, right vertex) of each label.
    std::vector<std::pair<std::size_t, std::size_t>> block_of;
    /// left_action[x][l]: image of label l under basis element x of the left algebra.
    std::vector<std::vector<SparseColumn>> left_action;
    /// right_action[y][l]: image of label l under basis element y of the right algebra.
    std::vector<std::vector<SparseColumn>> right_action;

    std::size_t dim() const { return labels.size(); }
    std::size_t index_of(const std::string& label) const;
};

/// Both algebras of the construction and the four frames the bimodules live on.
struct Setting {
    explicit Setting(QMAlgebra a);

    QMAlgebra A;
    RszAlgebra B;
    AlgebraPtr Aop, Bop;
    FramePtr AB, BA, AA, BB;
};

/// (p, alpha) with s(p) = t(alpha): left action by concatenation, right action (p, alpha)[alpha beta] = (p alpha, beta).
LabeledBimodule build_M(const Setting& s);

struct MDecompositions {
    /// left[alpha]: labels of X_alpha = {(p, alpha)}.
    std::vector<std::vector<std::size_t>> left;
    /// D = {(p, alpha) : p alpha nonzero}, as label indices.
    std::vector<std::size_t> D;
    /// right[d]: the block {(p, alpha), (p alpha, beta) : alpha beta in F} of D[d].
    std::vector<std::vector<std::size_t>> right;
};

MDecompositions decompositions_of_M(const Setting& s, const LabeledBimodule& m);

/// (alpha|q) with t(q) = t(alpha): right action by concatenation, [beta alpha](alpha|q) = (beta|beta q).
LabeledBimodule build_Y(const Setting& s);

struct YSplit {
    std::vector<std::size_t> y_second; // Y''
    std::vector<std::size_t> y_prime;  // Y'
    std::vector<std::size_t> y_top;    // Y'_top
    std::map<std::size_t, std::size_t> mu; // source alpha of R -> multiplicity
};

YSplit split_Y(const Setting& s, const LabeledBimodule& y);

/// (e_alpha|p, alpha) and ([beta alpha]|p, alpha) for (p, alpha) in D.
LabeledBimodule build_Z(const Setting& s);

/// Labels of the component of Z attached to arrow alpha: exactly those with left vertex alpha.
std::vector<std::size_t> alpha_Z_labels(const LabeledBimodule& z, std::size_t alpha);

template <class F>
struct Realized {
    Bimodule<F> bimodule;
    std::vector<std::size_t> position; // label -> basis index of the bimodule
};

template <class F>
Realized<F> realize(const LabeledBimodule& lb, const FramePtr& frame, const F& k)
{
    if (frame->left() != lb.left || frame->right() != lb.right)
        throw InputError(InputError::Kind::Mismatch, "realize: frame does not match " + lb.name);
    const auto& L = *lb.left;
    const auto& R = *lb.right;
    const std::size_t nl = L.vertex_count(), nr = R.vertex_count();
    std::vector<std::vector<std::size_t>> members(nl * nr);
    std::vector<std::size_t> in_block(lb.dim());
    for (std::size_t l = 0; l < lb.dim(); ++l) {
        auto& mb = members[lb.block_of[l].first * nr + lb.block_of[l].second];
        in_block[l] = mb.size();
        mb.push_back(l);
    }
    std::vector<std::size_t> dims;
    for (const auto& mb : members)
        dims.push_back(mb.size());

    auto column_block = [&](const SparseColumn& col, Mat<F>& m, std::size_t c) {
        for (const auto& e : col)
            m(in_block[e.label], c) = k.add(m(in_block[e.label], c), k.from_int(e.coeff));
    };
    std::vector<std::vector<Mat<F>>> left(L.generators().size()), right(nl);
    for (std::size_t g = 0; g < L.generators().size(); ++g) {
        const std::size_t ge = L.generators()[g];
        const auto& el = L.element(ge);
        for (std::size_t j = 0; j < nr; ++j) {
            const auto& src = members[el.right_vertex * nr + j];
            Mat<F> m = zeros(k, dims[el.left_vertex * nr + j], src.size());
            for (std::size_t c = 0; c < src.size(); ++c)
                column_block(lb.left_action[ge][src[c]], m, c);
            left[g].push_back(std::move(m));
        }
    }
    for (std::size_t i = 0; i < nl; ++i)
        for (std::size_t h = 0; h < R.generators().size(); ++h) {
            const std::size_t he = R.generators()[h];
            const auto& el = R.element(he);
            const auto& src = members[i * nr + el.left_vertex];
            Mat<F> m = zeros(k, dims[i * nr + el.right_vertex], src.size());
            for (std::size_t c = 0; c < src.size(); ++c)
                column_block(lb.right_action[he][src[c]], m, c);
            right[i].push_back(std::move(m));
        }
    Realized<F> out{make_bimodule(frame, k, dims, left, right), {}};
    out.position.resize(lb.dim());
    out.bimodule.labels.resize(lb.dim());
    for (std::size_t b = 0; b < members.size(); ++b)
        for (std::size_t c = 0; c < members[b].size(); ++c) {
            const std::size_t l = members[b][c];
            out.position[l] = out.bimodule.offset(b / nr, b % nr) + c;
            out.bimodule.labels[out.position[l]] = lb.labels[l];
        }
    return out;
}

/// Label -> basis index in right_restriction, whose block j stacks e_i M e_j over i.
template <class F>
std::vector<std::size_t> right_positions(const LabeledBimodule& lb, const Realized<F>& r)
{
    const std::size_t nl = r.bimodule.left_vertices(), nr = r.bimodule.right_vertices();
    std::vector<std::size_t> base(nl * nr);
    std::size_t off = 0;
    for (std::size_t j = 0; j < nr; ++j)
        for (std::size_t i = 0; i < nl; ++i) {
            base[i * nr + j] = off;
            off += r.bimodule.dim_at(i, j);
        }
    std::vector<std::size_t> out(lb.dim());
    for (std::size_t l = 0; l < lb.dim(); ++l) {
        const auto [i, j] = lb.block_of[l];
        out[l] = base[i * nr + j] + (r.position[l] - r.bimodule.offset(i, j));
    }
    return out;
}

/// Compares the action of every basis element, derived from the generators,
/// with the explicit formulas. Returns a description of the first mismatch.
template <class F>
std::optional<std::string> formula_violation(const LabeledBimodule& lb, const Realized<F>& r)
{
    const auto& k = r.bimodule.field();
    const auto check = [&](const Module<F>& mod, const std::vector<std::vector<SparseColumn>>& table,
                           const std::vector<std::size_t>& pos, const char* side) -> std::optional<std::string> {
        const auto& alg = *mod.algebra();
        for (std::size_t x = 0; x < alg.dim(); ++x) {
            const Mat<F> act = mod.action(x);
            for (std::size_t l = 0; l < lb.dim(); ++l) {
                Vec<F> expect(mod.dim(), k.zero());
                for (const auto& e : table[x][l])
                    expect[pos[e.label]] = k.add(expect[pos[e.label]], k.from_int(e.coeff));
                for (std::size_t r2 = 0; r2 < mod.dim(); ++r2)
                    if (!k.equal(act(r2, pos[l]), expect[r2]))
                        return lb.name + ": " + side + " action of " + alg.label(x) + " on " + lb.labels[l] +
                               " differs from its formula";
            }
        }
        return std::nullopt;
    };
    const Module<F> lm = left_restriction(r.bimodule);
    if (auto v = check(lm, lb.left_action, r.position, "left"))
        return v;
    const Module<F> rm = right_restriction(r.bimodule);
    const auto rpos = right_positions(lb, r);
    return check(rm, lb.right_action, rpos, "right");
}

/// Checks that the bimodule axioms hold (both actions, and that they commute).
template <class F>
std::optional<std::string> bimodule_violation(const Bimodule<F>& b)
{
    if (auto v = module_violation(bimodule_as_onesided(b)))
        return *v;
    return std::nullopt;
}

struct DualCheck {
    bool phi_ok = false;
    bool psi_ok = false;
    std::string detail;
};

namespace detail {

/// Assembles per-label maps into a bimodule map src -> dual and checks it is an isomorphism.
template <class F>
bool check_dual_map(const LabeledBimodule& lb, const Realized<F>& src, const DualBimodule<F>& dual,
                    const std::vector<Vec<F>>& flat_images, std::string& why)
{
    const auto& k = src.bimodule.field();
    const std::size_t nr = src.bimodule.right_vertices();
    std::vector<std::vector<std::size_t>> members(src.bimodule.dims().size());
    for (std::size_t l = 0; l < lb.dim(); ++l)
        members[lb.block_of[l].first * nr + lb.block_of[l].second].push_back(l);
    ModuleMap<F> f;
    for (std::size_t b = 0; b < members.size(); ++b) {
        const auto& sc = dual.coords[b];
        std::vector<Vec<F>> cols;
        for (auto l : members[b])
            cols.push_back(flat_images[l]);
        auto c = sc.try_coords(from_columns(k, cols, sc.ambient_dim()));
        if (!c) {
            why = lb.name + ": the image of some basis element is not a module map";
            return false;
        }
        f.blocks.push_back(std::move(*c));
    }
    if (!is_invertible(k, f)) {
        why = lb.name + ": the comparison map is not bijective";
        return false;
    }
    if (!is_homomorphism(bimodule_as_onesided(src.bimodule), bimodule_as_onesided(dual.bimodule), f)) {
        why = lb.name + ": the comparison map does not respect the bimodule actions";
        return false;
    }
    return true;
}

} // namespace detail

/// Builds phi: kY -> Hom_A(M, A) and psi: kZ -> Hom_{B^op}(M, B) from their
/// defining formulas and checks that both are bijective bimodule maps.
template <class F>
DualCheck verify_dual_isos(const Setting& s, const F& k)
{
    DualCheck out;
    const auto& A = s.A;
    const auto& Aalg = *A.basis_algebra();
    const auto& Balg = *s.B.basis_algebra();
    const auto& Bop = *s.Bop;
    const LabeledBimodule lm = build_M(s), ly = build_Y(s), lz = build_Z(s);
    const auto m = realize(lm, s.AB, k);
    const auto y = realize(ly, s.BA, k);
    const auto z = realize(lz, s.BA, k);

    // phi(alpha|q): M e_alpha -> A e_{s(q)}, (p, alpha) -> p q
    {
        const auto dual = dual_bimodule(m.bimodule, DualSide::LeftDual, s.BA);
        std::vector<Vec<F>> flat(ly.dim());
        for (std::size_t l = 0; l < ly.dim(); ++l) {
            const auto [alpha, qi, unused] = ly.parts[l];
            (void)unused;
            const std::size_t sq = A.path(qi).source();
            const auto src = column_restriction(m.bimodule, alpha);
            const auto tgt = projective_blocks(Aalg, sq);
            const auto pos = projective_positions(Aalg, sq);
            ModuleMap<F> f;
            for (std::size_t i = 0; i < Aalg.vertex_count(); ++i)
                f.blocks.push_back(zeros(k, tgt[i].size(), src.dim_at(i)));
            for (std::size_t x = 0; x < lm.dim(); ++x) {
                const auto [p, a2, u2] = lm.parts[x];
                (void)u2;
                if (a2 != alpha)
                    continue;
                if (auto pq = A.multiply(p, qi)) {
                    const std::size_t i = A.path(p).target();
                    const std::size_t col = m.position[x] - m.bimodule.offset(i, alpha);
                    f.blocks[i](pos[*pq], col) = k.one();
                }
            }
            flat[l] = flatten(f);
        }
        out.phi_ok = detail::check_dual_map(ly, y, dual, flat, out.detail);
    }

    // psi(x|p, alpha): e_{t(p)} M -> e_u B, (p, alpha) -> x, (p alpha, beta) -> x [alpha beta]
    {
        const auto dual = dual_bimodule(m.bimodule, DualSide::RightDual, s.BA);
        std::vector<Vec<F>> flat(lz.dim());
        const std::size_t nb = Balg.vertex_count();
        for (std::size_t l = 0; l < lz.dim(); ++l) {
            const auto [xb, p, alpha] = lz.parts[l];
            const std::size_t u = Balg.element(xb).left_vertex;
            const std::size_t w = A.path(p).target();
            const auto src = row_restriction(m.bimodule, w);
            const auto tgt = projective_blocks(Bop, u);
            const auto pos = projective_positions(Bop, u);
            ModuleMap<F> f;
            for (std::size_t j = 0; j < nb; ++j)
                f.blocks.push_back(zeros(k, tgt[j].size(), src.dim_at(j)));
            const auto palpha = A.multiply(p, A.arrow_index(alpha));
            for (std::size_t x = 0; x < lm.dim(); ++x) {
                const auto [p2, beta, u2] = lm.parts[x];
                (void)u2;
                if (A.path(p2).target() != w)
                    continue;
                std::optional<std::size_t> image;
                if (p2 == p && beta == alpha)
                    image = xb;
                else if (palpha && p2 == *palpha) {
                    // (p alpha, beta) with alpha beta forbidden, i.e. beta traversed before alpha
                    if (A.is_forbidden(beta, alpha))
                        if (auto br = s.B.bracket(beta, alpha))
                            image = Balg.product(xb, *br);
                }
                if (!image)
                    continue;
                const std::size_t col = m.position[x] - m.bimodule.offset(w, beta);
                f.blocks[beta](pos[*image], col) = k.add(f.blocks[beta](pos[*image], col), k.one());
            }
            flat[l] = flatten(f);
        }
        std::string why;
        out.psi_ok = detail::check_dual_map(lz, z, dual, flat, why);
        if (!out.psi_ok && out.detail.empty())
            out.detail = why;
    }
    return out;
}

/// The left A-module A p (Side::Left) or the right A-module p A, on the ideal basis.
/// Right modules are over A^op.
template <class F>
Module<F> path_module(const QMAlgebra& a, const AlgebraPtr& a_op, std::size_t p, Side side, const F& k)
{
    const AlgebraPtr& alg = side == Side::Left ? a.basis_algebra() : a_op;
    const auto elems = ideal_basis(a, p, side);
    const std::size_t n = alg->vertex_count();
    // block of an element of A p is its target; of p A (over A^op) its source
    auto vertex_of = [&](std::size_t x) { return side == Side::Left ? a.path(x).target() : a.path(x).source(); };
    std::vector<std::vector<std::size_t>> blocks(n);
    std::vector<std::size_t> pos(a.dim(), 0);
    for (auto x : elems) {
        pos[x] = blocks[vertex_of(x)].size();
        blocks[vertex_of(x)].push_back(x);
    }
    std::vector<std::size_t> dims;
    for (const auto& b : blocks)
        dims.push_back(b.size());
    std::vector<Mat<F>> gens;
    for (auto g : alg->generators()) {
        const auto& el = alg->element(g);
        Mat<F> mat = zeros(k, dims[el.left_vertex], dims[el.right_vertex]);
        for (std::size_t c = 0; c < blocks[el.right_vertex].size(); ++c) {
            const std::size_t x = blocks[el.right_vertex][c];
            const auto r = side == Side::Left ? a.multiply(g, x) : a.multiply(x, g);
            if (r)
                mat(pos[*r], c) = k.one();
        }
        gens.push_back(std::move(mat));
    }
    Module<F> out(alg, k, dims, std::move(gens));
    out.labels.resize(out.dim());
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < blocks[v].size(); ++c)
            out.labels[out.offset(v) + c] = a.path_label(blocks[v][c]);
    return out;
}

} // namespace singquiv
