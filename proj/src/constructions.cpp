#include "singquiv/constructions.hpp"

#include <algorithm>

namespace singquiv {

std::size_t LabeledBimodule::index_of(const std::string& label) const
{
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw InputError(InputError::Kind::UnknownIdentifier, name + " has no element " + label);
    return static_cast<std::size_t>(it - labels.begin());
}

Setting::Setting(QMAlgebra a)
    : A(std::move(a)), B(relation_quiver(A)),
      Aop(std::make_shared<const BasisAlgebra>(BasisAlgebra::opposite(*A.basis_algebra()))),
      Bop(std::make_shared<const BasisAlgebra>(BasisAlgebra::opposite(*B.basis_algebra()))),
      AB(BimoduleFrame::make(A.basis_algebra(), B.basis_algebra(), Bop)),
      BA(BimoduleFrame::make(B.basis_algebra(), A.basis_algebra(), Aop)),
      AA(BimoduleFrame::make(A.basis_algebra(), A.basis_algebra(), Aop)),
      BB(BimoduleFrame::make(B.basis_algebra(), B.basis_algebra(), Bop))
{
}

namespace {

using Key = std::array<std::size_t, 3>;

/// Finishes a labelled bimodule: sizes the action tables and indexes the parts.
struct Builder {
    LabeledBimodule lb;
    std::map<Key, std::size_t> index;

    Builder(std::string name, AlgebraPtr left, AlgebraPtr right)
    {
        lb.name = std::move(name);
        lb.left = std::move(left);
        lb.right = std::move(right);
    }

    void add(const Key& parts, std::string label, std::size_t li, std::size_t ri)
    {
        index[parts] = lb.labels.size();
        lb.parts.push_back(parts);
        lb.labels.push_back(std::move(label));
        lb.block_of.emplace_back(li, ri);
    }

    std::optional<std::size_t> find(const Key& parts) const
    {
        const auto it = index.find(parts);
        if (it == index.end())
            return std::nullopt;
        return it->second;
    }

    void size_tables()
    {
        lb.left_action.assign(lb.left->dim(), std::vector<SparseColumn>(lb.dim()));
        lb.right_action.assign(lb.right->dim(), std::vector<SparseColumn>(lb.dim()));
    }

    /// Idempotents act by the block decomposition.
    void idempotent_actions()
    {
        for (std::size_t l = 0; l < lb.dim(); ++l) {
            lb.left_action[lb.left->idempotent(lb.block_of[l].first)][l].push_back({l, 1});
            lb.right_action[lb.right->idempotent(lb.block_of[l].second)][l].push_back({l, 1});
        }
    }
};

/// Nonzero paths p with s(p) = v, in basis order.
std::vector<std::size_t> paths_from(const QMAlgebra& a, std::size_t v)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.path(i).source() == v)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> paths_to(const QMAlgebra& a, std::size_t v)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.path(i).target() == v)
            out.push_back(i);
    return out;
}

} // namespace

LabeledBimodule build_M(const Setting& s)
{
    const auto& A = s.A;
    const auto& q = A.quiver();
    const auto& B = s.B;
    Builder b("M", A.basis_algebra(), B.basis_algebra());
    for (std::size_t alpha = 0; alpha < q.arrow_count(); ++alpha)
        for (auto p : paths_from(A, q.arrow(alpha).target))
            b.add({p, alpha, 0}, "(" + A.path_label(p) + "," + q.arrow(alpha).id + ")", A.path(p).target(), alpha);
    b.size_tables();
    b.idempotent_actions();
    const auto& Aalg = *A.basis_algebra();
    for (std::size_t l = 0; l < b.lb.dim(); ++l) {
        const auto [p, alpha, unused] = b.lb.parts[l];
        (void)unused;
        for (std::size_t x = 0; x < A.dim(); ++x)
            if (!Aalg.is_idempotent(x))
                if (auto xp = A.multiply(x, p))
                    b.lb.left_action[x][l].push_back({*b.find({*xp, alpha, 0}), 1});
        // (p, alpha) [alpha beta] = (p alpha, beta)
        const auto palpha = A.multiply(p, A.arrow_index(alpha));
        if (!palpha)
            continue;
        for (const auto& fp : A.forbidden())
            if (fp.second == alpha) {
                const std::size_t br = *B.bracket(fp.first, fp.second);
                b.lb.right_action[br][l].push_back({*b.find({*palpha, fp.first, 0}), 1});
            }
    }
    return b.lb;
}

MDecompositions decompositions_of_M(const Setting& s, const LabeledBimodule& m)
{
    const auto& A = s.A;
    MDecompositions out;
    out.left.resize(A.quiver().arrow_count());
    for (std::size_t l = 0; l < m.dim(); ++l) {
        const auto [p, alpha, unused] = m.parts[l];
        (void)unused;
        out.left[alpha].push_back(l);
        const auto palpha = A.multiply(p, A.arrow_index(alpha));
        if (!palpha)
            continue;
        out.D.push_back(l);
        std::vector<std::size_t> block{l};
        for (std::size_t x = 0; x < m.dim(); ++x)
            if (m.parts[x][0] == *palpha && A.is_forbidden(m.parts[x][1], alpha))
                block.push_back(x);
        out.right.push_back(std::move(block));
    }
    return out;
}

LabeledBimodule build_Y(const Setting& s)
{
    const auto& A = s.A;
    const auto& q = A.quiver();
    const auto& B = s.B;
    Builder b("Y", B.basis_algebra(), A.basis_algebra());
    for (std::size_t alpha = 0; alpha < q.arrow_count(); ++alpha)
        for (auto p : paths_to(A, q.arrow(alpha).target))
            b.add({alpha, p, 0}, "(" + q.arrow(alpha).id + "|" + A.path_label(p) + ")", alpha, A.path(p).source());
    b.size_tables();
    b.idempotent_actions();
    const auto& Aalg = *A.basis_algebra();
    for (std::size_t l = 0; l < b.lb.dim(); ++l) {
        const auto [alpha, qi, unused] = b.lb.parts[l];
        (void)unused;
        for (std::size_t x = 0; x < A.dim(); ++x)
            if (!Aalg.is_idempotent(x))
                if (auto qx = A.multiply(qi, x))
                    b.lb.right_action[x][l].push_back({*b.find({alpha, *qx, 0}), 1});
        // [beta alpha] (alpha|q) = (beta|beta q) when beta q is nonzero
        for (const auto& fp : A.forbidden())
            if (fp.first == alpha)
                if (auto bq = A.multiply(A.arrow_index(fp.second), qi)) {
                    const std::size_t br = *B.bracket(fp.first, fp.second);
                    b.lb.left_action[br][l].push_back({*b.find({fp.second, *bq, 0}), 1});
                }
    }
    return b.lb;
}

YSplit split_Y(const Setting& s, const LabeledBimodule& y)
{
    const auto& A = s.A;
    const auto& r = s.B.relation_quiver();
    YSplit out;
    for (std::size_t l = 0; l < y.dim(); ++l) {
        const auto [alpha, qi, unused] = y.parts[l];
        (void)unused;
        const Path& q = A.path(qi);
        const bool ends_with_alpha = !q.is_trivial() && q.last_arrow() == alpha;
        if (ends_with_alpha && r.in_arrows(alpha).empty()) {
            out.y_second.push_back(l);
            ++out.mu[alpha];
            continue;
        }
        out.y_prime.push_back(l);
        if (!ends_with_alpha)
            out.y_top.push_back(l);
    }
    return out;
}

LabeledBimodule build_Z(const Setting& s)
{
    const auto& A = s.A;
    const auto& q = A.quiver();
    const auto& B = s.B;
    const auto& Balg = *B.basis_algebra();
    Builder b("Z", B.basis_algebra(), A.basis_algebra());
    for (std::size_t alpha = 0; alpha < q.arrow_count(); ++alpha)
        for (auto p : paths_from(A, q.arrow(alpha).target)) {
            if (!A.multiply(p, A.arrow_index(alpha)))
                continue;
            const auto tail = "|" + A.path_label(p) + "," + q.arrow(alpha).id + ")";
            const std::size_t e = B.idempotent_index(alpha);
            b.add({e, p, alpha}, "(" + Balg.label(e) + tail, alpha, A.path(p).target());
            for (const auto& fp : A.forbidden())
                if (fp.first == alpha) {
                    const std::size_t br = *B.bracket(fp.first, fp.second);
                    b.add({br, p, alpha}, "(" + Balg.label(br) + tail, fp.second, A.path(p).target());
                }
        }
    b.size_tables();
    b.idempotent_actions();
    for (std::size_t l = 0; l < b.lb.dim(); ++l) {
        const auto [x, p, alpha] = b.lb.parts[l];
        // left multiplication on the leftmost entry
        for (std::size_t y = 0; y < Balg.dim(); ++y)
            if (!Balg.is_idempotent(y))
                if (auto yx = Balg.product(y, x))
                    b.lb.left_action[y][l].push_back({*b.find({*yx, p, alpha}), 1});
        const Path& pp = A.path(p);
        for (std::size_t qi = 0; qi < A.dim(); ++qi) {
            const Path& qq = A.path(qi);
            if (qq.is_trivial() || qq.target() != pp.target())
                continue;
            // p = q gamma: q is a final segment of p (in traversal order)
            if (qq.length() <= pp.length() &&
                std::equal(qq.arrows().begin(), qq.arrows().end(), pp.arrows().end() - qq.length())) {
                std::vector<std::size_t> g(pp.arrows().begin(), pp.arrows().end() - qq.length());
                const Path gamma = g.empty() ? Path::trivial(pp.source()) : Path::from_arrows(A.quiver(), g);
                const std::size_t gi = *A.index_of(gamma);
                b.lb.right_action[qi][l].push_back({*b.find({x, gi, alpha}), 1});
                continue;
            }
            // q = p alpha, only for the idempotent labels
            if (!Balg.is_idempotent(x))
                continue;
            if (qq.length() == pp.length() + 1 && qq.arrows().front() == alpha &&
                std::equal(pp.arrows().begin(), pp.arrows().end(), qq.arrows().begin() + 1)) {
                for (const auto& fp : A.forbidden())
                    if (fp.second == alpha) {
                        const std::size_t beta = fp.first;
                        const std::size_t br = *B.bracket(beta, alpha);
                        const std::size_t e = A.trivial_index(q.arrow(beta).target);
                        b.lb.right_action[qi][l].push_back({*b.find({br, e, beta}), 1});
                    }
            }
        }
    }
    return b.lb;
}

std::vector<std::size_t> alpha_Z_labels(const LabeledBimodule& z, std::size_t alpha)
{
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < z.dim(); ++l)
        if (z.block_of[l].first == alpha)
            out.push_back(l);
    return out;
}

} // namespace singquiv
