#include "singquiv/monomial_algebra.hpp"

#include <algorithm>
#include <set>

namespace singquiv {

Path Path::from_arrows(const Quiver& q, std::vector<std::size_t> traversal)
{
    if (traversal.empty())
        throw InputError(InputError::Kind::Mismatch, "use Path::trivial for paths of length zero");
    for (auto a : traversal)
        if (a >= q.arrow_count())
            throw InputError(InputError::Kind::UnknownIdentifier, "arrow index out of range");
    for (std::size_t i = 1; i < traversal.size(); ++i)
        if (q.arrow(traversal[i - 1]).target != q.arrow(traversal[i]).source)
            throw InputError(InputError::Kind::NotComposable, "arrows " + q.arrow(traversal[i - 1]).id + " and " +
                                                                  q.arrow(traversal[i]).id + " do not compose");
    const std::size_t s = q.arrow(traversal.front()).source;
    const std::size_t t = q.arrow(traversal.back()).target;
    return Path(s, t, std::move(traversal));
}

bool basis_less(const Path& a, const Path& b)
{
    if (a.is_trivial() != b.is_trivial())
        return a.is_trivial();
    if (a.is_trivial())
        return a.source_ < b.source_;
    if (a.length() != b.length())
        return a.length() < b.length();
    return a.arrows_ < b.arrows_;
}

namespace {

// Directed cycle in the graph on arrows with a -> b whenever "a then b" is a nonzero composite.
std::optional<std::vector<std::size_t>> nonzero_cycle(const Quiver& q, const std::set<ForbiddenPair>& f)
{
    const std::size_t n = q.arrow_count();
    std::vector<std::vector<std::size_t>> next(n);
    for (std::size_t a = 0; a < n; ++a)
        for (auto b : q.out_arrows(q.arrow(a).target))
            if (!f.count({a, b}))
                next[a].push_back(b);

    enum Color { White, Grey, Black };
    std::vector<Color> color(n, White);
    std::vector<std::size_t> parent(n, n);
    for (std::size_t root = 0; root < n; ++root) {
        if (color[root] != White)
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        color[root] = Grey;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < next[u].size()) {
                const std::size_t w = next[u][i++];
                if (color[w] == Grey) {
                    std::vector<std::size_t> cyc{w};
                    for (std::size_t x = u; x != w; x = parent[x])
                        cyc.push_back(x);
                    std::reverse(cyc.begin() + 1, cyc.end());
                    return cyc;
                }
                if (color[w] == White) {
                    color[w] = Grey;
                    parent[w] = u;
                    stack.push_back({w, 0});
                }
                continue;
            }
            color[u] = Black;
            stack.pop_back();
        }
    }
    return std::nullopt;
}

} // namespace

QMAlgebra::QMAlgebra(Quiver quiver, std::vector<ForbiddenPair> forbidden) : quiver_(std::move(quiver))
{
    const auto& q = quiver_;
    for (const auto& fp : forbidden) {
        if (fp.first >= q.arrow_count() || fp.second >= q.arrow_count())
            throw InputError(InputError::Kind::UnknownIdentifier, "forbidden pair refers to an unknown arrow");
        if (q.arrow(fp.first).target != q.arrow(fp.second).source)
            throw InputError(InputError::Kind::NotComposable, "forbidden pair " + q.arrow(fp.first).id + " then " +
                                                                  q.arrow(fp.second).id + " is not a path");
    }
    std::set<ForbiddenPair> fset(forbidden.begin(), forbidden.end());
    forbidden_.assign(fset.begin(), fset.end());
    std::sort(forbidden_.begin(), forbidden_.end(), [](const ForbiddenPair& x, const ForbiddenPair& y) {
        return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    });

    if (auto cyc = nonzero_cycle(q, fset)) {
        std::string s;
        for (auto a : *cyc)
            s += (s.empty() ? "" : " ") + q.arrow(a).id;
        throw InputError(InputError::Kind::InfiniteDimensional, "InfiniteDimensional: nonzero cycle " + s);
    }

    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        basis_.push_back(Path::trivial(v));
    std::vector<Path> layer;
    for (std::size_t a = 0; a < q.arrow_count(); ++a)
        layer.push_back(Path::from_arrows(q, {a}));
    while (!layer.empty()) {
        std::vector<Path> next;
        for (const auto& p : layer) {
            basis_.push_back(p);
            for (auto b : q.out_arrows(p.target())) {
                if (fset.count({p.last_arrow(), b}))
                    continue;
                auto arrows = p.arrows();
                arrows.push_back(b);
                next.push_back(Path::from_arrows(q, std::move(arrows)));
            }
        }
        std::sort(next.begin(), next.end(), basis_less);
        layer = std::move(next);
    }
    arrow_basis_.resize(q.arrow_count());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!basis_[i].is_trivial()) {
            index_[basis_[i].arrows()] = i;
            if (basis_[i].length() == 1)
                arrow_basis_[basis_[i].first_arrow()] = i;
        }

    const std::size_t n = basis_.size();
    std::vector<std::int32_t> table(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (auto r = multiply(i, j))
                table[i * n + j] = static_cast<std::int32_t>(*r);

    std::vector<BasisAlgebra::Element> elements;
    for (const auto& p : basis_)
        elements.push_back({path_label(p), p.target(), p.source()});
    std::vector<std::size_t> idem(q.vertex_count()), gens(arrow_basis_);
    for (std::size_t v = 0; v < idem.size(); ++v)
        idem[v] = v;
    algebra_ = std::make_shared<const BasisAlgebra>("A", q.vertices(), std::move(elements), std::move(table),
                                                    std::move(idem), std::move(gens));
}

bool QMAlgebra::is_forbidden(std::size_t first, std::size_t second) const
{
    return std::binary_search(forbidden_.begin(), forbidden_.end(), ForbiddenPair{first, second},
                              [](const ForbiddenPair& x, const ForbiddenPair& y) {
                                  return std::pair(x.second, x.first) < std::pair(y.second, y.first);
                              });
}

std::optional<std::size_t> QMAlgebra::index_of(const Path& p) const
{
    if (p.is_trivial())
        return p.source() < quiver_.vertex_count() ? std::optional(p.source()) : std::nullopt;
    auto it = index_.find(p.arrows());
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> QMAlgebra::multiply(std::size_t i, std::size_t j) const
{
    const Path& p = basis_.at(i);
    const Path& q = basis_.at(j);
    if (p.source() != q.target())
        return std::nullopt;
    if (q.is_trivial())
        return i;
    if (p.is_trivial())
        return j;
    if (is_forbidden(q.last_arrow(), p.first_arrow()))
        return std::nullopt;
    auto arrows = q.arrows();
    arrows.insert(arrows.end(), p.arrows().begin(), p.arrows().end());
    return index_.at(arrows);
}

std::optional<Path> QMAlgebra::multiply(const Path& p, const Path& q) const
{
    auto i = index_of(p);
    auto j = index_of(q);
    if (!i || !j)
        throw InputError(InputError::Kind::Mismatch, "multiply: operand is not a nonzero path of the algebra");
    auto r = multiply(*i, *j);
    if (!r)
        return std::nullopt;
    return basis_[*r];
}

bool QMAlgebra::is_nonzero(const Path& p) const { return index_of(p).has_value(); }

std::string QMAlgebra::path_label(const Path& p) const
{
    if (p.is_trivial())
        return "e_" + quiver_.vertex_id(p.source());
    std::string s;
    for (auto it = p.arrows().rbegin(); it != p.arrows().rend(); ++it)
        s += (s.empty() ? "" : "*") + quiver_.arrow(*it).id;
    return s;
}

QMAlgebra build_algebra(const Quiver& q, const std::vector<ForbiddenPair>& forbidden)
{
    return QMAlgebra(q, forbidden);
}

Quiver relation_quiver(const QMAlgebra& a)
{
    const auto& q = a.quiver();
    Quiver r;
    for (const auto& arr : q.arrows())
        r.add_vertex(arr.id);
    for (const auto& fp : a.forbidden())
        r.add_arrow("[" + q.arrow(fp.second).id + " " + q.arrow(fp.first).id + "]", fp.first, fp.second);
    return r;
}

RszAlgebra::RszAlgebra(Quiver relation_quiver) : quiver_(std::move(relation_quiver))
{
    const auto& r = quiver_;
    const std::size_t nv = r.vertex_count(), na = r.arrow_count(), n = nv + na;
    std::vector<std::int32_t> table(n * n, -1);
    std::vector<BasisAlgebra::Element> elements;
    for (std::size_t v = 0; v < nv; ++v) {
        table[v * n + v] = static_cast<std::int32_t>(v);
        elements.push_back({"e_" + r.vertex_id(v), v, v});
    }
    for (std::size_t a = 0; a < na; ++a) {
        const auto& arr = r.arrow(a);
        const std::size_t x = nv + a;
        table[arr.target * n + x] = static_cast<std::int32_t>(x);
        table[x * n + arr.source] = static_cast<std::int32_t>(x);
        elements.push_back({arr.id, arr.target, arr.source});
        bracket_[{arr.source, arr.target}] = x;
    }
    std::vector<std::size_t> idem(nv), gens(na);
    for (std::size_t v = 0; v < nv; ++v)
        idem[v] = v;
    for (std::size_t a = 0; a < na; ++a)
        gens[a] = nv + a;
    algebra_ = std::make_shared<const BasisAlgebra>("B", r.vertices(), std::move(elements), std::move(table),
                                                    std::move(idem), std::move(gens));
}

std::optional<std::size_t> RszAlgebra::bracket(std::size_t from, std::size_t to) const
{
    auto it = bracket_.find({from, to});
    if (it == bracket_.end())
        return std::nullopt;
    return it->second;
}

RszAlgebra build_rsz(const Quiver& r) { return RszAlgebra(r); }

std::vector<std::size_t> ideal_basis(const QMAlgebra& a, std::size_t p, Side side)
{
    if (p >= a.dim())
        throw InputError(InputError::Kind::Mismatch, "ideal_basis: not a basis path");
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < a.dim(); ++q) {
        auto r = side == Side::Left ? a.multiply(q, p) : a.multiply(p, q);
        if (r)
            out.push_back(*r);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PresentationData arrow_presentation(const QMAlgebra& a, std::size_t alpha, Side side)
{
    const auto& q = a.quiver();
    if (alpha >= q.arrow_count())
        throw InputError(InputError::Kind::UnknownIdentifier, "arrow index out of range");
    PresentationData out;
    out.side = side;
    const std::size_t alpha_idx = a.arrow_index(alpha);
    out.cover_generator = alpha_idx;
    if (side == Side::Left) {
        out.cover_vertex = q.arrow(alpha).target;
        out.cokernel = "A" + a.path_label(alpha_idx);
        for (const auto& fp : a.forbidden())
            if (fp.first == alpha) {
                const std::size_t beta = fp.second;
                out.middle.push_back({q.arrow(beta).target, a.arrow_index(beta),
                                      "A e_" + q.vertex_id(q.arrow(beta).target)});
            }
    } else {
        out.cover_vertex = q.arrow(alpha).source;
        out.cokernel = a.path_label(alpha_idx) + "A";
        for (const auto& fp : a.forbidden())
            if (fp.second == alpha) {
                const std::size_t beta = fp.first;
                out.middle.push_back({q.arrow(beta).source, a.arrow_index(beta),
                                      "e_" + q.vertex_id(q.arrow(beta).source) + " A"});
            }
    }
    return out;
}

PresentationData simple_presentation(const RszAlgebra& b, std::size_t alpha)
{
    const auto& r = b.relation_quiver();
    if (alpha >= r.vertex_count())
        throw InputError(InputError::Kind::UnknownIdentifier, "vertex index out of range");
    PresentationData out;
    out.side = Side::Left;
    out.cover_vertex = alpha;
    out.cover_generator = b.idempotent_index(alpha);
    out.cokernel = "S_" + r.vertex_id(alpha);
    for (auto arr : r.out_arrows(alpha)) {
        const std::size_t beta = r.arrow(arr).target;
        out.middle.push_back({beta, b.arrow_basis_index(arr), "B e_" + r.vertex_id(beta)});
    }
    return out;
}

} // namespace singquiv
