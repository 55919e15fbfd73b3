#include "singquiv/homology.hpp"

namespace singquiv {

std::string to_string(const PdResult& pd)
{
    switch (pd.kind) {
    case PdResult::Kind::Finite:
        return "Finite(" + std::to_string(pd.n) + ")";
    case PdResult::Kind::Infinite:
        return "Infinite";
    case PdResult::Kind::AtLeast:
        return "AtLeast(" + std::to_string(pd.n) + ")";
    }
    return "Infinite";
}

PdResult pd_max(const PdResult& a, const PdResult& b)
{
    using K = PdResult::Kind;
    if (a.kind == K::Infinite || b.kind == K::Infinite)
        return PdResult::infinite();
    const std::size_t n = std::max(a.n, b.n);
    if (a.kind == K::AtLeast || b.kind == K::AtLeast)
        return PdResult::at_least(n);
    return PdResult::finite(n);
}

PdResult pd_simple_rsz(const Quiver& r, std::size_t alpha)
{
    if (alpha >= r.vertex_count())
        throw InputError(InputError::Kind::UnknownIdentifier, "vertex index out of range");
    if (auto len = longest_path_from(r, alpha))
        return PdResult::finite(*len);
    return PdResult::infinite();
}

PdResult pd_simple_rsz(const Quiver& r, const std::string& alpha)
{
    return pd_simple_rsz(r, r.vertex_index(alpha));
}

PdResult pd_arrow_module(const QMAlgebra& a, std::size_t delta, Side side)
{
    // Omega(A delta) = (+) A beta over the R-arrows delta -> beta; Omega(delta A) runs against them
    const Quiver r = relation_quiver(a);
    const auto len = side == Side::Left ? longest_path_from(r, delta) : longest_path_to(r, delta);
    return len ? PdResult::finite(*len) : PdResult::infinite();
}

Multiplicities syzygy_multiplicities(const Setting& s, const LabeledBimodule& y, const YSplit& split)
{
    const auto& A = s.A;
    Multiplicities out;
    for (const auto& [alpha, c] : split.mu)
        if (c > 0)
            out.mu[alpha] = c;
    std::vector<bool> in_top(y.dim(), false);
    for (auto l : split.y_top)
        in_top[l] = true;
    // c[(beta, q)] = #{alpha : beta alpha in F, (alpha|q) in Y'_top}
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> c;
    for (std::size_t l = 0; l < y.dim(); ++l) {
        if (!in_top[l])
            continue;
        const auto [alpha, qi, unused] = y.parts[l];
        (void)unused;
        for (const auto& fp : A.forbidden())
            if (fp.first == alpha)
                ++c[{fp.second, qi}];
    }
    for (const auto& [key, count] : c) {
        const auto [beta, qi] = key;
        const bool image_nonzero = A.multiply(A.arrow_index(beta), qi).has_value();
        const std::size_t kernel = count - (image_nonzero ? 1 : 0);
        if (kernel > 0)
            out.nu[beta] += kernel;
    }
    return out;
}

bool prop_main_criterion(const Quiver& r)
{
    for (std::size_t v = 0; v < r.vertex_count(); ++v) {
        const auto d = vertex_degrees(r, v);
        if ((d.is_source || d.in_degree >= 2) && !is_left_bounded(r, v))
            return false;
    }
    return true;
}

std::string to_string(RelationQuiverClass c)
{
    return c == RelationQuiverClass::AllBasicOrAcyclic ? "AllBasicOrAcyclic" : "Other";
}

RelationQuiverClass gorenstein_classify(const Quiver& r)
{
    for (const auto& comp : classify_components(r))
        if (comp.kind == ComponentKind::Other)
            return RelationQuiverClass::Other;
    return RelationQuiverClass::AllBasicOrAcyclic;
}

PdResult pd_kY_leftB(const Setting& s, const Multiplicities& mult)
{
    const Quiver& r = s.B.relation_quiver();
    PdResult out = PdResult::finite(0);
    for (const auto& [alpha, c] : mult.mu)
        if (c > 0)
            out = pd_max(out, pd_simple_rsz(r, alpha));
    // kY' has a projective cover with semisimple kernel (+) S_beta^nu
    PdResult prime = PdResult::finite(0);
    for (const auto& [beta, c] : mult.nu) {
        if (c == 0)
            continue;
        const PdResult sb = pd_simple_rsz(r, beta);
        prime = pd_max(prime, sb.is_finite() ? PdResult::finite(sb.n + 1) : sb);
    }
    return pd_max(out, prime);
}

template <class F>
AnalysisReport analyze(const QMAlgebra& a, const F& k, const AnalysisOptions& opt)
{
    AnalysisReport rep;
    std::mt19937_64 rng(opt.seed);
    const Setting s(a);
    const auto lm = build_M(s), ly = build_Y(s), lz = build_Z(s);
    const auto m = realize(lm, s.AB, k);
    const auto y = realize(ly, s.BA, k);
    const auto z = realize(lz, s.BA, k);

    rep.constructions_ok = true;
    auto fail = [&](const std::string& why) {
        rep.constructions_ok = false;
        rep.warnings.push_back(why);
    };
    if (auto v = formula_violation(lm, m))
        fail(*v);
    if (auto v = formula_violation(ly, y))
        fail(*v);
    if (auto v = formula_violation(lz, z))
        fail(*v);
    for (const auto* b : {&m.bimodule, &y.bimodule, &z.bimodule})
        if (auto v = bimodule_violation(*b))
            fail("bimodule axioms fail: " + *v);
    if (rep.constructions_ok) {
        const auto dc = verify_dual_isos(s, k);
        if (!dc.phi_ok || !dc.psi_ok)
            fail("dual comparison failed: " + dc.detail);
    }

    rep.dimA = a.dim();
    rep.dimB = s.B.dim();
    rep.dimM = lm.dim();
    rep.dimY = ly.dim();
    rep.dimZ = lz.dim();
    rep.relation_quiver = s.B.relation_quiver();
    rep.relation_quiver_class = gorenstein_classify(rep.relation_quiver);
    rep.prop_main = prop_main_criterion(rep.relation_quiver);

    const auto split = split_Y(s, ly);
    rep.mult = syzygy_multiplicities(s, ly, split);
    rep.pd_kY_leftB = pd_kY_leftB(s, rep.mult);
    if (rep.prop_main && !rep.pd_kY_leftB.is_finite())
        rep.warnings.push_back("prop_main holds but pd of kY is " + to_string(rep.pd_kY_leftB));
    rep.pd_kZ_rightA = pd_kZ_rightA(s, z, opt.pd_cap, rng, &rep.warnings);

    if (opt.level_search) {
        rep.level = level_witness_search(s, m, y, opt.max_n, rng, opt.dim_ceiling);
        for (const auto& w : rep.level.warnings)
            rep.warnings.push_back(w);
    }
    rep.verdict = rep.relation_quiver_class == RelationQuiverClass::AllBasicOrAcyclic || rep.prop_main ||
                  rep.pd_kZ_rightA.is_finite();
    return rep;
}

template AnalysisReport analyze<PrimeField>(const QMAlgebra&, const PrimeField&, const AnalysisOptions&);
template AnalysisReport analyze<RationalField>(const QMAlgebra&, const RationalField&, const AnalysisOptions&);

} // namespace singquiv
