#pragma once

// Projective dimensions (combinatorial and by brute-force syzygy chains), the
// relation-quiver criteria, the syzygy multiplicities of kY', and a bounded
// search for a singular equivalence with level.

#include "singquiv/constructions.hpp"

#include <cstdint>
#include <map>
#include <random>

namespace singquiv {

struct PdResult {
    enum class Kind { Finite, Infinite, AtLeast };
    Kind kind = Kind::Finite;
    std::size_t n = 0; // the value for Finite, the bound for AtLeast

    static PdResult finite(std::size_t n) { return {Kind::Finite, n}; }
    static PdResult infinite() { return {Kind::Infinite, 0}; }
    static PdResult at_least(std::size_t n) { return {Kind::AtLeast, n}; }
    bool is_finite() const { return kind == Kind::Finite; }
    bool is_conclusive() const { return kind != Kind::AtLeast; }
    bool operator==(const PdResult&) const = default;
};

std::string to_string(const PdResult& pd);

/// Supremum of projective dimensions of direct summands.
PdResult pd_max(const PdResult& a, const PdResult& b);

/// pd of the simple S_alpha over B = kR/J^2: Infinite iff alpha is not left-bounded in R,
/// else the length of the longest path starting at alpha.
PdResult pd_simple_rsz(const Quiver& r, std::size_t alpha);
PdResult pd_simple_rsz(const Quiver& r, const std::string& alpha);

/// pd of A delta (Left) or delta A (Right) read off the relation quiver.
PdResult pd_arrow_module(const QMAlgebra& a, std::size_t delta, Side side);

struct Multiplicities {
    std::map<std::size_t, std::size_t> mu; // sources alpha of R: kY'' = (+) S_alpha^mu
    std::map<std::size_t, std::size_t> nu; // Omega_B(kY') = (+) S_beta^nu
};

/// mu counts Y'' per source; nu_beta counts, for each q, the kernel of the
/// projective cover of kY' restricted to the elements [beta alpha] e_(alpha|q).
Multiplicities syzygy_multiplicities(const Setting& s, const LabeledBimodule& y, const YSplit& split);

/// Every source and every vertex of in-degree at least two is left-bounded.
bool prop_main_criterion(const Quiver& r);

enum class RelationQuiverClass { AllBasicOrAcyclic, Other };
std::string to_string(RelationQuiverClass c);
RelationQuiverClass gorenstein_classify(const Quiver& r);

/// pd of kY as a left B-module from mu, nu and pd_simple_rsz.
PdResult pd_kY_leftB(const Setting& s, const Multiplicities& mult);

constexpr std::size_t kDefaultPdCap = 10;

template <class F>
struct BruteForcePd {
    PdResult pd;
    std::vector<std::size_t> syzygy_dims; // dim Omega^i, i = 0, 1, ...
    /// For Infinite: Omega^first is a direct summand of Omega^second, with its witness.
    std::optional<std::pair<std::size_t, std::size_t>> period;
    std::optional<std::pair<ModuleMap<F>, ModuleMap<F>>> period_witness;
    std::size_t undetermined = 0; // summand tests that stayed inconclusive
    std::vector<std::string> warnings;
};

/// Walks the syzygy chain. Finite(n) when Omega^n is projective; Infinite when
/// some Omega^i (nonzero, not projective) is a direct summand of a later Omega^j,
/// since then Omega^i recurs as a summand of Omega^{i + t(j - i)} for every t.
template <class F>
BruteForcePd<F> pd_module_bruteforce(const Module<F>& m, std::size_t cap, std::mt19937_64& rng)
{
    BruteForcePd<F> out;
    if (m.dim() == 0) {
        out.pd = PdResult::finite(0);
        out.syzygy_dims = {0};
        out.warnings.push_back("zero module: projective dimension reported as 0");
        return out;
    }
    std::vector<Module<F>> chain{m};
    for (std::size_t n = 0; n < cap; ++n) {
        const Module<F>& cur = chain[n];
        out.syzygy_dims.push_back(cur.dim());
        if (is_projective(cur)) {
            out.pd = PdResult::finite(n);
            return out;
        }
        for (std::size_t i = 0; i < n; ++i) {
            auto r = is_direct_summand(chain[i], cur, rng);
            if (r.verdict == Verdict::Yes) {
                out.pd = PdResult::infinite();
                out.period = std::pair(i, n);
                out.period_witness = std::move(r.witness);
                return out;
            }
            if (r.verdict == Verdict::Undetermined)
                ++out.undetermined;
        }
        chain.push_back(syzygy(cur).module);
    }
    out.pd = PdResult::at_least(cap);
    return out;
}

/// The submodule spanned by standard basis vectors (global positions) of m.
template <class F>
Module<F> span_of_positions(const Module<F>& m, const std::vector<std::size_t>& positions)
{
    const auto& k = m.field();
    std::vector<std::vector<std::size_t>> per(m.vertex_count());
    for (auto p : positions)
        for (std::size_t v = 0; v < m.vertex_count(); ++v)
            if (p >= m.offset(v) && p < m.offset(v) + m.dim_at(v))
                per[v].push_back(p - m.offset(v));
    Graded<F> basis;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        std::sort(per[v].begin(), per[v].end());
        Mat<F> b = zeros(k, m.dim_at(v), per[v].size());
        for (std::size_t c = 0; c < per[v].size(); ++c)
            b(per[v][c], c) = k.one();
        basis.push_back(std::move(b));
    }
    return submodule(m, basis);
}

/// Direct sum of simples S_v^{mult[v]} over the algebra.
template <class F>
Module<F> semisimple(const AlgebraPtr& a, const F& k, const std::map<std::size_t, std::size_t>& mult)
{
    std::vector<Module<F>> parts;
    for (const auto& [v, c] : mult)
        for (std::size_t i = 0; i < c; ++i)
            parts.push_back(simple_module(a, k, v));
    std::vector<const Module<F>*> ptrs;
    for (const auto& p : parts)
        ptrs.push_back(&p);
    return direct_sum(ptrs, a, k);
}

/// The right A-module k(_alpha Z) over A^op.
template <class F>
Module<F> alpha_Z_module(const Realized<F>& z, std::size_t alpha)
{
    return row_restriction(z.bimodule, alpha);
}

/// The pd of kZ as a right A-module: the supremum over its components k(_alpha Z).
template <class F>
PdResult pd_kZ_rightA(const Setting& s, const Realized<F>& z, std::size_t cap, std::mt19937_64& rng,
                      std::vector<std::string>* warnings = nullptr)
{
    PdResult out = PdResult::finite(0);
    const auto& q = s.A.quiver();
    for (std::size_t alpha = 0; alpha < q.arrow_count(); ++alpha) {
        const auto r = pd_module_bruteforce(alpha_Z_module(z, alpha), cap, rng);
        if (warnings && r.pd.kind == PdResult::Kind::AtLeast)
            warnings->push_back("pd of the component of kZ at " + q.arrow(alpha).id + " exceeds the cap " +
                                std::to_string(cap));
        out = pd_max(out, r.pd);
    }
    return out;
}

struct LevelAttempt {
    std::size_t n = 0;
    std::size_t dim_N = 0;
    bool M_left_projective = false;
    bool M_right_projective = false;
    bool N_left_projective = false;
    bool N_right_projective = false;
    Verdict iso_A = Verdict::Undetermined; // strip(M (x)_B N) vs strip(Omega^n_{A^e}(A))
    Verdict iso_B = Verdict::Undetermined; // strip(N (x)_A M) vs strip(Omega^n_{B^e}(B))
    bool witnesses_checked = false;

    bool success() const
    {
        return M_left_projective && M_right_projective && N_left_projective && N_right_projective &&
               iso_A == Verdict::Yes && iso_B == Verdict::Yes && witnesses_checked;
    }
};

struct LevelSearch {
    bool found = false;
    std::size_t n = 0;
    std::vector<LevelAttempt> attempts;
    std::vector<std::string> warnings;
};

constexpr std::size_t kDefaultMaxLevel = 3;
constexpr std::size_t kDefaultDimCeiling = 2000;

namespace detail {

template <class F>
std::size_t predicted_cover_dim(const Module<F>& m)
{
    const auto top = top_multiplicities(m);
    std::size_t d = 0;
    for (std::size_t v = 0; v < top.size(); ++v)
        d += top[v] * m.algebra()->left_projective_basis(v).size();
    return d;
}

/// Stable isomorphism test: both sides stripped of projective summands. A Yes
/// carries a witness that is re-checked to be an invertible module map.
template <class F>
Verdict stable_iso(const Module<F>& x, const Module<F>& y, std::mt19937_64& rng, bool& witness_ok)
{
    const auto sx = strip_projectives(x).module;
    const auto sy = strip_projectives(y).module;
    auto r = is_isomorphic(sx, sy, rng);
    if (r.verdict == Verdict::Yes)
        witness_ok = r.witness && is_invertible(sx.field(), *r.witness) && is_homomorphism(sx, sy, *r.witness);
    return r.verdict;
}

} // namespace detail

/// For n = 0..max_n, N_n = Omega^n(kY) as a B-A-bimodule; checks the one-sided
/// projectivity of M and N_n and the stable isomorphisms M (x)_B N_n ~ Omega^n_{A^e}(A)
/// and N_n (x)_A M ~ Omega^n_{B^e}(B). Stops at the first n where everything holds.
template <class F>
LevelSearch level_witness_search(const Setting& s, const Realized<F>& m, const Realized<F>& y,
                                 std::size_t max_n, std::mt19937_64& rng,
                                 std::size_t dim_ceiling = kDefaultDimCeiling)
{
    LevelSearch out;
    const auto& k = m.bimodule.field();
    const bool m_left = is_projective(left_restriction(m.bimodule));
    const bool m_right = is_projective(right_restriction(m.bimodule));
    Module<F> n_mod = bimodule_as_onesided(y.bimodule);
    Module<F> omega_a = bimodule_as_onesided(regular_bimodule(s.AA, k));
    Module<F> omega_b = bimodule_as_onesided(regular_bimodule(s.BB, k));
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n > 0) {
            for (const Module<F>* x : {&n_mod, &omega_a, &omega_b})
                if (detail::predicted_cover_dim(*x) > dim_ceiling) {
                    out.warnings.push_back("level search stopped before n = " + std::to_string(n) +
                                           ": projective cover would exceed dimension " +
                                           std::to_string(dim_ceiling));
                    return out;
                }
            n_mod = syzygy(n_mod).module;
            omega_a = syzygy(omega_a).module;
            omega_b = syzygy(omega_b).module;
        }
        const Bimodule<F> nb = onesided_as_bimodule(s.BA, n_mod);
        LevelAttempt at;
        at.n = n;
        at.dim_N = nb.dim();
        at.M_left_projective = m_left;
        at.M_right_projective = m_right;
        at.N_left_projective = is_projective(left_restriction(nb));
        at.N_right_projective = is_projective(right_restriction(nb));
        bool wa = false, wb = false;
        const auto mn = bimodule_as_onesided(tensor_over(m.bimodule, nb, s.AA));
        at.iso_A = detail::stable_iso(mn, omega_a, rng, wa);
        const auto nm = bimodule_as_onesided(tensor_over(nb, m.bimodule, s.BB));
        at.iso_B = detail::stable_iso(nm, omega_b, rng, wb);
        at.witnesses_checked = wa && wb;
        for (auto [v, what] : {std::pair{at.iso_A, "M (x)_B N"}, std::pair{at.iso_B, "N (x)_A M"}})
            if (v == Verdict::Undetermined)
                out.warnings.push_back(std::string("level search: stable isomorphism for ") + what +
                                       " undetermined at n = " + std::to_string(n));
        out.attempts.push_back(at);
        if (at.success()) {
            out.found = true;
            out.n = n;
            return out;
        }
    }
    return out;
}

struct AnalysisOptions {
    std::uint64_t seed = 20240607;
    std::size_t max_n = kDefaultMaxLevel;
    std::size_t pd_cap = kDefaultPdCap;
    std::size_t dim_ceiling = kDefaultDimCeiling;
    bool level_search = true;
};

struct AnalysisReport {
    std::size_t dimA = 0, dimB = 0, dimM = 0, dimY = 0, dimZ = 0;
    Quiver relation_quiver;
    RelationQuiverClass relation_quiver_class = RelationQuiverClass::Other;
    bool prop_main = false;
    Multiplicities mult;
    PdResult pd_kY_leftB;
    PdResult pd_kZ_rightA;
    LevelSearch level;
    bool verdict = false;
    bool constructions_ok = false;
    std::vector<std::string> warnings;
};

/// Runs the constructions, their verifications and every invariant above.
template <class F>
AnalysisReport analyze(const QMAlgebra& a, const F& k, const AnalysisOptions& opt = {});

extern template AnalysisReport analyze<PrimeField>(const QMAlgebra&, const PrimeField&, const AnalysisOptions&);
extern template AnalysisReport analyze<RationalField>(const QMAlgebra&, const RationalField&,
                                                      const AnalysisOptions&);

} // namespace singquiv
