#include "singquiv/report.hpp"

#include <sstream>

namespace singquiv {

using nlohmann::ordered_json;

std::string to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "FAIL";
    case CheckStatus::Undetermined:
        return "undetermined";
    case CheckStatus::Skipped:
        return "skipped";
    }
    return "undetermined";
}

bool has_failure(const std::vector<CheckOutcome>& checks)
{
    return std::any_of(checks.begin(), checks.end(),
                       [](const CheckOutcome& c) { return c.status == CheckStatus::Fail; });
}

namespace {

ordered_json multiplicity_json(const Quiver& r, const std::map<std::size_t, std::size_t>& m)
{
    ordered_json out = ordered_json::object();
    for (const auto& [v, c] : m)
        out[r.vertex_id(v)] = c;
    return out;
}

ordered_json quiver_json(const Quiver& r)
{
    ordered_json arrows = ordered_json::array();
    for (const auto& a : r.arrows())
        arrows.push_back({{"id", a.id}, {"source", r.vertex_id(a.source)}, {"target", r.vertex_id(a.target)}});
    return {{"vertices", r.vertices()}, {"arrows", arrows}};
}

std::string multiplicity_text(const Quiver& r, const std::map<std::size_t, std::size_t>& m)
{
    if (m.empty())
        return "{}";
    std::string s = "{";
    for (const auto& [v, c] : m)
        s += (s.size() > 1 ? ", " : "") + r.vertex_id(v) + ": " + std::to_string(c);
    return s + "}";
}

} // namespace

ordered_json report_json(const std::string& name, const QMAlgebra&, const AnalysisReport& rep)
{
    const Quiver& r = rep.relation_quiver;
    ordered_json level = {{"found", rep.level.found}, {"n", nullptr}};
    if (rep.level.found)
        level["n"] = rep.level.n;
    return {
        {"name", name},
        {"dimA", rep.dimA},
        {"dimB", rep.dimB},
        {"dimM", rep.dimM},
        {"dimY", rep.dimY},
        {"dimZ", rep.dimZ},
        {"relation_quiver", quiver_json(r)},
        {"relation_quiver_class", to_string(rep.relation_quiver_class)},
        {"prop_main", rep.prop_main},
        {"mu", multiplicity_json(r, rep.mult.mu)},
        {"nu", multiplicity_json(r, rep.mult.nu)},
        {"pd_kY_leftB", to_string(rep.pd_kY_leftB)},
        {"pd_kZ_rightA", to_string(rep.pd_kZ_rightA)},
        {"verdict_singular_equiv_with_level", rep.verdict},
        {"level_witness", level},
        {"warnings", rep.warnings},
    };
}

std::string report_text(const std::string& name, const QMAlgebra& a, const AnalysisReport& rep)
{
    const Quiver& r = rep.relation_quiver;
    std::ostringstream out;
    out << "algebra " << name << ": " << a.quiver().vertex_count() << " vertices, " << a.quiver().arrow_count()
        << " arrows, " << a.forbidden().size() << " forbidden paths\n";
    out << "  dim A = " << rep.dimA << ", dim B = " << rep.dimB << ", dim M = " << rep.dimM
        << ", dim kY = " << rep.dimY << ", dim kZ = " << rep.dimZ << "\n";
    out << "relation quiver: " << r.vertex_count() << " vertices, " << r.arrow_count() << " arrows\n";
    for (const auto& arr : r.arrows())
        out << "  " << arr.id << ": " << r.vertex_id(arr.source) << " -> " << r.vertex_id(arr.target) << "\n";
    out << "  class: " << to_string(rep.relation_quiver_class) << "\n";
    out << "prop_main criterion: " << (rep.prop_main ? "true" : "false") << "\n";
    out << "mu = " << multiplicity_text(r, rep.mult.mu) << ", nu = " << multiplicity_text(r, rep.mult.nu) << "\n";
    out << "pd kY (left B): " << to_string(rep.pd_kY_leftB) << "\n";
    out << "pd kZ (right A): " << to_string(rep.pd_kZ_rightA) << "\n";
    out << "singular equivalence with level: " << (rep.verdict ? "yes" : "not established") << "\n";
    if (rep.level.attempts.empty())
        out << "level witness: not searched\n";
    for (const auto& at : rep.level.attempts)
        out << "  n = " << at.n << ": dim N = " << at.dim_N << ", projective sides "
            << at.M_left_projective << at.M_right_projective << at.N_left_projective << at.N_right_projective
            << ", M(x)N " << to_string(at.iso_A) << ", N(x)M " << to_string(at.iso_B) << "\n";
    if (!rep.level.attempts.empty())
        out << "level witness: " << (rep.level.found ? "n = " + std::to_string(rep.level.n) : "none found") << "\n";
    for (const auto& w : rep.warnings)
        out << "warning: " << w << "\n";
    return out.str();
}

ordered_json checks_json(const std::vector<CheckOutcome>& checks)
{
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json j = {{"group", c.group}, {"name", c.name}, {"status", to_string(c.status)}};
        if (!c.detail.empty())
            j["detail"] = c.detail;
        arr.push_back(j);
    }
    return {{"ok", !has_failure(checks)}, {"checks", arr}};
}

std::string checks_text(const std::vector<CheckOutcome>& checks)
{
    std::ostringstream out;
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& c : checks) {
        ++counts[static_cast<int>(c.status)];
        out << "[" << to_string(c.status) << "] " << c.group << ": " << c.name;
        if (!c.detail.empty() && c.status != CheckStatus::Pass)
            out << " (" << c.detail << ")";
        out << "\n";
    }
    out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " undetermined, " << counts[3]
        << " skipped\n";
    return out.str();
}

DumpTarget parse_dump_target(const std::string& s)
{
    if (s == "M")
        return DumpTarget::M;
    if (s == "Y")
        return DumpTarget::Y;
    if (s == "Z")
        return DumpTarget::Z;
    if (s == "A")
        return DumpTarget::A;
    if (s == "B")
        return DumpTarget::B;
    throw InputError(InputError::Kind::Syntax, "dump target must be one of M, Y, Z, A, B");
}

namespace {

template <class F>
ordered_json entry_json(const F& k, const typename F::value_type& v)
{
    const std::string s = k.to_string(v);
    const bool integral = !s.empty() && s.find('/') == std::string::npos && s.size() < 18;
    if (integral)
        return std::stoll(s);
    return s;
}

/// Action matrices of every basis element of `alg`, re-indexed to label order.
template <class F>
ordered_json actions_json(const Module<F>& mod, const std::vector<std::size_t>& pos)
{
    const auto& k = mod.field();
    const auto& alg = *mod.algebra();
    ordered_json out = ordered_json::object();
    for (std::size_t x = 0; x < alg.dim(); ++x) {
        const Mat<F> act = mod.action(x);
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < pos.size(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < pos.size(); ++j)
                row.push_back(entry_json(k, act(pos[i], pos[j])));
            rows.push_back(row);
        }
        out[alg.label(x)] = rows;
    }
    return out;
}

ordered_json algebra_json(const BasisAlgebra& alg)
{
    ordered_json basis = ordered_json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        basis.push_back({{"label", alg.label(i)},
                         {"left", alg.vertex_label(alg.element(i).left_vertex)},
                         {"right", alg.vertex_label(alg.element(i).right_vertex)}});
    ordered_json products = ordered_json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            if (auto p = alg.product(i, j))
                if (!alg.is_idempotent(i) && !alg.is_idempotent(j))
                    products.push_back({alg.label(i), alg.label(j), alg.label(*p)});
    return {{"dim", alg.dim()}, {"basis", basis}, {"radical_products", products}};
}

} // namespace

template <class F>
ordered_json dump_json(const QMAlgebra& a, DumpTarget which, const F& k)
{
    const Setting s(a);
    if (which == DumpTarget::A) {
        auto j = algebra_json(*a.basis_algebra());
        j["which"] = "A";
        return j;
    }
    if (which == DumpTarget::B) {
        auto j = algebra_json(*s.B.basis_algebra());
        j["which"] = "B";
        return j;
    }
    const LabeledBimodule lb = which == DumpTarget::M ? build_M(s) : which == DumpTarget::Y ? build_Y(s) : build_Z(s);
    const auto r = realize(lb, which == DumpTarget::M ? s.AB : s.BA, k);
    ordered_json labels = ordered_json::array();
    for (std::size_t l = 0; l < lb.dim(); ++l)
        labels.push_back({{"label", lb.labels[l]},
                          {"left", lb.left->vertex_label(lb.block_of[l].first)},
                          {"right", lb.right->vertex_label(lb.block_of[l].second)}});
    return {{"which", lb.name},
            {"field", k.name()},
            {"left_algebra", lb.left->name()},
            {"right_algebra", lb.right->name()},
            {"dim", lb.dim()},
            {"basis", labels},
            {"left_action", actions_json(left_restriction(r.bimodule), r.position)},
            {"right_action", actions_json(right_restriction(r.bimodule), right_positions(lb, r))}};
}

template <class F>
std::string dump_text(const QMAlgebra& a, DumpTarget which, const F& k)
{
    const ordered_json j = dump_json(a, which, k);
    std::ostringstream out;
    if (which == DumpTarget::A || which == DumpTarget::B) {
        out << j["which"].template get<std::string>() << ": dim " << j["dim"] << "\n";
        std::size_t i = 0;
        for (const auto& b : j["basis"])
            out << "  " << i++ << " " << b["label"].template get<std::string>() << "  (" << b["left"].template get<std::string>()
                << " <- " << b["right"].template get<std::string>() << ")\n";
        for (const auto& p : j["radical_products"])
            out << "  " << p[0].template get<std::string>() << " * " << p[1].template get<std::string>() << " = "
                << p[2].template get<std::string>() << "\n";
        return out.str();
    }
    out << j["which"].template get<std::string>() << " over (" << j["left_algebra"].template get<std::string>() << ", "
        << j["right_algebra"].template get<std::string>() << "), dim " << j["dim"] << ", field " << k.name() << "\n";
    std::size_t i = 0;
    for (const auto& b : j["basis"])
        out << "  " << i++ << " " << b["label"].template get<std::string>() << "  in e_" << b["left"].template get<std::string>()
            << " (-) e_" << b["right"].template get<std::string>() << "\n";
    for (const char* side : {"left_action", "right_action"})
        for (const auto& [x, mat] : j[side].items()) {
            out << (side[0] == 'l' ? "left action of " : "right action of ") << x << ":\n";
            for (const auto& row : mat) {
                out << " ";
                for (const auto& e : row)
                    out << " " << (e.is_string() ? e.template get<std::string>() : e.dump());
                out << "\n";
            }
        }
    return out.str();
}

template ordered_json dump_json<PrimeField>(const QMAlgebra&, DumpTarget, const PrimeField&);
template ordered_json dump_json<RationalField>(const QMAlgebra&, DumpTarget, const RationalField&);
template std::string dump_text<PrimeField>(const QMAlgebra&, DumpTarget, const PrimeField&);
template std::string dump_text<RationalField>(const QMAlgebra&, DumpTarget, const RationalField&);

} // namespace singquiv
