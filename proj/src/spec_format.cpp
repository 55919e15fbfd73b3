#include "singquiv/spec_format.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace singquiv {

namespace {

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream in(line.substr(0, line.find('#')));
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

[[noreturn]] void fail(InputError::Kind kind, std::size_t line, const std::string& what)
{
    throw InputError(kind, "line " + std::to_string(line) + ": " + what);
}

} // namespace

QuiverSpec parse_spec(const std::string& text)
{
    QuiverSpec s;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool named = false;
    std::map<std::string, std::size_t> vertex_line, arrow_line;
    std::vector<std::size_t> arrow_lines;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty())
            continue;
        const std::string& kw = t[0];
        if (kw == "quiver") {
            if (t.size() != 2)
                fail(InputError::Kind::Syntax, lineno, "expected 'quiver <name>'");
            if (named)
                fail(InputError::Kind::Duplicate, lineno, "quiver name given twice");
            s.name = t[1];
            named = true;
        } else if (kw == "vertex" || kw == "vertices") {
            if (t.size() < 2 || (kw == "vertex" && t.size() != 2))
                fail(InputError::Kind::Syntax, lineno, "expected '" + kw + " <id>" + (kw == "vertex" ? "'" : "...'"));
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (!vertex_line.emplace(t[i], lineno).second)
                    fail(InputError::Kind::Duplicate, lineno, "vertex " + t[i] + " declared twice");
                s.vertices.push_back(t[i]);
            }
        } else if (kw == "arrow") {
            if (t.size() != 4)
                fail(InputError::Kind::Syntax, lineno, "expected 'arrow <id> <source> <target>'");
            if (!arrow_line.emplace(t[1], lineno).second)
                fail(InputError::Kind::Duplicate, lineno, "arrow " + t[1] + " declared twice");
            s.arrows.push_back({t[1], t[2], t[3]});
            arrow_lines.push_back(lineno);
        } else if (kw == "forbid") {
            if (t.size() != 3)
                fail(InputError::Kind::Syntax, lineno, "expected 'forbid <first> <second>'");
            s.forbids.push_back({t[1], t[2], lineno});
        } else {
            fail(InputError::Kind::Syntax, lineno, "unknown keyword '" + kw + "'");
        }
    }
    // referential integrity, once every declaration has been seen
    std::map<std::string, const QuiverSpec::ArrowDecl*> arrows;
    for (std::size_t i = 0; i < s.arrows.size(); ++i) {
        const auto& a = s.arrows[i];
        for (const auto* v : {&a.source, &a.target})
            if (!vertex_line.count(*v))
                fail(InputError::Kind::UnknownIdentifier, arrow_lines[i], "unknown vertex " + *v);
        arrows[a.id] = &a;
    }
    for (const auto& f : s.forbids) {
        for (const auto* id : {&f.first, &f.second})
            if (!arrows.count(*id))
                fail(InputError::Kind::UnknownIdentifier, f.line, "unknown arrow " + *id);
        const auto* a = arrows[f.first];
        const auto* b = arrows[f.second];
        if (a->target != b->source)
            fail(InputError::Kind::NotComposable, f.line,
                 "NotComposable: " + f.first + " ends at " + a->target + " but " + f.second + " starts at " +
                     b->source);
    }
    return s;
}

QuiverSpec read_spec_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(InputError::Kind::Unknown, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string render_spec(const QuiverSpec& s)
{
    std::ostringstream out;
    out << "quiver " << s.name << "\n";
    if (!s.vertices.empty()) {
        out << "vertices";
        for (const auto& v : s.vertices)
            out << " " << v;
        out << "\n";
    }
    for (const auto& a : s.arrows)
        out << "arrow " << a.id << " " << a.source << " " << a.target << "\n";
    for (const auto& f : s.forbids)
        out << "forbid " << f.first << " " << f.second << "\n";
    return out.str();
}

Quiver spec_quiver(const QuiverSpec& s)
{
    Quiver q;
    for (const auto& v : s.vertices)
        q.add_vertex(v);
    for (const auto& a : s.arrows)
        q.add_arrow(a.id, q.vertex_index(a.source), q.vertex_index(a.target));
    return q;
}

QMAlgebra build_from_spec(const QuiverSpec& s)
{
    const Quiver q = spec_quiver(s);
    std::vector<ForbiddenPair> f;
    for (const auto& d : s.forbids)
        f.push_back({q.arrow_index(d.first), q.arrow_index(d.second)});
    return QMAlgebra(q, std::move(f));
}

} // namespace singquiv
