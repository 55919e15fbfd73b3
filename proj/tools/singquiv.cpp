// singquiv: analyze a quadratic monomial algebra, dump its bimodules, or run
// the invariant suite.
//
//   singquiv analyze <file> [--json]
//   singquiv dump <file> --which M|Y|Z|A|B [--json]
//   singquiv verify <file> [--json]
//
// Exit status: 0 when the run completes (mathematical findings are data),
// 1 for unreadable or malformed input, 2 when an internal invariant fails.

#include "singquiv/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <variant>

namespace {

using namespace singquiv;
using Field = std::variant<PrimeField, RationalField>;

Field parse_field(const std::string& s)
{
    if (s == "rational")
        return RationalField{};
    if (s.rfind("prime:", 0) == 0) {
        const std::string digits = s.substr(6);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
            throw InputError(InputError::Kind::Syntax, "bad prime in --field " + s);
        const unsigned long long p = std::stoull(digits);
        if (p >= (1ull << 31))
            throw InputError(InputError::Kind::Syntax, "prime in --field must be below 2^31");
        try {
            return PrimeField(static_cast<std::uint32_t>(p));
        } catch (const std::invalid_argument& e) {
            throw InputError(InputError::Kind::Syntax, e.what());
        }
    }
    throw InputError(InputError::Kind::Syntax, "--field must be 'rational' or 'prime:<p>'");
}

struct Common {
    std::string file;
    std::string field = "prime:" + std::to_string(PrimeField::kDefaultModulus);
    std::uint64_t seed = AnalysisOptions{}.seed;
    std::size_t max_n = kDefaultMaxLevel;
    std::size_t pd_cap = kDefaultPdCap;
    bool json = false;
    CLI::Option* seed_opt = nullptr;

    /// --seed, then SINGQUIV_SEED, then the built-in default.
    std::uint64_t effective_seed() const
    {
        if (seed_opt && seed_opt->count() > 0)
            return seed;
        if (const char* env = std::getenv("SINGQUIV_SEED")) {
            try {
                std::size_t used = 0;
                const std::uint64_t v = std::stoull(env, &used);
                if (used == std::string(env).size())
                    return v;
            } catch (const std::exception&) {
            }
            throw InputError(InputError::Kind::Syntax, std::string("SINGQUIV_SEED is not an integer: ") + env);
        }
        return seed;
    }
};

void add_common(CLI::App* app, Common& c, bool level_flags)
{
    app->add_option("file", c.file, "algebra description")->required();
    app->add_option("--field", c.field, "rational or prime:<p>");
    c.seed_opt = app->add_option("--seed", c.seed, "random seed (overrides SINGQUIV_SEED)");
    if (level_flags)
        app->add_option("--max-n", c.max_n, "largest level tried by the witness search");
    app->add_option("--pd-cap", c.pd_cap, "syzygy steps before a pd is reported as AtLeast")->check(CLI::PositiveNumber);
    app->add_flag("--json", c.json, "machine-readable output");
}

int run_analyze(const Common& c)
{
    const auto spec = read_spec_file(c.file);
    const auto a = build_from_spec(spec);
    AnalysisOptions opt;
    opt.seed = c.effective_seed();
    opt.max_n = c.max_n;
    opt.pd_cap = c.pd_cap;
    const auto rep = std::visit([&](const auto& k) { return analyze(a, k, opt); }, parse_field(c.field));
    if (c.json)
        std::cout << report_json(spec.name, a, rep).dump(2) << "\n";
    else
        std::cout << report_text(spec.name, a, rep);
    return rep.constructions_ok ? 0 : 2;
}

int run_dump(const Common& c, const std::string& which)
{
    const auto target = parse_dump_target(which);
    const auto a = build_from_spec(read_spec_file(c.file));
    std::visit(
        [&](const auto& k) {
            if (c.json)
                std::cout << dump_json(a, target, k).dump(2) << "\n";
            else
                std::cout << dump_text(a, target, k);
        },
        parse_field(c.field));
    return 0;
}

int run_verify(const Common& c, bool corrupt)
{
    const auto a = build_from_spec(read_spec_file(c.file));
    VerifyOptions opt;
    opt.seed = c.effective_seed();
    opt.pd_cap = c.pd_cap;
    opt.corrupt_M = corrupt;
    const auto checks = std::visit([&](const auto& k) { return run_invariants(a, k, opt); }, parse_field(c.field));
    if (c.json)
        std::cout << checks_json(checks).dump(2) << "\n";
    else
        std::cout << checks_text(checks);
    if (has_failure(checks)) {
        for (const auto& ch : checks)
            if (ch.status == CheckStatus::Fail)
                std::cerr << "violated: " << ch.group << ": " << ch.name
                          << (ch.detail.empty() ? "" : " (" + ch.detail + ")") << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Singular equivalences between quadratic monomial algebras and radical square zero algebras"};
    app.require_subcommand(1);
    Common analyze_c, dump_c, verify_c;
    std::string which;
    bool corrupt = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "report dimensions, pds and the level verdict");
    add_common(analyze_cmd, analyze_c, true);
    auto* dump_cmd = app.add_subcommand("dump", "print a labelled basis with its action matrices");
    add_common(dump_cmd, dump_c, false);
    dump_cmd->add_option("--which", which, "M, Y, Z, A or B")->required();
    auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify_cmd, verify_c, false);
    verify_cmd->add_flag("--corrupt-M", corrupt)->group(""); // negative control for the test suite

    CLI11_PARSE(app, argc, argv);
    try {
        if (*analyze_cmd)
            return run_analyze(analyze_c);
        if (*dump_cmd)
            return run_dump(dump_c, which);
        return run_verify(verify_c, corrupt);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
