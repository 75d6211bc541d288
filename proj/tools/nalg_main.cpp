// nalg: exact computations in finitely generated free algebras of
// identity-defined varieties, their graded dimensions, identity-consequence
// checks, derived (commutator / anti-commutator) algebras, and bundled
// reproduction suites.

#include "nalg/bases.hpp"
#include "nalg/checks.hpp"
#include "nalg/derived.hpp"
#include "nalg/parser.hpp"
#include "nalg/polarize.hpp"
#include "nalg/variety.hpp"
#include "nalg/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nalg::Engine;
using nalg::Error;
using nalg::MultiDegree;
using nalg::Variety;
using ordered_json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct GlobalOpts {
    int threads = 1;
    int max_degree = 6;
    std::string registry_path;
    std::string json_path;
    std::string cache_dir;
    std::string timings_path;
    int alphabet = 0;
};

std::vector<nalg::VarietyDef> load_registry(const GlobalOpts& g)
{
    std::vector<nalg::VarietyDef> defs;
    if (!g.registry_path.empty()) {
        std::ifstream in(g.registry_path);
        if (!in)
            throw Error("cannot open registry file '" + g.registry_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        defs = nalg::parse_variety_file(ss.str());
    }
    return defs;
}

Variety find_variety(const GlobalOpts& g, const std::string& name)
{
    for (const auto& def : load_registry(g))
        if (def.name == name)
            return Variety::from_def(def);
    return Variety::builtin(name);
}

void guard_degree(const GlobalOpts& g, int degree)
{
    if (degree > g.max_degree)
        throw Error("degree " + std::to_string(degree) + " exceeds the --max-degree guard (" +
                    std::to_string(g.max_degree) +
                    "); raise the guard explicitly if this size is intended");
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write '" + path + "'");
    return out;
}

std::uint64_t fnv64(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// ---- dim ----------------------------------------------------------------

int cmd_dim(const GlobalOpts& g, const std::string& variety_name, const std::string& mdeg_text,
            bool multilinear, bool with_basis)
{
    Variety v = find_variety(g, variety_name);
    MultiDegree d = multilinear ? MultiDegree::multilinear(std::stoi(mdeg_text))
                                : MultiDegree::parse(mdeg_text);
    guard_degree(g, d.degree());
    if (g.alphabet > 0 && d.width() > g.alphabet)
        throw Error("multidegree uses " + std::to_string(d.width()) +
                    " letters but --alphabet is " + std::to_string(g.alphabet));

    nalg::ComponentReport rep;
    bool from_cache = false;
    std::filesystem::path cache_file;
    if (!g.cache_dir.empty()) {
        std::ostringstream key;
        key << nalg::engine_version << "|" << v.content_hash() << "|" << d.to_string() << "|"
            << (with_basis ? "b" : "-");
        std::filesystem::create_directories(g.cache_dir);
        std::ostringstream name;
        name << std::hex << fnv64(key.str()) << ".json";
        cache_file = std::filesystem::path(g.cache_dir) / name.str();
        std::ifstream in(cache_file);
        if (in) {
            std::string line;
            std::getline(in, line);
            auto j = ordered_json::parse(line, nullptr, false);
            if (!j.is_discarded() && j.value("engine", "") == nalg::engine_version) {
                rep.variety = j["variety"].get<std::string>();
                rep.d = MultiDegree(j["multidegree"].get<std::vector<int>>());
                rep.total = j["total"].get<std::size_t>();
                rep.rank = j["rank"].get<std::size_t>();
                rep.dimension = j["dimension"].get<std::size_t>();
                if (j.contains("basis"))
                    rep.basis = j["basis"].get<std::vector<std::string>>();
                from_cache = true;
            }
        }
    }
    if (!from_cache) {
        Engine eng(g.threads);
        rep = eng.dimension(v, d, with_basis);
        if (!cache_file.empty()) {
            auto out = open_out(cache_file.string());
            out << rep.to_json() << "\n";
        }
    }
    std::cout << rep.to_text() << "\n";
    if (!g.json_path.empty()) {
        auto out = open_out(g.json_path);
        out << rep.to_json() << "\n";
    }
    return exit_ok;
}

// ---- check --------------------------------------------------------------

int cmd_check(const GlobalOpts& g, const std::string& variety_name, const std::string& text)
{
    Variety v = find_variety(g, variety_name);
    nalg::Identity id = nalg::parse_identity(text);
    guard_degree(g, id.poly.is_zero() ? 0 : id.poly.terms().begin()->first.degree());
    std::vector<nalg::Identity> pieces =
        id.multilinear ? std::vector<nalg::Identity>{id} : nalg::linearize(id);

    Engine eng(g.threads);
    bool all_hold = true;
    ordered_json jr;
    jr["schema"] = 1;
    jr["engine"] = nalg::engine_version;
    jr["command"] = "check";
    jr["variety"] = v.name();
    jr["identity"] = text;
    auto pieces_json = ordered_json::array();
    for (const auto& piece : pieces) {
        if (piece.poly.is_zero())
            continue;
        guard_degree(g, piece.poly.terms().begin()->first.degree());
        auto out = eng.is_consequence(v, piece);
        ordered_json pj;
        pj["piece"] = piece.render();
        pj["status"] = out.holds ? "pass" : "fail";
        if (!out.holds) {
            pj["residue"] = out.residue.render();
            std::cout << "fail: " << piece.render() << "\n      residue: " << out.residue.render()
                      << "\n";
            all_hold = false;
        } else {
            std::cout << "pass: " << piece.render() << "\n";
        }
        pieces_json.push_back(std::move(pj));
    }
    jr["pieces"] = std::move(pieces_json);
    jr["status"] = all_hold ? "pass" : "fail";
    std::cout << (all_hold ? "PASS" : "FAIL") << "\n";
    if (!g.json_path.empty()) {
        auto out = open_out(g.json_path);
        out << jr.dump() << "\n";
    }
    return all_hold ? exit_ok : exit_check_failed;
}

// ---- derived ------------------------------------------------------------

std::vector<nalg::Identity> resolve_candidates(const std::string& spec, nalg::SugarMode mode)
{
    std::vector<nalg::Identity> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty())
            continue;
        bool is_name = false;
        for (const auto& ni : nalg::builtin_identities())
            if (ni.name == token)
                is_name = true;
        if (is_name) {
            for (auto& id : nalg::resolve_identity_name(token, mode))
                out.push_back(std::move(id));
            continue;
        }
        std::ifstream in(token);
        if (!in)
            throw Error("'" + token + "' is neither a known identity name nor a readable file");
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            out.push_back(nalg::parse_identity(line, mode,
                                               token + ":" + std::to_string(++n)));
        }
    }
    if (out.empty())
        throw Error("no candidate identities given");
    return out;
}

int cmd_derived(const GlobalOpts& g, const std::string& host_name, const std::string& sign_text,
                int degree, const std::string& candidates)
{
    guard_degree(g, degree);
    Variety host = find_variety(g, host_name);
    nalg::Sign sign = nalg::sign_from_string(sign_text);
    Engine eng(g.threads);
    MultiDegree d = MultiDegree::multilinear(degree);

    if (candidates.empty()) {
        nalg::KernelSpace ks = nalg::derived_kernel(eng, host, sign, d);
        auto rendered = nalg::render_kernel_basis(ks, sign);
        std::cout << "host " << host.name() << ", sign " << nalg::to_string(sign)
                  << ", multilinear degree " << degree << ":\n"
                  << "  magma monomials " << ks.total() << ", evaluation rank " << ks.eval_rank
                  << ", kernel dimension " << ks.kernel_dimension() << "\n";
        const std::size_t show = std::min<std::size_t>(rendered.size(), 25);
        for (std::size_t i = 0; i < show; ++i)
            std::cout << "  " << rendered[i] << "\n";
        if (show < rendered.size())
            std::cout << "  ... (" << (rendered.size() - show) << " more)\n";
        if (!g.json_path.empty()) {
            ordered_json j;
            j["schema"] = 1;
            j["engine"] = nalg::engine_version;
            j["command"] = "derived-kernel";
            j["host"] = host.name();
            j["sign"] = nalg::to_string(sign);
            j["degree"] = degree;
            j["total"] = ks.total();
            j["evaluation_rank"] = ks.eval_rank;
            j["kernel_dimension"] = ks.kernel_dimension();
            j["basis"] = rendered;
            auto out = open_out(g.json_path);
            out << j.dump() << "\n";
        }
        return exit_ok;
    }

    auto cands = resolve_candidates(candidates, nalg::SugarMode::bracket_as_product);
    auto out = nalg::generates_all(eng, cands, host, sign, d);
    std::cout << "host " << host.name() << ", sign " << nalg::to_string(sign)
              << ", multilinear degree " << degree << ":\n"
              << "  candidates are identities: " << (out.candidates_hold ? "yes" : "NO") << "\n"
              << "  kernel dimension " << out.kernel_dim << ", candidate consequence dimension "
              << out.closure_dim << "\n"
              << "  generates: " << (out.generates ? "true" : "false") << " (gap " << out.gap()
              << ")\n";
    if (!g.json_path.empty()) {
        ordered_json j;
        j["schema"] = 1;
        j["engine"] = nalg::engine_version;
        j["command"] = "derived-generates";
        j["host"] = host.name();
        j["sign"] = nalg::to_string(sign);
        j["degree"] = degree;
        j["candidates_hold"] = out.candidates_hold;
        j["kernel_dimension"] = out.kernel_dim;
        j["closure_dimension"] = out.closure_dim;
        j["generates"] = out.generates;
        auto o = open_out(g.json_path);
        o << j.dump() << "\n";
    }
    return out.generates ? exit_ok : exit_check_failed;
}

// ---- repro --------------------------------------------------------------

int cmd_repro(const GlobalOpts& g, std::vector<std::string> suites, bool all)
{
    if (all) {
        suites = {"paper-sec2", "paper-sec3", "paper-sec4"};
    }
    if (suites.empty())
        throw Error("no suite given; use a suite name or --all");
    // Validate names before running anything.
    for (const auto& s : suites)
        (void)nalg::builtin_suite(s);

    Engine eng(g.threads);
    std::ofstream json_out, timings_out;
    if (!g.json_path.empty())
        json_out = open_out(g.json_path);
    if (!g.timings_path.empty())
        timings_out = open_out(g.timings_path);

    int pass = 0, failed = 0, errored = 0;
    for (const auto& name : suites) {
        const auto& suite = nalg::builtin_suite(name);
        nalg::RunReport rep = nalg::run_suite(eng, suite, &std::cout);
        pass += rep.passed();
        failed += rep.failed();
        errored += rep.errored();
        for (const auto& rec : rep.records) {
            if (json_out.is_open())
                json_out << nalg::record_json(rec) << "\n";
            if (timings_out.is_open())
                timings_out << rec.suite << "/" << rec.name << " " << rec.millis << "\n";
        }
    }
    std::cout << "summary: " << pass << " passed, " << failed << " failed, " << errored
              << " errored\n";
    if (json_out.is_open()) {
        ordered_json j;
        j["schema"] = 1;
        j["engine"] = nalg::engine_version;
        j["summary"] = {{"pass", pass}, {"fail", failed}, {"error", errored}};
        json_out << j.dump() << "\n";
    }
    return (failed == 0 && errored == 0) ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact computations in free algebras of identity-defined varieties"};
    app.set_version_flag("--version", std::string(nalg::engine_version));
    app.require_subcommand(1);
    // global flags remain valid after the subcommand name
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--threads", g.threads, "worker threads (never changes numeric output)")
        ->capture_default_str();
    app.add_option("--max-degree", g.max_degree, "degree guard for component computations")
        ->capture_default_str();
    app.add_option("--registry", g.registry_path, "extra variety definitions (DSL file)");
    app.add_option("--json", g.json_path, "write line-delimited machine records to this file");
    app.add_option("--cache", g.cache_dir, "component-report cache directory");
    app.add_option("--alphabet", g.alphabet, "alphabet size sanity bound");

    auto* dim = app.add_subcommand("dim", "dimension of one graded component");
    std::string dim_variety, dim_mdeg;
    bool dim_multilinear = false, dim_basis = false;
    dim->add_option("variety", dim_variety, "variety name")->required();
    dim->add_option("multidegree", dim_mdeg, "multidegree d1,d2,... (or a degree with --multilinear)")
        ->required();
    dim->add_flag("--multilinear", dim_multilinear, "interpret the argument as a degree n, use (1,...,1)");
    dim->add_flag("--basis", dim_basis, "include the canonical quotient basis");

    auto* check = app.add_subcommand("check", "decide whether an identity follows from a variety");
    std::string check_variety, check_text;
    check->add_option("variety", check_variety, "variety name")->required();
    check->add_option("identity", check_text, "identity in the DSL, e.g. \"(a*b)*c = (a*c)*b\"")
        ->required();

    auto* derived = app.add_subcommand("derived", "kernel / generation analysis of derived algebras");
    std::string der_host, der_sign, der_candidates;
    int der_degree = 0;
    derived->add_option("host", der_host, "host variety")->required();
    derived->add_option("sign", der_sign, "minus (commutator) or plus (anti-commutator)")
        ->required();
    derived->add_option("degree", der_degree, "multilinear degree")->required();
    derived->add_option("--candidates", der_candidates,
                        "comma-separated identity names and/or files; verdict mode");

    auto* repro = app.add_subcommand("repro", "run bundled reproduction suites");
    std::vector<std::string> repro_suites;
    bool repro_all = false;
    repro->add_option("suites", repro_suites, "suite names (paper-sec2, paper-sec3, paper-sec4, smoke)");
    repro->add_flag("--all", repro_all, "run the three reproduction suites");
    repro->add_option("--timings", g.timings_path, "write per-check timings to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*dim)
            return cmd_dim(g, dim_variety, dim_mdeg, dim_multilinear, dim_basis);
        if (*check)
            return cmd_check(g, check_variety, check_text);
        if (*derived)
            return cmd_derived(g, der_host, der_sign, der_degree, der_candidates);
        if (*repro)
            return cmd_repro(g, repro_suites, repro_all);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
