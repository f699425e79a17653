// Command-line front end: construction, enumeration, counting, experiments
// and verification. Exit codes: 0 success, 1 verification failure, 2 usage
// or input error.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hompoly/counts.hpp"
#include "hompoly/experiments.hpp"
#include "hompoly/hom.hpp"
#include "hompoly/json_io.hpp"
#include "hompoly/parallel.hpp"
#include "hompoly/verify.hpp"

using namespace hompoly;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Hom-polytopes above this ambient dimension need --allow-large.
constexpr std::size_t kLargeAmbientDim = 15;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct Options
{
    bool json = false;
    bool allow_large = false;
    std::size_t threads = 0;
};

struct PolytopeSpec
{
    PolytopeDescriptor desc;
    Polytope polytope;
};

PolytopeSpec parse_spec(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("polytope spec \"" + text + "\" must look like kind:n or file:PATH");
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    if (kind == "file") {
        try {
            return {{"file", 0, arg}, polytope_from_json(read_json_file(arg))};
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }
    StandardKind k;
    try {
        k = parse_standard_kind(kind);
    } catch (const std::exception&) {
        throw UsageError("unknown polytope kind \"" + kind + "\"");
    }
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        const long v = std::stol(arg, &used);
        if (used != arg.size() || v < 1)
            throw std::invalid_argument(arg);
        n = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError("dimension in \"" + text + "\" must be a positive integer");
    }
    return {{to_string(k), n, {}}, standard(k, n)};
}

std::string spec_label(const PolytopeDescriptor& d)
{
    return d.kind == "file" ? "file:" + d.path : d.kind + ":" + std::to_string(d.n);
}

void guard_size(const HomPolytope& hom, const Options& opt)
{
    if (hom.ambient_dim() > kLargeAmbientDim && !opt.allow_large)
        throw UsageError("Hom lives in R^" + std::to_string(hom.ambient_dim()) +
                         "; exact enumeration at this size can take hours, pass --allow-large to run it");
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

std::string vector_text(const QVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

void print_polytope(const Polytope& p)
{
    std::cout << "ambient dimension " << p.ambient_dim() << ", dimension " << p.dim() << ", "
              << p.vertices().size() << " vertices, " << p.facets().size() << " facets\n";
    for (const auto& v : p.vertices())
        std::cout << "  v " << vector_text(v) << '\n';
    for (const auto& f : p.facets())
        std::cout << "  f " << vector_text(f.normal) << " . x <= " << f.offset.str() << '\n';
    for (const auto& e : p.hrep().equations)
        std::cout << "  e " << vector_text(e.normal) << " . x = " << e.offset.str() << '\n';
}

int cmd_construct(const std::string& source, const std::string& target, const std::string& out, const Options& opt)
{
    const PolytopeSpec s = parse_spec(source), t = parse_spec(target);
    HomPolytope hom = [&] {
        try {
            return build_hom(s.polytope, t.polytope);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    hom.source_desc = s.desc;
    hom.target_desc = t.desc;
    const Json j = to_json(hom);
    if (!out.empty())
        write_json_file(out, j);
    if (opt.json && out.empty()) {
        emit(j);
    } else if (opt.json) {
        emit(Json{{"dimension", hom.ambient_dim()}, {"inequality_count", hom.hrep.inequalities.size()}, {"path", out}});
    } else {
        std::cout << "Hom(" << spec_label(s.desc) << ", " << spec_label(t.desc) << "): "
                  << hom.hrep.inequalities.size() << " inequalities, dimension " << hom.ambient_dim() << '\n';
    }
    return kExitOk;
}

int cmd_vertices(const std::string& path, bool ranks, const std::string& out, const Options& opt)
{
    const HomPolytope hom = [&] {
        try {
            return hom_from_json(read_json_file(path));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    }();
    guard_size(hom, opt);
    const auto maps = enumerate_vertex_maps(hom);
    Json list = Json::array();
    for (const auto& f : maps)
        list.push_back(to_json(f, map_rank(f), true));
    if (!out.empty())
        write_json_file(out, list);

    const auto hist = rank_histogram(maps);
    if (opt.json) {
        Json j{{"count", maps.size()}};
        if (ranks) {
            Json h = Json::object();
            for (const auto& [k, c] : hist)
                h[std::to_string(k)] = c;
            j["ranks"] = h;
        }
        if (out.empty())
            j["maps"] = list;
        emit(j);
    } else {
        std::cout << "vertex maps: " << maps.size() << '\n';
        if (ranks)
            for (const auto& [k, c] : hist)
                std::cout << "rank " << k << ": " << c << '\n';
    }
    return kExitOk;
}

std::size_t enumerate_count(StandardKind s, std::size_t m, StandardKind t, std::size_t n, const Options& opt)
{
    guard_size(build_hom(standard(s, m), standard(t, n)), opt);
    return enumerate_standard_hom(s, m, t, n)->maps.size();
}

HighRankTable table_for(std::size_t m, std::size_t top, bool enumerate, const Options& opt)
{
    HighRankTable table;
    for (std::size_t k = 4; k <= top; ++k) {
        if (!enumerate)
            throw UsageError("the closed form needs #vert^(" + std::to_string(k) +
                             ") from enumeration; pass --enumerate");
        guard_size(build_hom(standard(StandardKind::crosspolytope, m), standard(StandardKind::simplex, k)), opt);
        std::size_t c = 0;
        for (const auto& f : enumerate_standard_hom(StandardKind::crosspolytope, m, StandardKind::simplex, k)->maps)
            c += map_rank(f) == k;
        table[k] = static_cast<unsigned long>(c);
    }
    return table;
}

int cmd_count(const std::string& family, std::size_t m, std::size_t n, bool enumerate, const Options& opt)
{
    using K = StandardKind;
    if (m == 0 || n == 0)
        throw UsageError("count needs m, n >= 1");
    CountReport r;
    K s, t;
    try {
        if (family == "box-simplex") {
            r = count_box_simplex(m, n);
            s = K::cube, t = K::simplex;
        } else if (family == "diamond-simplex") {
            r = count_diamond_simplex(m, n, table_for(m, std::min(m, n), enumerate, opt));
            s = K::crosspolytope, t = K::simplex;
        } else if (family == "diamond-diamond") {
            r = count_diamond_diamond(m, n, table_for(m, std::min(m, n - 1), enumerate, opt));
            s = K::crosspolytope, t = K::crosspolytope;
        } else if (family == "box-diamond") {
            r = count_box_diamond_bound(m, n);
            s = K::cube, t = K::crosspolytope;
        } else {
            throw UsageError("unknown family \"" + family +
                             "\" (box-simplex, diamond-simplex, diamond-diamond, box-diamond)");
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const bool is_bound = family == "box-diamond";
    bool ok = true;
    if (enumerate) {
        const Integer got = static_cast<unsigned long>(enumerate_count(s, m, t, n, opt));
        if (is_bound) {
            r.enumerated = got;
            r.agreement = got >= r.closed_form;
        } else {
            r.set_enumerated(got);
        }
        ok = *r.agreement;
    }
    if (opt.json) {
        Json j = to_json(r);
        if (is_bound) {
            j["kind"] = "lower_bound";
            if (m == 3 && n == 4)
                j["stated_in_prose"] = kStatedBoxDiamondBound34;
        }
        emit(j);
    } else {
        std::cout << r.family << " m=" << m << " n=" << n << ": " << (is_bound ? "lower bound " : "closed form ")
                  << r.closed_form.get_str() << '\n';
        for (const auto& [label, value] : r.terms)
            std::cout << "  " << label << ": " << value.get_str() << '\n';
        if (is_bound && m == 3 && n == 4)
            std::cout << "  stated in prose: " << kStatedBoxDiamondBound34 << '\n';
        if (r.enumerated)
            std::cout << "enumerated " << r.enumerated->get_str() << (ok ? " (consistent)" : " (MISMATCH)") << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

int cmd_beta(std::size_t n, const Options& opt)
{
    if (n == 0 || n > kMaxTupleDimension)
        throw UsageError("beta is available for 1 <= n <= 5");
    if (n == kMaxTupleDimension && !opt.allow_large)
        throw UsageError("beta(5) enumerates about 1.6 million tuples; pass --allow-large");
    const BetaResult r = beta(n);
    if (opt.json)
        emit(Json{{"n", n}, {"beta", r.orbits}, {"tuples", to_json(r.tuples)}, {"free", true}, {"rooted", r.rooted}});
    else
        std::cout << "beta(" << n << ") = " << r.orbits << "  (|V(" << n << ")| = " << r.tuples.get_str() << ")\n";
    return kExitOk;
}

int cmd_sigma(std::size_t m, std::size_t n, const Options& opt)
{
    if (m == 0 || n == 0)
        throw UsageError("sigma needs m, n >= 1");
    const Integer s = sigma(m, n), st = stirling2(m, n), t = surjections(m, n),
                  ie = surjections_inclusion_exclusion(m, n);
    if (opt.json)
        emit(Json{{"m", m}, {"n", n}, {"sigma", to_json(s)}, {"stirling2", to_json(st)}, {"surjections", to_json(t)},
                  {"surjections_inclusion_exclusion", to_json(ie)}});
    else
        std::cout << "sigma(" << m << "," << n << ") = " << s.get_str() << "  S = " << st.get_str()
                  << "  T = " << t.get_str() << "  inclusion-exclusion T = " << ie.get_str() << '\n';
    return t == ie ? kExitOk : kExitFailed;
}

int cmd_table(std::size_t n_min, std::size_t n_max, std::uint64_t seed, const std::string& eps_text, const Options& opt)
{
    Rational eps;
    try {
        eps = Rational::parse(eps_text);
    } catch (const std::exception&) {
        throw UsageError("--eps must be a rational such as 1/1000");
    }
    std::vector<TableRow> rows;
    try {
        rows = reproduce_table(n_min, n_max, seed, eps, opt.threads);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::length_error& e) {
        throw UsageError(e.what());
    }
    if (opt.json) {
        emit(to_json(rows));
        return kExitOk;
    }
    std::cout << std::setw(3) << "n" << std::setw(11) << "perturbed" << std::setw(9) << "random" << std::setw(11)
              << "bound" << std::setw(21) << "percent (approx.)" << '\n';
    for (const auto& r : rows) {
        std::ostringstream pct;
        pct << std::setprecision(4) << r.percentage << " %";
        std::cout << std::setw(3) << r.n << std::setw(11) << r.perturbed << std::setw(9) << r.random << std::setw(11)
                  << r.bound.get_str() << std::setw(21) << pct.str() << '\n';
    }
    return kExitOk;
}

ClaimParams claim_params(const std::string& source, const std::string& target)
{
    const PolytopeSpec s = parse_spec(source), t = parse_spec(target);
    if (s.desc.kind == "file" || t.desc.kind == "file")
        throw UsageError("claims run on standard polytopes only");
    return ClaimParams{parse_standard_kind(s.desc.kind), s.desc.n, parse_standard_kind(t.desc.kind), t.desc.n};
}

int cmd_verify(const std::string& claim, const std::string& suite, const std::string& source,
               const std::string& target, bool list, const Options& opt)
{
    if (list) {
        Json j = Json::array();
        for (const auto& c : claim_registry()) {
            if (opt.json)
                j.push_back(Json{{"id", c.id}, {"statement", c.statement}});
            else
                std::cout << c.id << "  " << c.statement << '\n';
        }
        if (opt.json)
            emit(j);
        return kExitOk;
    }

    std::vector<VerificationResult> results;
    if (!claim.empty()) {
        try {
            find_claim(claim);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::vector<ClaimParams> params;
        if (!source.empty() || !target.empty()) {
            if (source.empty() || target.empty())
                throw UsageError("--source and --target go together");
            params.push_back(claim_params(source, target));
        } else {
            params = find_claim(claim).core;
        }
        for (const auto& p : params) {
            try {
                results.push_back(run_claim(claim, p));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
    } else {
        if (suite != "core" && suite != "extended")
            throw UsageError("--suite must be core or extended");
        if (suite == "extended" && !opt.allow_large)
            throw UsageError("the extended suite runs for a long time; pass --allow-large");
        results = run_suite(suite == "core" ? SuiteLevel::core : SuiteLevel::extended, opt.threads);
    }

    bool all = true;
    Json j = Json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (opt.json) {
            Json e{{"claim_id", r.claim_id},
                   {"parameters", r.params.str()},
                   {"status", r.passed ? "pass" : "fail"},
                   {"detail", r.detail},
                   {"elapsed_seconds", r.elapsed_seconds}};
            if (r.witness)
                e["witness"] = *r.witness;
            j.push_back(e);
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.claim_id << " [" << r.params.str() << "] " << r.detail;
            if (r.witness)
                std::cout << " | witness: " << *r.witness;
            std::cout << '\n';
        }
    }
    if (opt.json)
        emit(j);
    return all ? kExitOk : kExitFailed;
}

int cmd_dual(const std::string& spec, const Options& opt)
{
    const PolytopeSpec s = parse_spec(spec);
    const Polytope d = [&] {
        try {
            return polar_dual(s.polytope);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }();
    if (opt.json)
        emit(to_json(d));
    else
        print_polytope(d);
    return kExitOk;
}

int cmd_intersect(const std::string& a, const std::string& b, const Options& opt)
{
    const PolytopeSpec p = parse_spec(a), q = parse_spec(b);
    if (p.polytope.ambient_dim() != q.polytope.ambient_dim())
        throw UsageError("intersect: ambient dimensions differ");
    const Polytope r = intersect(p.polytope, q.polytope);
    if (opt.json)
        emit(to_json(r));
    else
        print_polytope(r);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact hom-polytopes between simplices, cubes and crosspolytopes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Machine-readable output");
    app.add_flag("--allow-large", opt.allow_large, "Permit long-running exact computations");
    app.add_option("--threads", opt.threads, "Worker threads (default: HOMPOLY_THREADS or all cores)");

    std::string source, target, out, path, family, claim, suite = "core", eps = "1/1000", spec_a, spec_b;
    std::size_t m = 0, n = 0, n_min = 3, n_max = 6;
    std::uint64_t seed = 1;
    bool ranks = false, enumerate = false, list = false;

    auto* construct = app.add_subcommand("construct", "Build Hom(P,Q) and write it as JSON");
    construct->add_option("source", source, "kind:n or file:PATH")->required();
    construct->add_option("target", target, "kind:n or file:PATH")->required();
    construct->add_option("-o,--out", out, "Output file");

    auto* vertices = app.add_subcommand("vertices", "Enumerate the vertex maps of a Hom JSON file");
    vertices->add_option("hom", path, "Hom JSON written by construct")->required();
    vertices->add_flag("--ranks", ranks, "Print the rank histogram");
    vertices->add_option("-o,--out", out, "Write the maps as JSON");

    auto* count = app.add_subcommand("count", "Closed-form vertex counts");
    count->add_option("family", family, "box-simplex | diamond-simplex | diamond-diamond | box-diamond")->required();
    count->add_option("m", m, "Source dimension")->required();
    count->add_option("n", n, "Target dimension")->required();
    count->add_flag("--enumerate", enumerate, "Cross-check against enumeration");

    auto* beta_cmd = app.add_subcommand("beta", "Orbit count of the hyperoctahedral group on V(n)");
    beta_cmd->add_option("n", n)->required();

    auto* sigma_cmd = app.add_subcommand("sigma", "Signed surjection count sigma(m,n)");
    sigma_cmd->add_option("m", m)->required();
    sigma_cmd->add_option("n", n)->required();

    auto* table = app.add_subcommand("table", "Vertex counts of symmetric simplex intersections");
    table->add_option("n_min", n_min)->required();
    table->add_option("n_max", n_max)->required();
    table->add_option("--seed", seed, "Generator seed; row n uses seed + n");
    table->add_option("--eps", eps, "Perturbation size as a rational");

    auto* verify = app.add_subcommand("verify", "Run registered claims");
    verify->add_option("claim", claim, "Claim id (omit to run a suite)");
    verify->add_option("--suite", suite, "core | extended");
    verify->add_option("--source", source, "Source spec for a single claim instance");
    verify->add_option("--target", target, "Target spec for a single claim instance");
    verify->add_flag("--list", list, "List the registered claims");

    auto* dual = app.add_subcommand("dual", "Polar dual of a polytope");
    dual->add_option("polytope", spec_a, "kind:n or file:PATH")->required();

    auto* inter = app.add_subcommand("intersect", "Intersection of two polytopes");
    inter->add_option("first", spec_a)->required();
    inter->add_option("second", spec_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (opt.threads == 0)
        opt.threads = default_threads();

    try {
        if (*construct)
            return cmd_construct(source, target, out, opt);
        if (*vertices)
            return cmd_vertices(path, ranks, out, opt);
        if (*count)
            return cmd_count(family, m, n, enumerate, opt);
        if (*beta_cmd)
            return cmd_beta(n, opt);
        if (*sigma_cmd)
            return cmd_sigma(m, n, opt);
        if (*table)
            return cmd_table(n_min, n_max, seed, eps, opt);
        if (*verify)
            return cmd_verify(claim, suite, source, target, list, opt);
        if (*dual)
            return cmd_dual(spec_a, opt);
        if (*inter)
            return cmd_intersect(spec_a, spec_b, opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
