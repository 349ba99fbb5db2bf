// Command-line front end: model emission, f/h/gamma tables, verification
// suites, and shaving-sequence certificates. All JSON on stdout (or --out)
// is byte-deterministic; timings and diagnostics go to stderr.

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flagpoly/building_set.hpp"
#include "flagpoly/canonical.hpp"
#include "flagpoly/cliques.hpp"
#include "flagpoly/errors.hpp"
#include "flagpoly/json_io.hpp"
#include "flagpoly/polygon.hpp"
#include "flagpoly/surgery.hpp"
#include "flagpoly/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace flagpoly;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kStructure = 3;
constexpr int kBudget = 4;
constexpr int kVerdict = 5;

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::SimplicityViolation:
        case ErrorKind::NotPalindromic:
        case ErrorKind::NotFlag: return kStructure;
        case ErrorKind::StepBudget: return kBudget;
        case ErrorKind::SearchFailed: return kVerdict;
        default: return kUsage;
    }
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void log_time(const std::string& what, double seconds) {
    std::cerr << "[time] " << what << ": " << std::fixed << std::setprecision(3) << seconds
              << "s\n";
}

// ---------------------------------------------------------------- cache ----

// A pure memo: canonical forms, f-vectors, and finished certificates keyed
// by content digests. Hits must never change any output byte.
struct Cache {
    std::string dir;

    bool enabled() const { return !dir.empty(); }

    std::optional<Json> get(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        const auto path = std::filesystem::path(dir) / (key + ".json");
        std::error_code ec;
        if (!std::filesystem::exists(path, ec)) return std::nullopt;
        try {
            return load_json_file(path.string());
        } catch (const Error&) {
            return std::nullopt; // unreadable entries are treated as misses
        }
    }

    void put(const std::string& key, const Json& value) const {
        if (!enabled()) return;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        try {
            write_json_file((std::filesystem::path(dir) / (key + ".json")).string(), value);
        } catch (const Error& e) {
            std::cerr << "warning: cache write failed: " << e.what() << "\n";
        }
    }
};

std::string graph_digest(const CompatibilityGraph& g) {
    return stable_digest(graph_to_json(g));
}

FVector cached_f_vector(const Cache& cache, const CompatibilityGraph& g) {
    const std::string key = "f-" + graph_digest(g);
    if (auto hit = cache.get(key)) {
        FVector fv;
        fv.n = (*hit).at("n").get<int>();
        fv.f = (*hit).at("f").get<std::vector<std::int64_t>>();
        return fv;
    }
    FVector fv = clique_f_vector(g);
    cache.put(key, Json{{"n", fv.n}, {"f", fv.f}});
    return fv;
}

std::string cached_canonical(const Cache& cache, const CompatibilityGraph& g) {
    const std::string key = "c-" + graph_digest(g);
    if (auto hit = cache.get(key)) return (*hit).at("canonical").get<std::string>();
    std::string cert = canonical_form(g);
    cache.put(key, Json{{"canonical", cert}});
    return cert;
}

// ---------------------------------------------------------- model specs ----

CompatibilityGraph cube_graph(int k) {
    CompatibilityGraph g = build_type_a(0); // the point
    for (int i = 0; i < k; ++i) g = prism(g);
    return g;
}

bool parse_ranked(const std::string& spec, const std::string& prefix, int& rank) {
    if (spec.size() <= prefix.size() || spec.compare(0, prefix.size(), prefix) != 0) return false;
    for (std::size_t i = prefix.size(); i < spec.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(spec[i]))) return false;
    rank = std::stoi(spec.substr(prefix.size()));
    return true;
}

// A<k>, D<k>, cube<k>, prism:<spec>, nestohedron:<file>, or a graph JSON
// file path.
CompatibilityGraph model_from_spec(const std::string& spec) {
    if (spec.rfind("prism:", 0) == 0) return prism(model_from_spec(spec.substr(6)));
    if (spec.rfind("nestohedron:", 0) == 0)
        return nestohedron_graph(building_set_from_json(load_json_file(spec.substr(12))));
    int rank = 0;
    if (parse_ranked(spec, "A", rank)) return build_type_a(rank);
    if (parse_ranked(spec, "D", rank)) return build_type_d(rank);
    if (parse_ranked(spec, "Cy", rank)) {
        if (rank < 2) throw Error(ErrorKind::InvalidRank, "cyclohedron rank must be >= 2");
        return nestohedron_graph(cycle_building_set(rank + 1));
    }
    if (parse_ranked(spec, "cube", rank)) return cube_graph(rank);
    if (std::filesystem::exists(spec)) return graph_from_json(load_json_file(spec));
    throw Error(ErrorKind::BadInput,
                "unrecognized model spec '" + spec +
                    "' (expected A<k>, D<k>, Cy<k>, cube<k>, prism:<spec>, nestohedron:<file>, "
                    "or a graph JSON file)");
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::BadInput, "cannot write " + out_path);
    out << text;
}

// ---------------------------------------------------------- subcommands ----

int cmd_model(const std::string& family, const std::string& arg, const std::string& out_path) {
    Timer t;
    std::string spec = family;
    if (!arg.empty()) {
        if (family == "A" || family == "D" || family == "Cy" || family == "cube")
            spec = family + arg;
        else if (family == "nestohedron")
            spec = "nestohedron:" + arg;
        else
            throw Error(ErrorKind::BadInput, "family '" + family + "' takes no argument");
    }
    CompatibilityGraph g = model_from_spec(spec);
    emit_text(dump_json(graph_to_json(g)), out_path);
    log_time("model " + spec, t.elapsed());
    return kOk;
}

int cmd_vectors(const Cache& cache, const std::string& graph_path, const std::string& model_spec,
                const std::string& format, const std::string& out_path) {
    Timer t;
    if (graph_path.empty() == model_spec.empty())
        throw Error(ErrorKind::BadInput, "pass exactly one of --graph and --model");
    CompatibilityGraph g = graph_path.empty() ? model_from_spec(model_spec)
                                              : graph_from_json(load_json_file(graph_path));
    FVector fv = cached_f_vector(cache, g);
    IntPolynomial h = f_to_h(fv);
    IntPolynomial gamma = h_to_gamma(h, fv.n);

    std::string text;
    if (format == "csv") {
        std::ostringstream os;
        os << "name";
        for (int i = 0; i <= fv.n; ++i) os << ",c" << i;
        os << "\nf";
        for (std::int64_t c : fv.f) os << "," << c;
        os << "\nh";
        for (int i = 0; i <= fv.n; ++i) os << "," << h.coeff(i);
        os << "\ngamma";
        for (int i = 0; i <= fv.n / 2; ++i) os << "," << gamma.coeff(i);
        os << "\n";
        text = os.str();
    } else if (format == "json") {
        Json j{{"dimension", fv.n},
               {"f", fv.f},
               {"h", h.coeffs()},
               {"gamma", gamma.coeffs()},
               {"model_digest", graph_digest(g)},
               {"tool_version", version_string}};
        text = dump_json(j);
    } else {
        throw Error(ErrorKind::BadInput, "--format must be csv or json");
    }
    emit_text(text, out_path);
    log_time("vectors", t.elapsed());
    return kOk;
}

struct Instance {
    std::string name;
    bool pass = false;
    Json details;
};

struct VerifyRun {
    std::string claim;
    Json parameters = Json::object();
    std::vector<Instance> instances;

    void add(const std::string& name, bool pass, Json details, double seconds) {
        instances.push_back({name, pass, std::move(details)});
        log_time(name, seconds);
    }

    bool overall() const {
        for (const Instance& i : instances)
            if (!i.pass) return false;
        return true;
    }

    Json report(bool with_timings_placeholder = false) const {
        (void)with_timings_placeholder;
        Json arr = Json::array();
        for (const Instance& i : instances)
            arr.push_back(Json{{"instance", i.name},
                               {"verdict", i.pass ? "pass" : "fail"},
                               {"details", i.details}});
        return Json{{"claim", claim},
                    {"tool_version", version_string},
                    {"parameters", parameters},
                    {"instances", arr},
                    {"overall", overall() ? "pass" : "fail"}};
    }
};

Json tally_to_json(const FacetTypeTally& t) {
    Json arr = Json::array();
    for (const auto& [key, count] : t.counts)
        arr.push_back(Json{{"type", t.names.at(key)}, {"count", count}});
    return arr;
}

CompatibilityGraph family_model(const std::string& family, int rank) {
    if (family == "A") return build_type_a(rank);
    if (family == "D") return build_type_d(rank);
    if (family == "Cy") return nestohedron_graph(cycle_building_set(rank + 1));
    throw Error(ErrorKind::BadInput, "unknown family '" + family + "'");
}

// Per-family default rank windows for the desk-scale sweeps.
std::vector<std::pair<std::string, std::pair<int, int>>> family_ranges(const std::string& family,
                                                                       int min_rank, int max_rank) {
    std::vector<std::pair<std::string, std::pair<int, int>>> out;
    auto push = [&](const std::string& f, int lo, int hi) {
        if (min_rank > 0) lo = min_rank;
        if (max_rank > 0) hi = max_rank;
        if (lo <= hi) out.emplace_back(f, std::make_pair(lo, hi));
    };
    if (family == "all" || family == "A") push("A", 2, 7);
    if (family == "all" || family == "D") push("D", 2, 6);
    if (family == "all" || family == "Cy") push("Cy", 2, 6);
    if (out.empty()) throw Error(ErrorKind::BadInput, "unknown family '" + family + "'");
    return out;
}

void run_gal(VerifyRun& run, const Cache& cache, const std::string& family, int min_rank,
             int max_rank) {
    for (const auto& [fam, range] : family_ranges(family, min_rank, max_rank))
        for (int n = range.first; n <= range.second; ++n) {
            Timer t;
            CompatibilityGraph g = family_model(fam, n);
            IntPolynomial gamma = h_to_gamma(f_to_h(cached_f_vector(cache, g)), n);
            run.add(fam + std::to_string(n) + " gamma", gal_check(gamma),
                    Json{{"gamma", gamma.coeffs()}}, t.elapsed());
        }
}

void run_dehn_sommerville(VerifyRun& run, const Cache& cache, const std::string& family,
                          int min_rank, int max_rank) {
    for (const auto& [fam, range] : family_ranges(family, min_rank, max_rank))
        for (int n = range.first; n <= range.second; ++n) {
            Timer t;
            CompatibilityGraph g = family_model(fam, n);
            IntPolynomial h = f_to_h(cached_f_vector(cache, g));
            run.add(fam + std::to_string(n) + " h palindromic", is_palindromic(h, n),
                    Json{{"h", h.coeffs()}}, t.elapsed());
        }
}

void run_prop1(VerifyRun& run, int min_rank, int max_rank) {
    if (min_rank <= 0) min_rank = 4;
    if (max_rank <= 0) max_rank = 5;
    for (int n = min_rank; n <= max_rank; ++n) {
        Timer t;
        Prop1Report r = verify_proposition1(n);
        Json details{{"expected", tally_to_json(r.expected)}, {"actual", tally_to_json(r.actual)}};
        if (!r.match) details["mismatch"] = r.mismatch;
        run.add("facet census D" + std::to_string(n), r.match, std::move(details), t.elapsed());
    }
}

void run_prop2(VerifyRun& run, const std::string& family, int min_rank, int max_rank) {
    const bool both = family == "all";
    if (both || family == "D") {
        int lo = min_rank > 0 ? min_rank : 4, hi = max_rank > 0 ? max_rank : 6;
        for (int n = lo; n <= hi; ++n) {
            Timer t;
            auto cert = non_nestohedron_certificate(build_type_d(n));
            Json details{{"fired", cert.has_value()}};
            if (cert) {
                details["indecomposable_facets"] = cert->indecomposable_facets;
                details["required"] = cert->required;
            }
            run.add("D" + std::to_string(n) + " non-nestohedron", cert.has_value(),
                    std::move(details), t.elapsed());
        }
    }
    if (both || family == "A") {
        int lo = min_rank > 0 ? min_rank : 2, hi = max_rank > 0 ? max_rank : 6;
        for (int n = lo; n <= hi; ++n) {
            Timer t;
            auto cert = non_nestohedron_certificate(build_type_a(n));
            run.add("A" + std::to_string(n) + " certificate absent", !cert.has_value(),
                    Json{{"fired", cert.has_value()}}, t.elapsed());
        }
    }
}

void run_thm2(VerifyRun& run, int rank, double budget_seconds) {
    if (rank <= 0) rank = 4;
    Timer t;
    Thm2Report r = verify_theorem2(rank, budget_seconds);
    CompatibilityGraph source = prism(build_type_d(rank - 1));
    Json details{{"strategy", r.strategy_used},
                 {"steps", int(r.steps.size())},
                 {"certificate",
                  certificate_to_json(source, r.steps, r.target_canonical, r.gamma_trace)}};
    if (!r.note.empty()) details["note"] = r.note;
    std::cerr << "[stats] nodes=" << r.stats.nodes << " memo_hits=" << r.stats.memo_hits
              << " pruned=" << r.stats.pruned << "\n";
    run.add("prism(D" + std::to_string(rank - 1) + ") -> D" + std::to_string(rank), r.success,
            std::move(details), t.elapsed());
}

void run_nestohedron_cross(VerifyRun& run, int max_rank, int max_ground) {
    if (max_rank <= 0) max_rank = 5;
    if (max_ground <= 0) max_ground = 4;
    if (max_ground > 5)
        throw Error(ErrorKind::BadInput, "the exhaustive sweep supports --max-ground <= 5");
    for (int k = 1; k <= max_rank; ++k) {
        Timer t;
        bool same = canonical_form(nestohedron_graph(path_building_set(k + 1))) ==
                    canonical_form(build_type_a(k));
        run.add("path building set = As^" + std::to_string(k), same, Json::object(), t.elapsed());
    }
    for (int ground = 2; ground <= max_ground; ++ground) {
        Timer t;
        std::int64_t sets = 0, flag_sets = 0, facets = 0, bad = 0;
        enumerate_connected_building_sets(ground, [&](const BuildingSet& b) {
            ++sets;
            if (!flagness_check(b)) return;
            ++flag_sets;
            CompatibilityGraph g = nestohedron_graph(b);
            const int n = g.dimension();
            auto per_vertex = clique_counts_per_vertex(g.adjacency());
            auto terms = boundary_formula(b);
            for (std::size_t f = 0; f < terms.size(); ++f) {
                ++facets;
                std::vector<std::int64_t> face_f(std::size_t(n), 0);
                for (int i = 0; i < n; ++i) face_f[std::size_t(i)] = per_vertex[f][std::size_t(n - i)];
                IntPolynomial lhs{std::move(face_f)};
                IntPolynomial rhs =
                    f_polynomial(nested_complex_f_vector(terms[f].restricted.b)) *
                    f_polynomial(nested_complex_f_vector(terms[f].contracted.b));
                if (lhs != rhs) ++bad;
            }
        });
        run.add("facet decomposition, ground " + std::to_string(ground), bad == 0,
                Json{{"building_sets", sets},
                     {"flag_building_sets", flag_sets},
                     {"facets_checked", facets},
                     {"mismatches", bad}},
                t.elapsed());
    }
}

int cmd_verify(const Cache& cache, const std::string& claim, const std::string& family,
               int min_rank, int max_rank, int rank, int max_ground, double budget_seconds,
               const std::string& out_path) {
    Timer t;
    VerifyRun run;
    run.claim = claim;
    run.parameters["family"] = family;
    if (min_rank > 0) run.parameters["min_rank"] = min_rank;
    if (max_rank > 0) run.parameters["max_rank"] = max_rank;
    if (rank > 0) run.parameters["rank"] = rank;
    if (claim == "nestohedron-cross") run.parameters["max_ground"] = max_ground > 0 ? max_ground : 4;

    if (claim == "gal")
        run_gal(run, cache, family, min_rank, max_rank);
    else if (claim == "dehn-sommerville")
        run_dehn_sommerville(run, cache, family, min_rank, max_rank);
    else if (claim == "prop1")
        run_prop1(run, min_rank, max_rank);
    else if (claim == "prop2")
        run_prop2(run, family, min_rank, max_rank);
    else if (claim == "thm2")
        run_thm2(run, rank, budget_seconds);
    else if (claim == "nestohedron-cross")
        run_nestohedron_cross(run, max_rank, max_ground);
    else
        throw Error(ErrorKind::BadInput,
                    "unknown claim '" + claim +
                        "' (gal, dehn-sommerville, prop1, prop2, thm2, nestohedron-cross)");

    emit_text(dump_json(run.report()), out_path);
    log_time("verify " + claim, t.elapsed());
    return run.overall() ? kOk : kVerdict;
}

int cmd_shave(const std::string& graph_path, const std::string& model_spec,
              const std::vector<int>& edge, const std::string& out_path) {
    Timer t;
    if (graph_path.empty() == model_spec.empty())
        throw Error(ErrorKind::BadInput, "pass exactly one of --graph and --model");
    CompatibilityGraph g = graph_path.empty() ? model_from_spec(model_spec)
                                              : graph_from_json(load_json_file(graph_path));
    CompatibilityGraph out = shave(g, edge.at(0), edge.at(1));
    emit_text(dump_json(graph_to_json(out)), out_path);
    log_time("shave", t.elapsed());
    return kOk;
}

int cmd_find_sequence(const Cache& cache, const std::string& source_spec,
                      const std::string& target_spec, int max_steps, const std::string& strategy,
                      double budget_seconds, const std::string& out_path) {
    Timer t;
    CompatibilityGraph source = model_from_spec(source_spec);
    CompatibilityGraph target = model_from_spec(target_spec);
    if (max_steps < 0)
        max_steps = int(std::max<std::int64_t>(
            0, std::int64_t(target.size()) - std::int64_t(source.size())));
    if (strategy != "guided" && strategy != "full")
        throw Error(ErrorKind::BadInput, "--strategy must be guided or full");

    // Finished certificates are pure functions of (source, target, strategy,
    // step cap); the budget only decides whether we get to finish.
    const std::string cache_key =
        "seq-" + stable_digest(Json{{"source", graph_to_json(source)},
                                    {"target", graph_to_json(target)},
                                    {"strategy", strategy},
                                    {"max_steps", max_steps}});
    if (auto hit = cache.get(cache_key)) {
        emit_text(dump_json(*hit), out_path);
        log_time("find-sequence (cached)", t.elapsed());
        return kOk;
    }

    SearchStats stats;
    std::optional<std::vector<ShaveStep>> seq;
    try {
        seq = find_shaving_sequence(source, target, max_steps,
                                    strategy == "guided" ? SearchStrategy::Guided
                                                         : SearchStrategy::Full,
                                    budget_seconds, &stats);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::StepBudget)
            std::cerr << "[stats] nodes=" << stats.nodes << " memo_hits=" << stats.memo_hits
                      << " pruned=" << stats.pruned << " seconds=" << std::fixed
                      << std::setprecision(3) << stats.seconds << "\n";
        throw;
    }
    std::cerr << "[stats] nodes=" << stats.nodes << " memo_hits=" << stats.memo_hits
              << " pruned=" << stats.pruned << "\n";
    if (!seq) {
        std::cerr << "error: no shaving sequence exists within " << max_steps << " steps\n";
        return kVerdict;
    }

    // Replay to collect the gamma trace for the certificate.
    std::vector<IntPolynomial> trace;
    CompatibilityGraph g = source;
    trace.push_back(graph_gamma_polynomial(g));
    for (const ShaveStep& st : *seq) {
        g = shave(g, st.f1, st.f2);
        trace.push_back(graph_gamma_polynomial(g));
    }
    Json cert = certificate_to_json(source, *seq, cached_canonical(cache, g), trace);
    cache.put(cache_key, cert);
    emit_text(dump_json(cert), out_path);
    log_time("find-sequence", t.elapsed());
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for flag simple polytopes via facet compatibility graphs"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    int threads = 0;
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--threads", threads, "cap OpenMP worker threads (0 = library default)");
    app.add_option("--cache", cache_dir, "cache directory for canonical forms and f-vectors");
    app.add_flag("--no-cache", no_cache, "disable the cache even if FLAGPOLY_CACHE is set");

    auto* mdl = app.add_subcommand("model", "emit a compatibility graph as JSON");
    std::string mdl_family, mdl_arg, mdl_out;
    mdl->add_option("family", mdl_family,
                    "A|D|Cy|cube (with rank argument), nestohedron (with file), or a compact "
                    "spec like A3, prism:D3")
        ->required();
    mdl->add_option("arg", mdl_arg, "rank, or building-set JSON for nestohedron");
    mdl->add_option("--out", mdl_out, "write JSON here instead of stdout");

    auto* vec = app.add_subcommand("vectors", "f-, h-, and gamma-vectors of a graph");
    std::string vec_graph, vec_model, vec_format = "csv", vec_out;
    vec->add_option("--graph", vec_graph, "graph JSON file");
    vec->add_option("--model", vec_model, "model spec (alternative to --graph)");
    vec->add_option("--format", vec_format, "csv or json (default csv)");
    vec->add_option("--out", vec_out, "write here instead of stdout");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_claim, ver_family = "all", ver_out;
    int ver_min_rank = 0, ver_max_rank = 0, ver_rank = 0, ver_max_ground = 0;
    double ver_budget = 300.0;
    ver->add_option("claim", ver_claim,
                    "gal | dehn-sommerville | prop1 | prop2 | thm2 | nestohedron-cross")
        ->required();
    ver->add_option("--family", ver_family, "A, D, Cy, or all (default all)");
    ver->add_option("--min-rank", ver_min_rank, "lowest rank to check");
    ver->add_option("--max-rank", ver_max_rank, "highest rank to check");
    ver->add_option("--rank", ver_rank, "single rank (thm2)");
    ver->add_option("--max-ground", ver_max_ground,
                    "largest ground size for nestohedron-cross (default 4, max 5)");
    ver->add_option("--budget-seconds", ver_budget, "search budget for thm2 (default 300)");
    ver->add_option("--out", ver_out, "write the JSON report here instead of stdout");

    auto* shv = app.add_subcommand("shave", "cut one codimension-2 face");
    std::string shv_graph, shv_model, shv_out;
    std::vector<int> shv_edge;
    shv->add_option("--graph", shv_graph, "graph JSON file");
    shv->add_option("--model", shv_model, "model spec (alternative to --graph)");
    shv->add_option("--edge", shv_edge, "two adjacent facet indices")->expected(2)->required();
    shv->add_option("--out", shv_out, "write JSON here instead of stdout");

    auto* fnd = app.add_subcommand("find-sequence", "search for a shaving sequence");
    std::string fnd_source, fnd_target, fnd_strategy = "guided", fnd_out;
    int fnd_max_steps = -1;
    double fnd_budget = 300.0;
    fnd->add_option("--source", fnd_source, "source model spec or graph JSON")->required();
    fnd->add_option("--target", fnd_target, "target model spec or graph JSON")->required();
    fnd->add_option("--max-steps", fnd_max_steps, "step cap (default: facet-count difference)");
    fnd->add_option("--strategy", fnd_strategy, "guided (default) or full");
    fnd->add_option("--budget-seconds", fnd_budget, "wall-clock budget (default 300)");
    fnd->add_option("--out", fnd_out, "write the certificate here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints help or the parse error
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif

    Cache cache;
    if (!no_cache) {
        if (!cache_dir.empty())
            cache.dir = cache_dir;
        else if (const char* env = std::getenv("FLAGPOLY_CACHE"))
            cache.dir = env;
    }

    try {
        if (mdl->parsed()) return cmd_model(mdl_family, mdl_arg, mdl_out);
        if (vec->parsed()) return cmd_vectors(cache, vec_graph, vec_model, vec_format, vec_out);
        if (ver->parsed())
            return cmd_verify(cache, ver_claim, ver_family, ver_min_rank, ver_max_rank, ver_rank,
                              ver_max_ground, ver_budget, ver_out);
        if (shv->parsed()) return cmd_shave(shv_graph, shv_model, shv_edge, shv_out);
        if (fnd->parsed())
            return cmd_find_sequence(cache, fnd_source, fnd_target, fnd_max_steps, fnd_strategy,
                                     fnd_budget, fnd_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
