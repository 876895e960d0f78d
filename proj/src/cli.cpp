#include "radstat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "radstat/centrality.hpp"
#include "radstat/enumerate.hpp"
#include "radstat/extremal.hpp"
#include "radstat/serialize.hpp"
#include "radstat/spanning.hpp"
#include "radstat/transform.hpp"
#include "radstat/verify.hpp"

namespace radstat {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::optional<std::string> edges;
    std::string output;
    std::string format;
    std::optional<int> n;
    std::optional<int> k;
    int variant = 0;
    bool variant_set = false;
    std::string family;
    std::string theorem = "all";
    std::optional<int> max_n;
    std::uint64_t seed = 1;
    int jobs = 1;
    int graphs_per_order = 1000;
    bool no_timing = false;
    bool bounds = false;
    std::optional<int> leaf;
    std::optional<int> target;
    std::optional<int> centroid_vertex;
    std::string mode;
    std::string preserve = "radius";
    std::string mutation = "none";
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Graph text from --edges ("u v;u v", as printed in counterexamples) or from
// the --input file.
std::string read_graph_text(const Options& o) {
    if (o.edges) {
        std::string text = *o.edges;
        std::replace(text.begin(), text.end(), ';', '\n');
        return text;
    }
    if (o.input.empty()) throw UsageError("one of --input or --edges is required");
    return read_input(o.input);
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw IoError("cannot open output file '" + o.output + "'");
    file << text;
}

std::string render_graph(const Graph& g, const std::string& format) {
    return format == "dot" ? to_dot(g) : to_edge_list(g);
}

Json edges_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return edges;
}

int require(const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required flag ") + flag);
    return *v;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    Graph g = parse_edge_list(read_graph_text(o));
    if (o.format != "json") {
        emit(o, out, render_graph(g, o.format));
        return kExitOk;
    }
    Json j = to_json(analyze(g));
    if (o.bounds) j["bounds"] = to_json(graph_bounds_check(g));
    emit(o, out, dump(j));
    return kExitOk;
}

int cmd_construct(const Options& o, std::ostream& out) {
    auto family = parse_family(o.family);
    if (!family) throw UsageError("unknown family '" + o.family + "'");
    FamilySpec spec{*family, require(o.n, "--n"), require(o.k, "--k"), o.variant};
    if (!o.variant_set) {
        if (spec.family == Family::Comet) spec.variant = (spec.n - spec.k + 1) / 2;
        if (spec.family == Family::CStar) spec.variant = 0;
    }
    Tree t = build(spec);
    if (o.format != "json") {
        emit(o, out, render_graph(t, o.format));
        return kExitOk;
    }
    Json j;
    j["family"] = std::string(family_name(spec.family));
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["variant"] = spec.variant;
    j["edges"] = edges_json(t);
    j["report"] = to_json(analyze(t));
    emit(o, out, dump(j));
    return kExitOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
    Tree t = parse_tree(read_graph_text(o));
    const Status before = graph_status(t).status;
    Json j;
    std::optional<Tree> result;
    if (!o.mode.empty()) {
        if (o.leaf || o.target) throw UsageError("--mode cannot be combined with --leaf/--target");
        auto opt = o.mode == "minimize" ? minimize_status(t) : maximize_status(t);
        j["mode"] = o.mode;
        j["status_before"] = before;
        j["status_after"] = graph_status(opt.tree).status;
        j["trace"] = to_json(opt.trace);
        j["edges"] = edges_json(opt.tree);
        result = std::move(opt.tree);
    } else {
        RelocationMove m{require(o.leaf, "--leaf"), require(o.target, "--target")};
        validate_move(t, m);
        Vertex x = o.centroid_vertex ? *o.centroid_vertex : centroid(t).front();
        RelocationAnalyzer an(t, x);
        auto pred = an.predict(m);
        Tree after = relocate_leaf(t, m);
        j["mode"] = "move";
        j["b"] = m.leaf;
        j["u"] = m.target;
        j["centroid_vertex"] = x;
        j["predicted_centroid"] = pred.vertex;
        j["case_tag"] = std::string(case_name(pred.case_tag));
        j["delta_status"] = an.status_delta(m);
        j["status_before"] = before;
        j["status_after"] = graph_status(after).status;
        j["centroid_after"] = centroid(after);
        j["edges"] = edges_json(after);
        result = std::move(after);
    }
    emit(o, out, o.format == "json" ? dump(j) : render_graph(*result, o.format));
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.n && o.max_n) throw UsageError("use either --n or --max-n");
    if (!o.n && !o.max_n) throw UsageError("missing required flag --n or --max-n");
    const int lo = o.n ? *o.n : 1;
    const int hi = o.n ? *o.n : *o.max_n;
    if (lo < 1) throw Error(Errc::InvalidParams, "order must be at least 1");
    if (o.format == "edges") {
        std::string text;
        for (int n = lo; n <= hi; ++n) {
            FreeTreeGenerator gen(n);
            while (auto t = gen.next()) text += to_edge_line(*t) + "\n";
        }
        emit(o, out, text);
        return kExitOk;
    }
    std::vector<std::pair<int, std::uint64_t>> counts;
    for (int n = lo; n <= hi; ++n) {
        FreeTreeGenerator gen(n);
        std::uint64_t c = 0;
        while (gen.next()) ++c;
        counts.emplace_back(n, c);
    }
    if (o.format == "json") {
        Json arr = Json::array();
        for (auto [n, c] : counts) arr.push_back({{"n", n}, {"count", c}});
        emit(o, out, dump(arr));
    } else {
        std::string text;
        for (auto [n, c] : counts) text += std::to_string(n) + " " + std::to_string(c) + "\n";
        emit(o, out, text);
    }
    return kExitOk;
}

int cmd_spanning(const Options& o, std::ostream& out) {
    auto p = parse_preserved(o.preserve);
    if (!p) throw UsageError("unknown preservation target '" + o.preserve + "'");
    Graph g = parse_edge_list(read_graph_text(o));
    auto cert = spanning_tree(g, *p);
    if (o.format != "json") {
        emit(o, out, render_graph(cert.tree, o.format));
        return kExitOk;
    }
    Json j = to_json(cert);
    j["graph"] = {{"radius", radius(g).radius}, {"status", graph_status(g).status}, {"max_degree", max_degree(g)}};
    emit(o, out, dump(j));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    static const std::map<std::string, Mutation> mutations = {
        {"none", Mutation::None},
        {"radius-upper", Mutation::RadiusUpperOffByOne},
        {"status-lower", Mutation::StatusLowerOffByOne},
        {"prediction", Mutation::PredictionIgnoresMove},
    };
    VerifyOptions vo;
    vo.n_max = o.max_n.value_or(10);
    vo.seed = o.seed;
    vo.jobs = o.jobs;
    vo.graphs_per_order = o.graphs_per_order;
    vo.mutation = mutations.at(o.mutation);
    std::vector<VerificationReport> reports;
    std::string name = o.theorem;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (name == "all") {
        reports = verify_all(vo);
    } else {
        auto id = parse_theorem(o.theorem);
        if (!id) throw UsageError("unknown theorem '" + o.theorem + "'");
        reports.push_back(verify(*id, vo));
    }
    emit(o, out, dump(to_json(reports, !o.no_timing)));
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
    return ok ? kExitOk : kExitCounterexample;
}

void add_output(CLI::App* sub, Options& o) {
    sub->add_option("--output,-o", o.output, "Write the result to PATH instead of standard output");
}

void add_input(CLI::App* sub, Options& o) {
    auto* file = sub->add_option("--input,-i", o.input, "Edge-list file, '-' for standard input");
    sub->add_option("--edges", o.edges, "Inline edge list \"u v;u v;...\"")->excludes(file);
}

// The first choice is the default, applied after parsing since all
// subcommands share one Options.
void add_format(CLI::App* sub, Options& o, const std::vector<std::string>& choices) {
    sub->add_option("--format,-f", o.format, "Output format")
        ->check(CLI::IsMember(choices))
        ->default_str(choices.front());
}

void default_format(Options& o, const char* format) {
    if (o.format.empty()) o.format = format;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    CLI::App app{"Radius, status and centroid tools for trees and connected graphs", "radstat"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "Status, radius, medians, center and centroid");
    add_input(analyze_cmd, o);
    add_format(analyze_cmd, o, {"json", "dot", "edges"});
    analyze_cmd->add_flag("--bounds", o.bounds, "Include the bound checks against B(n,k) and S(n,k)");
    add_output(analyze_cmd, o);

    auto* construct_cmd = app.add_subcommand("construct", "Build a member of an extremal family");
    construct_cmd->add_option("--family", o.family, "balanced, comet, scomet or cstar")->required();
    construct_cmd->add_option("--n", o.n, "Order")->required();
    construct_cmd->add_option("--k", o.k, "Maximum degree")->required();
    construct_cmd
        ->add_option_function<int>(
            "--variant",
            [&](int v) {
                o.variant = v;
                o.variant_set = true;
            },
            "Balanced layout index, comet hub position or C* attachment vertex")
        ->check(CLI::NonNegativeNumber);
    add_format(construct_cmd, o, {"edges", "dot", "json"});
    add_output(construct_cmd, o);

    auto* transform_cmd = app.add_subcommand("transform", "Relocate a leaf or run the status optimizers");
    add_input(transform_cmd, o);
    transform_cmd->add_option("--leaf,-b", o.leaf, "Leaf to move");
    transform_cmd->add_option("--target,-u", o.target, "New neighbor of the leaf");
    transform_cmd->add_option("--centroid", o.centroid_vertex, "Centroid vertex used for the prediction");
    transform_cmd->add_option("--mode", o.mode, "Run an optimizer instead of a single move")
        ->check(CLI::IsMember({"minimize", "maximize"}));
    add_format(transform_cmd, o, {"json", "dot", "edges"});
    add_output(transform_cmd, o);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Non-isomorphic free trees");
    enumerate_cmd->add_option("--n", o.n, "Single order");
    enumerate_cmd->add_option("--max-n", o.max_n, "Every order from 1 to this one");
    add_format(enumerate_cmd, o, {"count", "edges", "json"});
    add_output(enumerate_cmd, o);

    auto* spanning_cmd = app.add_subcommand("spanning", "Spanning tree keeping radius, status or maximum degree");
    add_input(spanning_cmd, o);
    spanning_cmd->add_option("--preserve", o.preserve, "radius, status or maxdegree")
        ->check(CLI::IsMember({"radius", "status", "maxdegree"}))
        ->capture_default_str();
    add_format(spanning_cmd, o, {"json", "dot", "edges"});
    add_output(spanning_cmd, o);

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of the bounds and characterizations");
    verify_cmd->add_option("--theorem", o.theorem, "Theorem name or 'all'")->capture_default_str();
    verify_cmd->add_option("--max-n", o.max_n, "Largest order checked (default 10)")
        ->check(CLI::Range(1, kMaxEnumerationOrder));
    verify_cmd->add_option("--seed", o.seed, "Seed for the random graph sweeps")->capture_default_str();
    verify_cmd->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--graphs-per-order", o.graphs_per_order, "Random graphs per order")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify_cmd->add_flag("--no-timing", o.no_timing, "Leave elapsed_ms out of the report");
    verify_cmd->add_option("--mutation", o.mutation, "Inject a known fault into the checks")
        ->check(CLI::IsMember({"none", "radius-upper", "status-lower", "prediction"}))
        ->capture_default_str();
    add_output(verify_cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (analyze_cmd->parsed()) return default_format(o, "json"), cmd_analyze(o, out);
        if (construct_cmd->parsed()) return default_format(o, "edges"), cmd_construct(o, out);
        if (transform_cmd->parsed()) return default_format(o, "json"), cmd_transform(o, out);
        if (enumerate_cmd->parsed()) return default_format(o, "count"), cmd_enumerate(o, out);
        if (spanning_cmd->parsed()) return default_format(o, "json"), cmd_spanning(o, out);
        if (verify_cmd->parsed()) return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsage;
}

}  // namespace radstat
