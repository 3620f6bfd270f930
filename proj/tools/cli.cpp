#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "msp/error.hpp"
#include "msp/io.hpp"
#include "msp/reduction.hpp"
#include "msp/solver.hpp"
#include "msp/uniqueness.hpp"

namespace msp::cli {

namespace {

struct Options
{
    std::uint64_t seed = 1;
    std::uint64_t cap = 100'000'000;
    unsigned threads = 1;

    std::string kappa_text;
    std::string code_a;
    std::string code_b;

    std::string instance_path;
    std::string graph_path;
    std::string mode = "backtrack";
    bool all = false;
    std::size_t limit = 1000;

    std::size_t cover_size = 0;
    bool compact = false;
    std::string output_path;

    std::size_t max_n = 0;
    std::size_t random_graphs = 0;
    std::size_t max_vertices = 7;
};

SolveOptions solve_options(const Options& o)
{
    SolveOptions s;
    s.mode = o.mode == "exhaustive" ? SolveMode::Exhaustive : SolveMode::Backtrack;
    s.exhaustive_cap = o.cap;
    s.threads = std::max(1u, o.threads);
    return s;
}

ReductionVariant variant_of(const Options& o)
{
    return o.compact ? ReductionVariant::Compact : ReductionVariant::Standard;
}

std::string join(const std::set<Vertex>& vertices)
{
    std::ostringstream s;
    bool first = true;
    for (Vertex v : vertices) {
        if (!first)
            s << ' ';
        s << v;
        first = false;
    }
    return s.str();
}

int cmd_score(const Options& o, std::ostream& out)
{
    const auto kappa = io::parse_code(o.kappa_text);
    if (kappa.length() != 1)
        throw InvalidInput("--kappa takes a single integer");
    const Palette palette(kappa[0]);
    const Code x = io::parse_code(o.code_a);
    const Code y = io::parse_code(o.code_b);
    out << score(x, y, palette).to_string() << '\n';
    return kYes;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto instance = io::parse_instance(io::read_file(o.instance_path));
    const auto options = solve_options(o);
    if (o.all) {
        const auto found = enumerate_all(instance, o.limit, options);
        if (found.solutions.empty()) {
            out << "UNSAT\n";
            return kNo;
        }
        for (const auto& code : found.solutions)
            out << code.to_string() << '\n';
        if (found.truncated)
            err << "note: stopped after " << o.limit << " solutions\n";
        return kYes;
    }
    const auto outcome = solve(instance, options);
    if (!outcome.satisfiable) {
        out << "UNSAT\n";
        return kNo;
    }
    out << outcome.witness->to_string() << '\n';
    return kYes;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const auto instance = io::parse_instance(io::read_file(o.instance_path));
    const bool ok = verify(instance, io::parse_code(o.code_a));
    out << (ok ? "VALID" : "INVALID") << '\n';
    return ok ? kYes : kNo;
}

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto graph = io::parse_graph(io::read_file(o.graph_path));
    const auto artifact = reduce(graph, o.cover_size, variant_of(o));
    const auto text = io::serialize_instance(artifact.instance);
    std::ostringstream summary;
    summary << "kappa " << artifact.instance.kappa() << '\n'
            << "length " << artifact.instance.length() << '\n'
            << "guesses " << artifact.instance.guesses().size() << '\n';
    if (o.output_path.empty()) {
        out << text;
        err << summary.str();
    } else {
        std::ofstream file(o.output_path, std::ios::binary);
        if (!file || !(file << text))
            throw InvalidInput("cannot write '" + o.output_path + "'");
        out << summary.str();
    }
    return kYes;
}

int cmd_extract(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto graph = io::parse_graph(io::read_file(o.graph_path));
    const auto artifact = reduce(graph, o.cover_size, variant_of(o));
    const auto instance = io::parse_instance(io::read_file(o.instance_path));
    if (!(instance == artifact.instance))
        throw InvalidInput("instance file is not the reduction of this graph with cover size " +
                           std::to_string(o.cover_size));
    const Code witness = io::parse_code(o.code_a);
    if (!verify(instance, witness)) {
        err << "witness does not satisfy the instance\n";
        out << "INVALID\n";
        return kNo;
    }
    out << join(extract_cover(artifact, witness)) << '\n';
    return kYes;
}

int cmd_unique(const Options& o, std::ostream& out)
{
    const auto instance = io::parse_instance(io::read_file(o.instance_path));
    const auto report = is_unique(instance, solve_options(o));
    if (!report.satisfiable)
        out << "UNSAT\n";
    else
        out << (report.unique ? "UNIQUE" : "NOT-UNIQUE") << '\n';
    out << "followups " << report.followups_tried << '\n';
    return report.unique ? kYes : kNo;
}

// One reduce -> solve -> extract pass. Returns "SAT", "UNSAT", "BAD" (a
// witness that does not map back to a cover) or "-" (variant not applicable).
std::string reduce_and_solve(const Graph& graph, std::size_t n, ReductionVariant variant,
                             const SolveOptions& options)
{
    if (variant == ReductionVariant::Compact && n == 1 && graph.vertex_count() == 1)
        return "-";
    const auto artifact = reduce(graph, n, variant);
    const auto outcome = solve(artifact.instance, options);
    if (!outcome.satisfiable)
        return "UNSAT";
    if (!verify(artifact.instance, *outcome.witness))
        return "BAD";
    const auto cover = extract_cover(artifact, *outcome.witness);
    return cover.size() == n && graph.is_cover(cover) ? "SAT" : "BAD";
}

std::size_t roundtrip_table(const std::string& label, const Graph& graph, std::size_t max_n,
                            const SolveOptions& options, std::ostream& out)
{
    out << "# " << label << ": " << graph.vertex_count() << " vertices, " << graph.edge_count()
        << " edges\n";
    out << std::left << std::setw(4) << "n" << std::setw(8) << "cover" << std::setw(10)
        << "standard" << std::setw(10) << "compact" << "agree\n";
    std::size_t disagreements = 0;
    const std::size_t top = std::min(max_n == 0 ? graph.vertex_count() : max_n,
                                     graph.vertex_count());
    for (std::size_t n = 1; n <= top; ++n) {
        const bool truth = brute_force_vertex_cover(graph, n);
        const auto standard = reduce_and_solve(graph, n, ReductionVariant::Standard, options);
        const auto compact = reduce_and_solve(graph, n, ReductionVariant::Compact, options);
        const std::string expected = truth ? "SAT" : "UNSAT";
        const bool agree = standard == expected && (compact == "-" || compact == expected);
        if (!agree)
            ++disagreements;
        out << std::setw(4) << n << std::setw(8) << (truth ? "yes" : "no") << std::setw(10)
            << standard << std::setw(10) << compact << (agree ? "yes" : "NO") << '\n';
    }
    return disagreements;
}

Graph random_graph(std::size_t max_vertices, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> nv(1, std::max<std::size_t>(1, max_vertices));
    std::bernoulli_distribution coin(0.5);
    const std::size_t v = nv(rng);
    std::vector<Graph::Edge> edges;
    for (Vertex a = 1; a <= v; ++a)
        for (Vertex b = a + 1; b <= v; ++b)
            if (coin(rng))
                edges.emplace_back(a, b);
    return Graph(v, std::move(edges));
}

int cmd_roundtrip(const Options& o, std::ostream& out)
{
    const auto options = solve_options(o);
    std::size_t disagreements = 0;
    if (!o.graph_path.empty()) {
        const auto graph = io::parse_graph(io::read_file(o.graph_path));
        disagreements += roundtrip_table(o.graph_path, graph, o.max_n, options, out);
    }
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.random_graphs; ++i) {
        const auto graph = random_graph(o.max_vertices, rng);
        disagreements += roundtrip_table("random " + std::to_string(i + 1), graph, o.max_n,
                                         options, out);
    }
    out << "disagreements " << disagreements << '\n';
    return disagreements == 0 ? kYes : kNo;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Mastermind satisfiability toolkit", "msp"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--seed", o.seed, "Seed for randomized graph generation");
    app.add_option("--cap", o.cap, "Largest kappa^length the exhaustive engine will walk")
        ->check(CLI::PositiveNumber);
    app.add_option("--threads", o.threads, "Worker threads for the backtracking engine")
        ->check(CLI::PositiveNumber);

    auto* score_cmd = app.add_subcommand("score", "Print the black/white score of two codes");
    score_cmd->add_option("--kappa", o.kappa_text, "Number of colors")->required();
    score_cmd->add_option("code1", o.code_a, "First code, e.g. \"1 2 3 4\"")->required();
    score_cmd->add_option("code2", o.code_b, "Second code")->required();

    auto* solve_cmd = app.add_subcommand("solve", "Find a solution, or report UNSAT");
    solve_cmd->add_option("instance", o.instance_path, "Instance file")->required();
    solve_cmd->add_option("--mode", o.mode, "Search engine")
        ->check(CLI::IsMember({"exhaustive", "backtrack"}));
    solve_cmd->add_flag("--all", o.all, "Print every solution in lexicographic order");
    solve_cmd->add_option("--limit", o.limit, "Maximum solutions printed with --all")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate solution");
    verify_cmd->add_option("instance", o.instance_path, "Instance file")->required();
    verify_cmd->add_option("code", o.code_a, "Candidate code")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a vertex-cover question to an instance");
    reduce_cmd->add_option("graph", o.graph_path, "Graph file")->required();
    reduce_cmd->add_option("--cover-size", o.cover_size, "Cover size n")->required();
    reduce_cmd->add_flag("--compact", o.compact, "Use length 3 + #V + #E");
    reduce_cmd->add_option("-o,--output", o.output_path, "Write the instance here");

    auto* extract_cmd = app.add_subcommand("extract", "Map a witness back to a vertex cover");
    extract_cmd->add_option("graph", o.graph_path, "Graph file")->required();
    extract_cmd->add_option("--cover-size", o.cover_size, "Cover size n")->required();
    extract_cmd->add_flag("--compact", o.compact, "Instance uses the compact reduction");
    extract_cmd->add_option("instance", o.instance_path, "Reduced instance file")->required();
    extract_cmd->add_option("witness", o.code_a, "Witness code")->required();

    auto* unique_cmd = app.add_subcommand("unique", "Decide whether the solution is unique");
    unique_cmd->add_option("instance", o.instance_path, "Instance file")->required();

    auto* roundtrip_cmd = app.add_subcommand(
        "roundtrip", "Compare reduce/solve/extract against brute-force vertex cover");
    roundtrip_cmd->add_option("graph", o.graph_path, "Graph file");
    roundtrip_cmd->add_option("--max-n", o.max_n, "Largest cover size to test (default #V)");
    roundtrip_cmd->add_option("--random", o.random_graphs, "Also test this many random graphs");
    roundtrip_cmd->add_option("--max-vertices", o.max_vertices, "Vertex bound for random graphs")
        ->check(CLI::Range(1, static_cast<int>(kBruteForceVertexLimit)));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kYes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kYes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (roundtrip_cmd->parsed() && o.graph_path.empty() && o.random_graphs == 0) {
        err << "error: roundtrip needs a graph file or --random\n";
        return kUsage;
    }

    try {
        if (score_cmd->parsed())
            return cmd_score(o, out);
        if (solve_cmd->parsed())
            return cmd_solve(o, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(o, out);
        if (reduce_cmd->parsed())
            return cmd_reduce(o, out, err);
        if (extract_cmd->parsed())
            return cmd_extract(o, out, err);
        if (unique_cmd->parsed())
            return cmd_unique(o, out);
        if (roundtrip_cmd->parsed())
            return cmd_roundtrip(o, out);
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace msp::cli
