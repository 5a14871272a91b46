#include "algpath/cli.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "algpath/automata.hpp"
#include "algpath/errors.hpp"
#include "algpath/graph_io.hpp"
#include "algpath/path_count.hpp"
#include "algpath/path_enum.hpp"
#include "algpath/relations.hpp"
#include "algpath/shortest_paths.hpp"
#include "algpath/subwords.hpp"

namespace algpath::cli {

using nlohmann::json;

namespace {

// The gap digraph for subwords has n vertices and counting is O(n^3) exact
// arithmetic; this keeps worst-case runs at desk scale.
constexpr std::uint64_t max_subword_n = 1000;

struct io_opts {
    std::string input = "-";
    std::string format = "auto";
    std::string output = "text";
    std::uint64_t max_input_bytes = 64ull << 20;
};

struct cli_state {
    std::istream& in;
    std::ostream& out;
    io_opts io = {};

    std::vector<std::pair<std::string, std::string>> path_queries = {};

    std::uint64_t max_n = 12;
    std::uint64_t max_paths_per_cell = 100000;

    std::uint64_t n = 0;
    std::string word = {};
    std::string gaps_text = {};
    bool list = false;
    bool with_singletons = false;
};

std::string read_stream(std::istream& s, std::uint64_t max_bytes) {
    std::string data;
    char buffer[1 << 16];
    for (;;) {
        s.read(buffer, sizeof buffer);
        data.append(buffer, static_cast<std::size_t>(s.gcount()));
        if (data.size() > max_bytes)
            throw error(errc::input_too_large,
                        "input exceeds " + std::to_string(max_bytes) +
                            " bytes (see --max-input-bytes)");
        if (!s) break;
    }
    return data;
}

std::string read_input(const cli_state& st) {
    if (st.io.input == "-") return read_stream(st.in, st.io.max_input_bytes);
    std::ifstream file(st.io.input, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + st.io.input + "'");
    return read_stream(file, st.io.max_input_bytes);
}

graph_document load_graph(const cli_state& st) {
    const std::string text = read_input(st);
    graph_format format = graph_format::edge_list;
    if (st.io.format == "auto")
        format = detect_graph_format(text);
    else if (st.io.format == "json")
        format = graph_format::json;
    return parse_graph(text, format);
}

render_mode mode_of(const io_opts& io) {
    return io.output == "json" ? render_mode::json : render_mode::text;
}

void add_output_option(CLI::App& sub, io_opts& io) {
    sub.add_option("--output", io.output, "output mode (text|json)")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

void add_input_options(CLI::App& sub, io_opts& io, bool with_format) {
    sub.add_option("input", io.input, "input file ('-' reads stdin)")
        ->capture_default_str();
    if (with_format)
        sub.add_option("--format", io.format,
                       "input format (auto|edge-list|json)")
            ->check(CLI::IsMember({"auto", "edge-list", "json"}))
            ->capture_default_str();
    add_output_option(sub, io);
    sub.add_option("--max-input-bytes", io.max_input_bytes,
                   "upper bound on input size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::string format_cost(double v) {
    if (std::floor(v) == v && std::abs(v) <= 9007199254740992.0)
        return std::to_string(static_cast<long long>(v));
    char buffer[32];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
    (void)ec;
    return std::string(buffer, end);
}

json cost_to_json(const distance& d) {
    if (d.is_unreachable()) return nullptr;
    const double v = d.value();
    if (std::floor(v) == v && std::abs(v) <= 9007199254740992.0)
        return static_cast<std::int64_t>(v);
    return v;
}

// Distance grid plus the reconstructed routes requested via --path, in
// flag order. With JSON output and any queries the shape becomes
// {"distances": rows, "paths": [{from,to,vertices,cost}...]}.
void emit_routes(const cli_state& st, const graph_document& doc,
                 const apsp_result& r) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queries;
    for (const auto& [from, to] : st.path_queries) {
        const auto i = doc.vertex_index(from);
        if (!i)
            throw error(errc::unknown_vertex, "unknown vertex '" + from + "'");
        const auto j = doc.vertex_index(to);
        if (!j)
            throw error(errc::unknown_vertex, "unknown vertex '" + to + "'");
        queries.emplace_back(*i, *j);
    }

    const render_mode mode = mode_of(st.io);
    if (mode == render_mode::json && !queries.empty()) {
        json result{
            {"distances",
             json::parse(render(r.dist, doc.vertices, render_mode::json))},
            {"paths", json::array()}};
        for (const auto& [i, j] : queries) {
            json entry{{"from", doc.vertices[i]},
                       {"to", doc.vertices[j]},
                       {"vertices", json::array()},
                       {"cost", nullptr}};
            const auto path = reconstruct_path(r.next, i, j);
            if (!path.empty()) {
                entry["cost"] = cost_to_json(r.dist(i, j));
                for (std::uint32_t v : path)
                    entry["vertices"].push_back(doc.vertices[v]);
            }
            result["paths"].push_back(std::move(entry));
        }
        st.out << result.dump() << '\n';
        return;
    }

    st.out << render(r.dist, doc.vertices, mode);
    if (mode == render_mode::text) {
        for (const auto& [i, j] : queries) {
            st.out << "path " << doc.vertices[i] << " -> " << doc.vertices[j]
                   << ": ";
            const auto path = reconstruct_path(r.next, i, j);
            if (path.empty()) {
                st.out << "unreachable\n";
                continue;
            }
            for (std::size_t k = 0; k < path.size(); ++k)
                st.out << (k ? " " : "") << doc.vertices[path[k]];
            st.out << " (cost " << format_cost(r.dist(i, j).value()) << ")\n";
        }
    }
}

void check_distinct_letters(const std::string& word) {
    std::array<bool, 256> seen{};
    for (unsigned char c : word) {
        if (seen[c])
            throw error(errc::not_rainbow, std::string("letter '") +
                                               static_cast<char>(c) +
                                               "' repeats in '" + word + "'");
        seen[c] = true;
    }
}

void run_subwords(const cli_state& st) {
    if (st.word.empty() && st.n == 0)
        throw CLI::ValidationError("subwords",
                                   "one of --n or --word is required");
    if (!st.word.empty() && st.n != 0 && st.word.size() != st.n)
        throw CLI::ValidationError("subwords",
                                   "--word length differs from --n");

    std::string word = st.word;
    if (!word.empty()) check_distinct_letters(word);
    const std::uint64_t n = word.empty() ? st.n : word.size();
    if (n > max_subword_n)
        throw error(errc::too_many_vertices,
                    "n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(max_subword_n));
    if (st.list && word.empty()) {
        if (n > 26)
            throw CLI::ValidationError(
                "subwords", "--list needs --word when --n exceeds 26");
        for (std::uint64_t i = 0; i < n; ++i)
            word += static_cast<char>('a' + i);
    }

    const gap_set gaps = parse_gaps(st.gaps_text);
    const complexity_report report =
        m_complexity(static_cast<std::size_t>(n), gaps);
    std::optional<std::vector<std::string>> listing;
    if (st.list) {
        const auto words =
            enumerate_m_subwords(word, gaps, st.with_singletons);
        listing.emplace(words.begin(), words.end());
    }
    st.out << render(report, listing, mode_of(st.io));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
    CLI::App app{"algebraic path computations: one closure kernel, many "
                 "semirings",
                 "algpath"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "algpath 1.0.0");

    cli_state st{in, out};

    CLI::App* closure = app.add_subcommand(
        "closure", "boolean transitive closure of a digraph");
    add_input_options(*closure, st.io, true);
    closure->callback([&st] {
        const graph_document doc = load_graph(st);
        st.out << render(transitive_closure(to_relation_matrix(doc)),
                         doc.vertices, mode_of(st.io));
    });

    CLI::App* shortest = app.add_subcommand(
        "shortest", "all-pairs shortest distances (unweighted arcs cost 1)");
    add_input_options(*shortest, st.io, true);
    shortest->add_option("--path", st.path_queries,
                         "FROM TO: append one reconstructed route "
                         "(repeatable)");
    shortest->callback([&st] {
        const graph_document doc = load_graph(st);
        emit_routes(st, doc, floyd_warshall(to_distance_matrix(doc)));
    });

    CLI::App* longest = app.add_subcommand(
        "longest", "all-pairs longest distances of an acyclic digraph");
    add_input_options(*longest, st.io, true);
    longest->add_option("--path", st.path_queries,
                        "FROM TO: append one reconstructed route "
                        "(repeatable)");
    longest->callback([&st] {
        const graph_document doc = load_graph(st);
        emit_routes(st, doc, longest_paths_dag_routes(to_distance_matrix(doc)));
    });

    CLI::App* count = app.add_subcommand(
        "count", "exact path counts of an acyclic digraph");
    add_input_options(*count, st.io, true);
    count->callback([&st] {
        const graph_document doc = load_graph(st);
        st.out << render(count_paths(to_relation_matrix(doc)), doc.vertices,
                         mode_of(st.io));
    });

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "all simple paths between every vertex pair");
    add_input_options(*enumerate, st.io, true);
    enumerate->add_option("--max-n", st.max_n,
                          "vertex-count safety cap (output is worst-case "
                          "factorial)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    enumerate->add_option("--max-paths-per-cell", st.max_paths_per_cell,
                          "per-cell path cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    enumerate->callback([&st] {
        const graph_document doc = load_graph(st);
        if (doc.vertices.size() > st.max_n)
            throw error(errc::too_many_vertices,
                        "graph has " + std::to_string(doc.vertices.size()) +
                            " vertices, cap is " + std::to_string(st.max_n) +
                            " (raise with --max-n)");
        enum_limits limits;
        limits.max_paths_per_cell =
            static_cast<std::size_t>(st.max_paths_per_cell);
        st.out << render(enumerate_paths(to_relation_matrix(doc), limits),
                         doc.vertices, mode_of(st.io));
    });

    CLI::App* subwords = app.add_subcommand(
        "subwords", "gap-constrained subword complexity of rainbow words");
    subwords->add_option("--n", st.n, "word length (letters stay abstract)")
        ->check(CLI::PositiveNumber);
    subwords->add_option("--word", st.word, "concrete rainbow word");
    subwords->add_option("--gaps", st.gaps_text,
                         "allowed index gaps, e.g. 2,3,4")
        ->required();
    subwords->add_flag("--list", st.list, "list the subwords themselves");
    subwords->add_flag("--with-singletons", st.with_singletons,
                       "include single letters in the listing");
    add_output_option(*subwords, st.io);
    subwords->callback([&st] { run_subwords(st); });

    CLI::App* automata = app.add_subcommand(
        "automata", "letters reachable by single-letter powers between "
                    "state pairs");
    add_input_options(*automata, st.io, false);
    automata->callback([&st] {
        st.out << render(letter_power_closure(parse_transition_table(
                             read_input(st))),
                         mode_of(st.io));
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("algpath");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const error& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace algpath::cli
