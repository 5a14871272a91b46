#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algpath/automata.hpp"
#include "algpath/path_count.hpp"
#include "algpath/path_enum.hpp"
#include "algpath/relations.hpp"
#include "algpath/shortest_paths.hpp"
#include "algpath/subwords.hpp"

namespace algpath {

/// Ingestion-side digraph: declared vertex names plus edges referring to
/// them by index. Names are unique; duplicate (from, to) pairs are
/// rejected at parse time.
struct graph_document {
    struct edge {
        std::uint32_t from = 0;
        std::uint32_t to = 0;
        std::optional<double> weight;
    };

    std::vector<std::string> vertices;
    std::vector<edge> edges;

    std::optional<std::uint32_t> vertex_index(std::string_view name) const;
};

enum class graph_format { edge_list, json };

/// Picks edge-list unless the first significant byte opens a JSON object.
graph_format detect_graph_format(std::string_view text);

/// Edge-list format:
///   # comment and blank lines anywhere
///   first significant line: a vertex count n (names become "1".."n")
///                           or `vertices: a,b,c`
///   then one edge per line: `u v` or `u v w`
/// JSON format: {"vertices": [...], "edges": [{"from","to","weight"?}]}.
graph_document parse_graph(std::string_view text, graph_format format);

/// JSON: {"states": [...], "alphabet": [...],
///        "transitions": [{"from": s, "on": letter, "to": [s, ...]}]}.
transition_table parse_transition_table(std::string_view text);

/// Adjacency matrix of the document's digraph; weights are ignored.
relation_matrix to_relation_matrix(const graph_document& doc);

/// Fresh distance matrix: zero diagonal, edge weights elsewhere (default
/// weight for unweighted edges), Unreachable where no edge exists.
/// Self-loops are rejected: the zero diagonal cannot carry them.
distance_matrix to_distance_matrix(const graph_document& doc,
                                   double default_weight = 1.0);

std::string render_graph_json(const graph_document& doc);

enum class render_mode { text, json };

/// Renderers are deterministic: equal values produce identical bytes.
/// Text mode prints an aligned grid with `.` for zero/empty cells and
/// `inf` for Unreachable; JSON mode emits compact row-major arrays with
/// null for Unreachable and canonically sorted sets.
std::string render(const relation_matrix& m,
                   const std::vector<std::string>& names, render_mode mode);
std::string render(const count_matrix& m, const std::vector<std::string>& names,
                   render_mode mode);
std::string render(const distance_matrix& m,
                   const std::vector<std::string>& names, render_mode mode);
std::string render(const path_set_matrix& m,
                   const std::vector<std::string>& names, render_mode mode);
std::string render(const letter_set_matrix& m, render_mode mode);
std::string render(const complexity_report& report,
                   const std::optional<std::vector<std::string>>& listing,
                   render_mode mode);

}  // namespace algpath
