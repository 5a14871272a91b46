#include "algpath/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "algpath/errors.hpp"

namespace algpath {

using nlohmann::json;

namespace {

constexpr std::size_t max_vertex_count = 1000000;

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
    throw error(errc::parse_error,
                "line " + std::to_string(line) + ": " + message);
}

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name)
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() &&
               std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        std::size_t start = pos;
        while (pos < line.size() &&
               !std::isspace(static_cast<unsigned char>(line[pos])))
            ++pos;
        if (pos > start) fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

class document_builder {
public:
    void declare(std::string name, std::size_t line) {
        if (!valid_name(name))
            parse_fail(line, "bad vertex name '" + name + "'");
        if (!index_.emplace(name, doc_.vertices.size()).second)
            parse_fail(line, "duplicate vertex name '" + name + "'");
        doc_.vertices.push_back(std::move(name));
    }

    std::uint32_t resolve(std::string_view name, std::size_t line) const {
        const auto it = index_.find(std::string(name));
        if (it == index_.end())
            throw error(errc::unknown_vertex,
                        "line " + std::to_string(line) + ": unknown vertex '" +
                            std::string(name) + "'");
        return static_cast<std::uint32_t>(it->second);
    }

    void add_edge(std::uint32_t from, std::uint32_t to,
                  std::optional<double> weight, std::size_t line) {
        const std::uint64_t key =
            (static_cast<std::uint64_t>(from) << 32) | to;
        if (!seen_.insert(key).second)
            throw error(errc::duplicate_edge,
                        "line " + std::to_string(line) + ": duplicate edge " +
                            doc_.vertices[from] + " -> " + doc_.vertices[to]);
        doc_.edges.push_back({from, to, weight});
    }

    graph_document take() { return std::move(doc_); }

private:
    graph_document doc_;
    std::unordered_map<std::string, std::size_t> index_;
    std::unordered_set<std::uint64_t> seen_;
};

double parse_weight(std::string_view token, std::size_t line) {
    double value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size() ||
        !std::isfinite(value))
        parse_fail(line, "bad weight '" + std::string(token) + "'");
    return value;
}

graph_document parse_edge_list(std::string_view text) {
    document_builder builder;
    bool header_seen = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        if (!header_seen) {
            header_seen = true;
            constexpr std::string_view kVerticesPrefix = "vertices:";
            if (line.substr(0, kVerticesPrefix.size()) == kVerticesPrefix) {
                std::string_view rest = line.substr(kVerticesPrefix.size());
                while (true) {
                    const std::size_t comma = rest.find(',');
                    builder.declare(
                        std::string(trim(rest.substr(0, comma))), line_no);
                    if (comma == std::string_view::npos) break;
                    rest = rest.substr(comma + 1);
                }
            } else {
                std::uint64_t n = 0;
                const auto [end, ec] =
                    std::from_chars(line.data(), line.data() + line.size(), n);
                if (ec != std::errc{} || end != line.data() + line.size())
                    parse_fail(line_no, "expected vertex count or 'vertices:'");
                if (n == 0) parse_fail(line_no, "vertex count must be >= 1");
                if (n > max_vertex_count)
                    parse_fail(line_no, "vertex count too large");
                for (std::uint64_t i = 1; i <= n; ++i)
                    builder.declare(std::to_string(i), line_no);
            }
            continue;
        }

        const auto fields = split_fields(line);
        if (fields.size() != 2 && fields.size() != 3)
            parse_fail(line_no, "expected 'u v' or 'u v w'");
        const std::uint32_t from = builder.resolve(fields[0], line_no);
        const std::uint32_t to = builder.resolve(fields[1], line_no);
        std::optional<double> weight;
        if (fields.size() == 3) weight = parse_weight(fields[2], line_no);
        builder.add_edge(from, to, weight, line_no);
    }
    if (!header_seen)
        throw error(errc::parse_error, "empty input: no vertex declaration");
    return builder.take();
}

const json& require_key(const json& object, const char* key,
                        const char* where) {
    const auto it = object.find(key);
    if (it == object.end())
        throw error(errc::parse_error,
                    std::string(where) + ": missing key \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& object,
                         std::initializer_list<std::string_view> known,
                         const char* where) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw error(errc::parse_error, std::string(where) +
                                               ": unexpected key \"" + key +
                                               "\"");
    }
}

std::vector<std::string> string_array(const json& value, const char* where) {
    if (!value.is_array())
        throw error(errc::parse_error,
                    std::string(where) + ": expected an array of strings");
    std::vector<std::string> out;
    for (const json& item : value) {
        if (!item.is_string())
            throw error(errc::parse_error,
                        std::string(where) + ": expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

json parse_json_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

graph_document parse_graph_json(std::string_view text) {
    const json j = parse_json_document(text);
    if (!j.is_object())
        throw error(errc::parse_error, "graph: expected a JSON object");
    reject_unknown_keys(j, {"vertices", "edges"}, "graph");

    document_builder builder;
    for (const auto& name : string_array(require_key(j, "vertices", "graph"),
                                         "\"vertices\""))
        builder.declare(name, 0);

    const json& edges = require_key(j, "edges", "graph");
    if (!edges.is_array())
        throw error(errc::parse_error, "\"edges\": expected an array");
    for (const json& e : edges) {
        if (!e.is_object())
            throw error(errc::parse_error, "\"edges\": expected objects");
        reject_unknown_keys(e, {"from", "to", "weight"}, "edge");
        const json& from = require_key(e, "from", "edge");
        const json& to = require_key(e, "to", "edge");
        if (!from.is_string() || !to.is_string())
            throw error(errc::parse_error,
                        "edge: \"from\" and \"to\" must be vertex names");
        std::optional<double> weight;
        if (const auto it = e.find("weight"); it != e.end()) {
            if (!it->is_number())
                throw error(errc::parse_error, "edge: \"weight\" must be a number");
            const double w = it->get<double>();
            if (!std::isfinite(w))
                throw error(errc::parse_error, "edge: \"weight\" must be finite");
            weight = w;
        }
        builder.add_edge(builder.resolve(from.get<std::string>(), 0),
                         builder.resolve(to.get<std::string>(), 0), weight, 0);
    }
    return builder.take();
}

// Exact decimal for integral values, shortest round-trip form otherwise.
std::string format_weight(double v) {
    if (std::floor(v) == v && std::abs(v) <= 9007199254740992.0) {
        return std::to_string(static_cast<long long>(v));
    }
    char buffer[32];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
    (void)ec;
    return std::string(buffer, end);
}

json weight_to_json(double v) {
    if (std::floor(v) == v && std::abs(v) <= 9007199254740992.0)
        return static_cast<std::int64_t>(v);
    return v;
}

json count_to_json(const big_int& c) {
    if (c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c.convert_to<long long>());
    return c.str();
}

std::string dump_line(const json& j) { return j.dump() + "\n"; }

// Aligned grid with a name header row/column; cells right-aligned.
std::string grid(const std::vector<std::string>& names,
                 const square_matrix<std::string>& cells) {
    const std::size_t n = names.size();
    std::size_t label_width = 0;
    for (const auto& name : names) label_width = std::max(label_width, name.size());
    std::vector<std::size_t> widths(n);
    for (std::size_t j = 0; j < n; ++j) {
        widths[j] = names[j].size();
        for (std::size_t i = 0; i < n; ++i)
            widths[j] = std::max(widths[j], cells(i, j).size());
    }

    std::string out;
    const auto pad = [&out](const std::string& s, std::size_t width) {
        out.append(width - s.size(), ' ');
        out += s;
    };
    pad("", label_width);
    for (std::size_t j = 0; j < n; ++j) {
        out += "  ";
        pad(names[j], widths[j]);
    }
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        pad(names[i], label_width);
        for (std::size_t j = 0; j < n; ++j) {
            out += "  ";
            pad(cells(i, j), widths[j]);
        }
        out += '\n';
    }
    return out;
}

void check_names(std::size_t n, const std::vector<std::string>& names) {
    if (names.size() != n)
        throw std::invalid_argument("render: name count does not match matrix");
}

std::string join_path(const vertex_string& path,
                      const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ' ';
        out += names[path[i]];
    }
    return out;
}

}  // namespace

std::optional<std::uint32_t> graph_document::vertex_index(
    std::string_view name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<std::uint32_t>(i);
    return std::nullopt;
}

graph_format detect_graph_format(std::string_view text) {
    const std::string_view lead = trim(text);
    return (!lead.empty() && lead.front() == '{') ? graph_format::json
                                                  : graph_format::edge_list;
}

graph_document parse_graph(std::string_view text, graph_format format) {
    return format == graph_format::json ? parse_graph_json(text)
                                        : parse_edge_list(text);
}

transition_table parse_transition_table(std::string_view text) {
    const json j = parse_json_document(text);
    if (!j.is_object())
        throw error(errc::parse_error, "automaton: expected a JSON object");
    reject_unknown_keys(j, {"states", "alphabet", "transitions"}, "automaton");

    auto states = string_array(require_key(j, "states", "automaton"),
                               "\"states\"");
    auto alphabet = string_array(require_key(j, "alphabet", "automaton"),
                                 "\"alphabet\"");
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t k = i + 1; k < states.size(); ++k)
            if (states[i] == states[k])
                throw error(errc::parse_error,
                            "duplicate state '" + states[i] + "'");
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        for (std::size_t k = i + 1; k < alphabet.size(); ++k)
            if (alphabet[i] == alphabet[k])
                throw error(errc::parse_error,
                            "duplicate letter '" + alphabet[i] + "'");

    transition_table t =
        make_transition_table(std::move(states), std::move(alphabet));

    const json& transitions = require_key(j, "transitions", "automaton");
    if (!transitions.is_array())
        throw error(errc::parse_error, "\"transitions\": expected an array");
    for (const json& entry : transitions) {
        if (!entry.is_object())
            throw error(errc::parse_error, "\"transitions\": expected objects");
        reject_unknown_keys(entry, {"from", "on", "to"}, "transition");
        const json& from = require_key(entry, "from", "transition");
        const json& on = require_key(entry, "on", "transition");
        const json& to = require_key(entry, "to", "transition");
        if (!from.is_string() || !on.is_string())
            throw error(errc::parse_error,
                        "transition: \"from\" and \"on\" must be strings");
        const auto p = t.state_index(from.get<std::string>());
        if (!p)
            throw error(errc::unknown_state, "unknown state '" +
                                                 from.get<std::string>() + "'");
        const auto letter = t.letter_index(on.get<std::string>());
        if (!letter)
            throw error(errc::unknown_letter,
                        "unknown letter '" + on.get<std::string>() + "'");
        for (const auto& target : string_array(to, "transition \"to\"")) {
            const auto q = t.state_index(target);
            if (!q)
                throw error(errc::unknown_state,
                            "unknown state '" + target + "'");
            add_transition(t, *p, *letter, *q);
        }
    }
    return t;
}

relation_matrix to_relation_matrix(const graph_document& doc) {
    relation_matrix a(doc.vertices.size(), 0);
    for (const auto& e : doc.edges) a(e.from, e.to) = 1;
    return a;
}

distance_matrix to_distance_matrix(const graph_document& doc,
                                   double default_weight) {
    distance_matrix d(doc.vertices.size(), distance::unreachable());
    for (std::size_t i = 0; i < d.size(); ++i) d(i, i) = distance{0.0};
    for (const auto& e : doc.edges) {
        if (e.from == e.to)
            throw error(errc::self_loop,
                        "self-loop at '" + doc.vertices[e.from] +
                            "' has no place in a distance matrix");
        d(e.from, e.to) = distance{e.weight.value_or(default_weight)};
    }
    return d;
}

std::string render_graph_json(const graph_document& doc) {
    json edges = json::array();
    for (const auto& e : doc.edges) {
        json entry{{"from", doc.vertices[e.from]}, {"to", doc.vertices[e.to]}};
        if (e.weight) entry["weight"] = weight_to_json(*e.weight);
        edges.push_back(std::move(entry));
    }
    return dump_line(json{{"vertices", doc.vertices}, {"edges", edges}});
}

std::string render(const relation_matrix& m,
                   const std::vector<std::string>& names, render_mode mode) {
    const std::size_t n = m.size();
    if (mode == render_mode::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(m(i, j) ? 1 : 0);
            rows.push_back(std::move(row));
        }
        return dump_line(rows);
    }
    check_names(n, names);
    square_matrix<std::string> cells(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cells(i, j) = m(i, j) ? "1" : ".";
    return grid(names, cells);
}

std::string render(const count_matrix& m, const std::vector<std::string>& names,
                   render_mode mode) {
    const std::size_t n = m.size();
    if (mode == render_mode::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(count_to_json(m(i, j)));
            rows.push_back(std::move(row));
        }
        return dump_line(rows);
    }
    check_names(n, names);
    square_matrix<std::string> cells(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cells(i, j) = m(i, j).is_zero() ? "." : m(i, j).str();
    return grid(names, cells);
}

std::string render(const distance_matrix& m,
                   const std::vector<std::string>& names, render_mode mode) {
    const std::size_t n = m.size();
    if (mode == render_mode::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) {
                if (m(i, j).is_unreachable())
                    row.push_back(nullptr);
                else
                    row.push_back(weight_to_json(m(i, j).value()));
            }
            rows.push_back(std::move(row));
        }
        return dump_line(rows);
    }
    check_names(n, names);
    square_matrix<std::string> cells(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cells(i, j) = m(i, j).is_unreachable()
                              ? "inf"
                              : format_weight(m(i, j).value());
    return grid(names, cells);
}

std::string render(const path_set_matrix& m,
                   const std::vector<std::string>& names, render_mode mode) {
    const std::size_t n = m.size();
    check_names(n, names);
    if (mode == render_mode::json) {
        json cells = json::object();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                json paths = json::array();
                for (const vertex_string& p : m(i, j)) {
                    json path = json::array();
                    for (std::uint32_t v : p) path.push_back(names[v]);
                    paths.push_back(std::move(path));
                }
                cells[names[i] + "->" + names[j]] = std::move(paths);
            }
        return dump_line(cells);
    }
    std::string out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m(i, j).empty()) continue;
            out += names[i] + " -> " + names[j] + ":";
            bool first = true;
            for (const vertex_string& p : m(i, j)) {
                out += first ? " " : " | ";
                first = false;
                out += join_path(p, names);
            }
            out += '\n';
        }
    if (out.empty()) out = "(no paths)\n";
    return out;
}

std::string render(const letter_set_matrix& m, render_mode mode) {
    const std::size_t n = m.cells.size();
    if (mode == render_mode::json) {
        json rows = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(m.letters(i, j));
            rows.push_back(std::move(row));
        }
        return dump_line(rows);
    }
    square_matrix<std::string> cells(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto letters = m.letters(i, j);
            if (letters.empty()) {
                cells(i, j) = ".";
                continue;
            }
            std::string joined;
            for (const auto& letter : letters) {
                if (!joined.empty()) joined += ',';
                joined += letter;
            }
            cells(i, j) = std::move(joined);
        }
    return grid(m.states, cells);
}

std::string render(const complexity_report& report,
                   const std::optional<std::vector<std::string>>& listing,
                   render_mode mode) {
    const big_int singletons = report.n;
    const big_int nontrivial = report.k - singletons;
    if (mode == render_mode::json) {
        json out{{"n", report.n},
                 {"gaps", json::array()},
                 {"k", count_to_json(report.k)},
                 {"singletons", count_to_json(singletons)},
                 {"nontrivial", count_to_json(nontrivial)}};
        for (unsigned g : report.gaps) out["gaps"].push_back(g);
        if (listing) out["subwords"] = *listing;
        return dump_line(out);
    }
    std::string out;
    out += "K = " + report.k.str() + "\n";
    out += "singletons = " + singletons.str() + "\n";
    out += "nontrivial = " + nontrivial.str() + "\n";
    if (listing) {
        out += "subwords:\n";
        for (const auto& word : *listing) out += word + "\n";
    }
    return out;
}

}  // namespace algpath
