#include <doctest.h>

#include <string>

#include "algpath/errors.hpp"
#include "algpath/graph_io.hpp"
#include "support/fixtures.hpp"
#include "support/grids.hpp"

using namespace algpath;

namespace {

errc code_of(const std::string& text,
             graph_format format = graph_format::edge_list) {
    try {
        parse_graph(text, format);
        FAIL("expected a parse failure");
    } catch (const error& e) {
        return e.code();
    }
    return errc::parse_error;  // unreachable
}

std::string message_of(const std::string& text,
                       graph_format format = graph_format::edge_list) {
    try {
        parse_graph(text, format);
    } catch (const error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("edge list: numbered header") {
    const graph_document doc =
        parse_graph("5\n1 2\n2 3\n2 4\n3 4\n5 2\n", graph_format::edge_list);
    CHECK(doc.vertices ==
          std::vector<std::string>{"1", "2", "3", "4", "5"});
    CHECK(doc.edges.size() == 5);
    CHECK(to_relation_matrix(doc) == grids::from_rows({
                                         "01000",
                                         "00110",
                                         "00010",
                                         "00000",
                                         "01000",
                                     }));
}

TEST_CASE("edge list: trivia and errors") {
    CHECK(parse_graph("1\n", graph_format::edge_list).vertices.size() == 1);
    CHECK(code_of("2\n1 2\n1 2\n") == errc::duplicate_edge);
    CHECK(message_of("2\n1 2\n1 2\n").find("line 3") != std::string::npos);
    CHECK(code_of("2\n1 3\n") == errc::unknown_vertex);
    CHECK(code_of("x\n") == errc::parse_error);
    CHECK(message_of("x\n").find("line 1") != std::string::npos);
    CHECK(code_of("") == errc::parse_error);
    CHECK(code_of("0\n") == errc::parse_error);
    CHECK(code_of("2000000\n") == errc::parse_error);
    CHECK(code_of("2\n1\n") == errc::parse_error);
    CHECK(code_of("2\n1 2 x\n") == errc::parse_error);
    CHECK(code_of("2\n1 2 3 4\n") == errc::parse_error);
}

TEST_CASE("edge list: comments, blanks, and CRLF keep line numbers") {
    const graph_document doc = parse_graph(
        "# heading\n\n2\n\n1 2\n", graph_format::edge_list);
    CHECK(doc.edges.size() == 1);
    CHECK(message_of("# heading\n\n2\n\n1 2\n1 2\n").find("line 6") !=
          std::string::npos);
    CHECK(parse_graph("2\r\n1 2\r\n", graph_format::edge_list)
              .edges.size() == 1);
}

TEST_CASE("edge list: named vertices") {
    const graph_document doc = parse_graph(
        "vertices: a, b ,c\na b\nb c 2.5\n", graph_format::edge_list);
    CHECK(doc.vertices == std::vector<std::string>{"a", "b", "c"});
    CHECK_FALSE(doc.edges[0].weight.has_value());
    CHECK(doc.edges[1].weight == 2.5);
    CHECK(doc.vertex_index("c") == 2);
    CHECK_FALSE(doc.vertex_index("d").has_value());

    CHECK(code_of("vertices: a,a\n") == errc::parse_error);
    CHECK(code_of("vertices: a,,b\n") == errc::parse_error);
    CHECK(code_of("vertices: a b,c\n") == errc::parse_error);
}

TEST_CASE("json graphs parse strictly") {
    const graph_document doc = parse_graph(
        R"({"vertices":["a","b"],"edges":[{"from":"a","to":"b","weight":3}]})",
        graph_format::json);
    CHECK(doc.vertices == std::vector<std::string>{"a", "b"});
    CHECK(doc.edges[0].weight == 3.0);

    const auto json_code = [](const std::string& text) {
        return code_of(text, graph_format::json);
    };
    CHECK(json_code(R"({"vertices":["a"]})") == errc::parse_error);
    CHECK(json_code(R"({"vertices":["a"],"edges":[],"x":1})") ==
          errc::parse_error);
    CHECK(json_code(R"({"vertices":["a","a"],"edges":[]})") ==
          errc::parse_error);
    CHECK(json_code(
              R"({"vertices":["a"],"edges":[{"from":"a","to":"z"}]})") ==
          errc::unknown_vertex);
    CHECK(json_code(
              R"({"vertices":["a","b"],)"
              R"("edges":[{"from":"a","to":"b","weight":true}]})") ==
          errc::parse_error);
    CHECK(json_code(R"({"vertices":["a","b"],)"
                    R"("edges":[{"from":"a","to":"b"},)"
                    R"({"from":"a","to":"b"}]})") == errc::duplicate_edge);
    CHECK(json_code("{nope") == errc::parse_error);
}

TEST_CASE("format detection looks at the first significant byte") {
    CHECK(detect_graph_format("5\n1 2\n") == graph_format::edge_list);
    CHECK(detect_graph_format("  \n {\"vertices\":[]}") ==
          graph_format::json);
    CHECK(detect_graph_format("") == graph_format::edge_list);
}

TEST_CASE("json round trip is stable") {
    const std::string text =
        R"({"vertices":["a","b","c"],)"
        R"("edges":[{"from":"a","to":"b","weight":2.5},)"
        R"({"from":"b","to":"c"}]})";
    const graph_document first = parse_graph(text, graph_format::json);
    const std::string rendered = render_graph_json(first);
    const graph_document second = parse_graph(rendered, graph_format::json);
    CHECK(first.vertices == second.vertices);
    REQUIRE(first.edges.size() == second.edges.size());
    for (std::size_t i = 0; i < first.edges.size(); ++i) {
        CHECK(first.edges[i].from == second.edges[i].from);
        CHECK(first.edges[i].to == second.edges[i].to);
        CHECK(first.edges[i].weight == second.edges[i].weight);
    }
    CHECK(render_graph_json(second) == rendered);
}

TEST_CASE("distance conversion applies defaults and rejects self-loops") {
    const graph_document doc = parse_graph(
        "3\n1 2 2.5\n2 3\n", graph_format::edge_list);
    const distance_matrix d = to_distance_matrix(doc);
    CHECK(d(0, 1) == distance{2.5});
    CHECK(d(1, 2) == distance{1.0});
    CHECK(d(0, 0) == distance{0.0});
    CHECK(d(2, 0).is_unreachable());
    CHECK(to_distance_matrix(doc, 7.0)(1, 2) == distance{7.0});

    const graph_document loop =
        parse_graph("2\n1 1\n", graph_format::edge_list);
    CHECK(to_relation_matrix(loop)(0, 0) == 1);
    try {
        to_distance_matrix(loop);
        FAIL("expected self_loop");
    } catch (const error& e) {
        CHECK(e.code() == errc::self_loop);
    }
}

TEST_CASE("transition tables parse from json") {
    const transition_table t =
        parse_transition_table(fixtures::slurp("automaton.json"));
    CHECK(t.states.size() == 5);
    CHECK(t.alphabet == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(t.moves[0][0] == std::vector<std::uint32_t>{0, 1});
    CHECK(t.moves[4][1] == std::vector<std::uint32_t>{1});
    CHECK(t.moves[2][2].empty());

    const auto table_code = [](const std::string& text) {
        try {
            parse_transition_table(text);
        } catch (const error& e) {
            return e.code();
        }
        return errc::parse_error;
    };
    CHECK(table_code(R"({"states":["s"],"alphabet":["a"],)"
                     R"("transitions":[]})") == errc::parse_error);
    CHECK(parse_transition_table(R"({"states":["s"],"alphabet":["a"],)"
                                 R"("transitions":[]})")
              .moves[0][0]
              .empty());
    CHECK(table_code(R"({"states":["s","s"],"alphabet":["a"],)"
                     R"("transitions":[]})") == errc::parse_error);
    CHECK(table_code(
              R"({"states":["s"],"alphabet":["a"],"transitions":)"
              R"([{"from":"s","on":"z","to":["s"]}]})") ==
          errc::unknown_letter);
    CHECK(table_code(
              R"({"states":["s"],"alphabet":["a"],"transitions":)"
              R"([{"from":"s","on":"a","to":["t"]}]})") ==
          errc::unknown_state);
    CHECK(table_code(R"({"states":["s"],"alphabet":["a"]})") ==
          errc::parse_error);
}

TEST_CASE("text rendering aligns a labeled grid") {
    const relation_matrix m = grids::from_rows({"01", "00"});
    const std::vector<std::string> names{"1", "2"};
    CHECK(render(m, names, render_mode::text) ==
          "   1  2\n"
          "1  .  1\n"
          "2  .  .\n");
}

TEST_CASE("json rendering is exact and deterministic") {
    const std::vector<std::string> names{"1", "2"};
    const relation_matrix m = grids::from_rows({"01", "00"});
    CHECK(render(m, names, render_mode::json) == "[[0,1],[0,0]]\n");
    CHECK(render(m, names, render_mode::json) ==
          render(m, names, render_mode::json));

    distance_matrix d(2, distance::unreachable());
    d(0, 0) = distance{0.0};
    d(0, 1) = distance{2.5};
    d(1, 1) = distance{3.0};
    CHECK(render(d, names, render_mode::json) ==
          "[[0,2.5],[null,3]]\n");
    CHECK(render(d, names, render_mode::text) ==
          "     1    2\n"
          "1    0  2.5\n"
          "2  inf    3\n");

    count_matrix c(2, 0);
    c(0, 1) = big_int("9223372036854775808");  // one past int64
    c(1, 0) = 9223372036854775807LL;
    CHECK(render(c, names, render_mode::json) ==
          "[[0,\"9223372036854775808\"],[9223372036854775807,0]]\n");

    path_set_matrix p(2);
    p(0, 1).insert({0, 1});
    CHECK(render(p, names, render_mode::json) ==
          R"({"1->1":[],"1->2":[["1","2"]],"2->1":[],"2->2":[]})"
          "\n");
    CHECK(render(p, names, render_mode::text) == "1 -> 2: 1 2\n");
    CHECK(render(path_set_matrix(2), names, render_mode::text) ==
          "(no paths)\n");
}

TEST_CASE("complexity reports render in both modes") {
    const complexity_report report = m_complexity(6, {2, 3, 4, 5});
    CHECK(render(report, std::nullopt, render_mode::text) ==
          "K = 20\n"
          "singletons = 6\n"
          "nontrivial = 14\n");
    CHECK(render(report, std::nullopt, render_mode::json) ==
          R"({"gaps":[2,3,4,5],"k":20,"n":6,"nontrivial":14,)"
          R"("singletons":6})"
          "\n");
    const std::vector<std::string> listing{"ab", "b"};
    CHECK(render(report, listing, render_mode::text) ==
          "K = 20\n"
          "singletons = 6\n"
          "nontrivial = 14\n"
          "subwords:\nab\nb\n");
}
