#include <catch2/catch_amalgamated.hpp>

#include "antimagic/constructors.hpp"
#include "antimagic/io.hpp"

#include <filesystem>

using namespace antimagic;

TEST_CASE("graph file round trip") {
    const Graph g = with_paths(cycle(4), 2);
    std::stringstream ss;
    write_graph(ss, g);
    const Graph h = read_graph(ss);
    CHECK(h.vertex_count == g.vertex_count);
    CHECK(h.edges == g.edges);
}

TEST_CASE("labeling file round trip with comments and blanks") {
    const auto L = embedded_table(TableFamily::C3, 3, 2);
    std::stringstream ss;
    write_labeling(ss, L, "a remark");
    ss << "\n# trailing comment\n";
    std::stringstream in(ss.str());
    const auto M = read_labeling(in);
    CHECK(M.graph.edges == L.graph.edges);
    CHECK(M.labels == L.labels);
}

TEST_CASE("malformed files are rejected") {
    auto fails = [](const std::string& text) {
        std::stringstream in(text);
        CHECK_THROWS_AS(read_graph(in), std::exception);
    };
    fails("");
    fails("graph 3\n");
    fails("vertices 3 1\n0 1\n");
    fails("graph 3 2\n0 1\n");          // missing edge line
    fails("graph 3 1\n0 3\n");          // endpoint out of range
    fails("graph 3 2\n0 1\n0 1\n");     // duplicate edge

    std::stringstream lab("graph 3 3\n0 1 1\n1 2 2\n2 0 2\n");
    CHECK_THROWS_AS(read_labeling(lab), std::invalid_argument);
}

TEST_CASE("dot export mentions every vertex, edge, and label") {
    const EdgeLabeling L{cycle(3), {1, 2, 3}};
    std::stringstream ss;
    write_dot(ss, L);
    const std::string dot = ss.str();
    CHECK(dot.find("v0 [label=\"phi=4\"]") != std::string::npos);
    CHECK(dot.find("v1 [label=\"phi=3\"]") != std::string::npos);
    CHECK(dot.find("v2 [label=\"phi=5\"]") != std::string::npos);
    CHECK(dot.find("v0 -- v1 [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("v2 -- v0 [label=\"3\"]") != std::string::npos);
}

TEST_CASE("graph spec grammar") {
    const Graph a = parse_graphspec("cycle:3+p3x:2");
    const Graph b = with_paths(cycle(3), 2);
    CHECK(a.vertex_count == b.vertex_count);
    CHECK(a.edges == b.edges);

    CHECK(parse_graphspec("path:5").edge_count() == 4);
    CHECK(parse_graphspec("star:4").vertex_count == 5);
    CHECK(parse_graphspec("doublestar:2:3").vertex_count == 7);
    CHECK(parse_graphspec("jellyfish:3:11").edge_count() == 36);
    CHECK(parse_graphspec("cycle:3+cycle:4+p3x:1").vertex_count == 10);

    CHECK_THROWS_AS(parse_graphspec("blob:3"), std::runtime_error);
    CHECK_THROWS_AS(parse_graphspec("cycle"), std::exception);
    CHECK_THROWS_AS(parse_graphspec("file:/no/such/place"), std::runtime_error);
}

TEST_CASE("graph spec file term") {
    const auto path = std::filesystem::temp_directory_path() / "antimagic_io_test.graph";
    {
        std::ofstream out(path);
        write_graph(out, cycle(5));
    }
    const Graph g = parse_graphspec("file:" + path.string() + "+p3x:1");
    CHECK(g.vertex_count == 8);
    CHECK(g.edge_count() == 7);
    std::filesystem::remove(path);
}

TEST_CASE("shipped table files match the embedded rows") {
    const std::filesystem::path dir =
        std::filesystem::path(ANTIMAGIC_SOURCE_DIR) / "data" / "tables";
    REQUIRE(std::filesystem::exists(dir));
    int seen = 0;
    for (const auto& row : table_rows()) {
        const std::string name = "t" + std::to_string(row.table_id) + "_n" +
                                 std::to_string(row.host_n) + "_t" + std::to_string(row.t) +
                                 ".labeling";
        std::ifstream in(dir / name);
        REQUIRE(in.good());
        const auto L = read_labeling(in);
        const auto E = labeling_from_row(row);
        CHECK(L.graph.edges == E.graph.edges);
        CHECK(L.labels == E.labels);
        ++seen;
    }
    CHECK(seen == 30);
}
