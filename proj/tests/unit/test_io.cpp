#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "sfgft/errors.hpp"
#include "sfgft/graph.hpp"
#include "sfgft/io.hpp"
#include "sfgft/rng.hpp"
#include "sfgft/sensor.hpp"

using namespace sfgft;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / ("sfgft_io_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("double formatting round-trips exactly") {
    const double samples[] = {0.0,   1.0,    -1.0,     0.1,    1.0 / 3.0, 1e-300, -2.5e17,
                              3.125, 1e300,  0.3000000000000000444, 2.0,  123456.789};
    for (double v : samples) CHECK(parse_double(format_double(v)) == v);

    // Shortest form, no trailing noise; these exact strings are part of the
    // CSV output contract.
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(2.0) == "2");
    CHECK(format_double(-0.5) == "-0.5");
}

TEST_CASE("scalar parsing rejects trailing garbage") {
    CHECK(parse_double("2.5") == 2.5);
    CHECK(parse_double("-1e3") == -1000.0);
    CHECK_THROWS_AS(parse_double("2.5x"), ConfigError);
    CHECK_THROWS_AS(parse_double(""), ConfigError);
    CHECK_THROWS_AS(parse_double("1.0 "), ConfigError);

    CHECK(parse_int("-42") == -42);
    CHECK_THROWS_AS(parse_int("3.5"), ConfigError);
    CHECK_THROWS_AS(parse_int("12345678901234"), ConfigError);

    CHECK(parse_uint64("18446744073709551615") == 18446744073709551615ull);
    CHECK_THROWS_AS(parse_uint64("-1"), ConfigError);
}

TEST_CASE("list splitting") {
    CHECK(split_list("a, b ,c") == std::vector<std::string>{"a", "b", "c"});
    CHECK(split_list("single") == std::vector<std::string>{"single"});
    CHECK_THROWS_AS(split_list("a,,b"), ConfigError);
    CHECK_THROWS_AS(split_list(""), ConfigError);
    CHECK_THROWS_AS(split_list(" , "), ConfigError);
}

TEST_CASE("positions file round trip") {
    TempDir tmp;
    const auto field = place_sensors(37, 5);
    const auto path = tmp.file("pos.csv");
    write_positions_csv(field, path);

    const auto back = read_positions_csv(path);
    REQUIRE(back.positions.size() == field.positions.size());
    for (size_t i = 0; i < field.positions.size(); ++i) {
        CHECK(back.positions[i].x == field.positions[i].x);
        CHECK(back.positions[i].y == field.positions[i].y);
    }

    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "id,x,y");
}

TEST_CASE("positions file validation") {
    TempDir tmp;
    const auto path = tmp.file("bad.csv");

    std::ofstream(path) << "x,y\n0,0.5,0.5\n";
    CHECK_THROWS_AS(read_positions_csv(path), ConfigError);

    std::ofstream(path) << "id,x,y\n0,0.5,0.5\n2,0.1,0.2\n";
    CHECK_THROWS_AS(read_positions_csv(path), ConfigError);  // ids must be contiguous

    std::ofstream(path) << "id,x,y\n0,0.5\n";
    CHECK_THROWS_AS(read_positions_csv(path), ConfigError);

    CHECK_THROWS_AS(read_positions_csv(tmp.file("missing.csv")), ConfigError);
}

TEST_CASE("edge file round trip") {
    TempDir tmp;
    Graph g(5);
    g.add_edge(0, 3, 0.25);
    g.add_edge(1, 2, 1.0);
    g.add_edge(3, 4, 0.125);
    const auto path = tmp.file("edges.csv");
    write_edges_csv(g, path);

    const Graph back = read_edges_csv(path);
    REQUIRE(back.n() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(back.weight(i, j) == g.weight(i, j));

    // One row per undirected edge, i < j.
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "i,j,w");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("edge file validation") {
    TempDir tmp;
    const auto path = tmp.file("bad_edges.csv");
    std::ofstream(path) << "i,j,w\n2,1,0.5\n";
    CHECK_THROWS_AS(read_edges_csv(path), ConfigError);  // needs i < j

    std::ofstream(path) << "w\n";
    CHECK_THROWS_AS(read_edges_csv(path), ConfigError);
}

TEST_CASE("key-value files") {
    TempDir tmp;
    const auto path = tmp.file("run.conf");
    std::ofstream(path) << "# comment\n"
                           "\n"
                           "n_sensors = 500\n"
                           "  omega_list =  0.5, 1 \n"
                           "n_sensors = 250\n";
    const auto entries = read_key_values(path);
    REQUIRE(entries.size() == 3);
    CHECK(entries[0].first == "n_sensors");
    CHECK(entries[0].second == "500");
    CHECK(entries[1].first == "omega_list");
    CHECK(entries[1].second == "0.5, 1");
    // Duplicates are preserved in order; the consumer applies last-wins.
    CHECK(entries[2].second == "250");

    std::ofstream(path) << "no_equals_here\n";
    CHECK_THROWS_AS(read_key_values(path), ConfigError);

    std::ofstream(path) << "= value\n";
    CHECK_THROWS_AS(read_key_values(path), ConfigError);
}
