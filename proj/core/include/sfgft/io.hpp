#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sfgft/graph.hpp"
#include "sfgft/sensor.hpp"

namespace sfgft {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

double parse_double(const std::string& text);
int parse_int(const std::string& text);
std::uint64_t parse_uint64(const std::string& text);

// Comma-separated list, whitespace trimmed, empty items rejected.
std::vector<std::string> split_list(const std::string& text);

// Positions file: header id,x,y with contiguous ids starting at 0.
void write_positions_csv(const SensorField& field, const std::string& path);
SensorField read_positions_csv(const std::string& path);

// Edge file: header i,j,w, one row per undirected edge with i < j.
void write_edges_csv(const Graph& g, const std::string& path);
// Vertex count is inferred as max index + 1; fine for graphs without
// trailing isolated vertices, which is all this project writes.
Graph read_edges_csv(const std::string& path);

// Flat key = value file; blank lines and lines starting with # are skipped.
// Returns entries in file order (later duplicates override earlier ones at
// the consumer).
std::vector<std::pair<std::string, std::string>> read_key_values(const std::string& path);

}  // namespace sfgft
