#include "sfgft/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sfgft/errors.hpp"

namespace sfgft {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) throw ConfigError("not a number: '" + text + "'");
    return v;
}

int parse_int(const std::string& text) {
    int v = 0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) throw ConfigError("not an integer: '" + text + "'");
    return v;
}

std::uint64_t parse_uint64(const std::string& text) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) throw ConfigError("not an unsigned integer: '" + text + "'");
    return v;
}

namespace {

std::string trim(const std::string& s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open: " + path);
    return in;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, ',')) fields.push_back(trim(cur));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        const std::string item = trim(cur);
        if (item.empty()) throw ConfigError("empty item in list: '" + text + "'");
        items.push_back(item);
    }
    if (items.empty()) throw ConfigError("empty list");
    return items;
}

void write_positions_csv(const SensorField& field, const std::string& path) {
    auto out = open_out(path);
    out << "id,x,y\n";
    for (size_t i = 0; i < field.positions.size(); ++i)
        out << i << ',' << format_double(field.positions[i].x) << ',' << format_double(field.positions[i].y) << '\n';
    if (!out) throw ConfigError("write failed: " + path);
}

SensorField read_positions_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "id,x,y") throw ConfigError("bad positions header in " + path);
    SensorField field;
    size_t expect = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split_csv_row(line);
        if (fields.size() != 3) throw ConfigError("bad positions row in " + path + ": '" + line + "'");
        if (parse_uint64(fields[0]) != expect) throw ConfigError("non-contiguous ids in " + path);
        ++expect;
        field.positions.push_back({parse_double(fields[1]), parse_double(fields[2])});
    }
    return field;
}

void write_edges_csv(const Graph& g, const std::string& path) {
    auto out = open_out(path);
    out << "i,j,w\n";
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.weight(i, j) != 0.0) out << i << ',' << j << ',' << format_double(g.weight(i, j)) << '\n';
    if (!out) throw ConfigError("write failed: " + path);
}

Graph read_edges_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || trim(line) != "i,j,w") throw ConfigError("bad edge header in " + path);
    struct Edge {
        int i, j;
        double w;
    };
    std::vector<Edge> edges;
    int n = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto fields = split_csv_row(line);
        if (fields.size() != 3) throw ConfigError("bad edge row in " + path + ": '" + line + "'");
        const int i = parse_int(fields[0]);
        const int j = parse_int(fields[1]);
        if (i < 0 || j <= i) throw ConfigError("edge rows must have 0 <= i < j in " + path);
        edges.push_back({i, j, parse_double(fields[2])});
        n = std::max(n, j + 1);
    }
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.i, e.j, e.w);
    return g;
}

std::vector<std::pair<std::string, std::string>> read_key_values(const std::string& path) {
    auto in = open_in(path);
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key or value");
        entries.emplace_back(key, value);
    }
    return entries;
}

}  // namespace sfgft
