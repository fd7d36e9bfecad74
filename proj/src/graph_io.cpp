#include "qconn/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qconn {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw std::runtime_error("graph text, line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

} // namespace

std::string write_graph_text(const MatrixGraph& g) {
    std::string out = "#model=matrix\n#directed=";
    out += g.directed ? '1' : '0';
    out += '\n';
    out += std::to_string(g.n);
    out += '\n';
    for (std::uint32_t u = 0; u < g.n; ++u) {
        for (std::uint32_t v = 0; v < g.n; ++v) out += g.at(u, v) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string write_graph_text(const ListGraph& g) {
    std::string out = "#model=list\n#directed=1\n";
    out += std::to_string(g.n);
    out += ' ';
    out += std::to_string(g.k);
    out += '\n';
    for (std::uint32_t u = 0; u < g.n; ++u) {
        for (std::uint32_t i = 0; i < g.k; ++i) {
            if (i) out += ' ';
            out += std::to_string(g.at(u, i));
        }
        out += '\n';
    }
    return out;
}

std::string write_graph_text(const GraphFile& g) {
    return std::visit([](const auto& x) { return write_graph_text(x); }, g);
}

GraphFile read_graph_text(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t pos = 0;
    std::string model;
    int directed = -1;
    while (pos < lines.size() && !lines[pos].empty() && lines[pos][0] == '#') {
        const std::string& h = lines[pos];
        auto eq = h.find('=');
        if (eq == std::string::npos) fail(pos + 1, "malformed header");
        std::string key = h.substr(1, eq - 1);
        std::string value = h.substr(eq + 1);
        if (key == "model") {
            model = value;
        } else if (key == "directed") {
            if (value == "0")
                directed = 0;
            else if (value == "1")
                directed = 1;
            else
                fail(pos + 1, "directed must be 0 or 1");
        } else {
            fail(pos + 1, "unknown header key '" + key + "'");
        }
        ++pos;
    }
    if (model != "matrix" && model != "list") fail(pos + 1, "missing or invalid #model header");
    if (pos >= lines.size()) fail(pos + 1, "missing dimension line");

    std::istringstream dims(lines[pos]);
    ++pos;
    if (model == "matrix") {
        std::uint32_t n = 0;
        if (!(dims >> n)) fail(pos, "expected vertex count");
        std::string extra;
        if (dims >> extra) fail(pos, "unexpected token after vertex count");
        MatrixGraph g = MatrixGraph::make(n, directed == 1);
        for (std::uint32_t u = 0; u < n; ++u, ++pos) {
            if (pos >= lines.size()) fail(pos + 1, "missing matrix row");
            const std::string& row = lines[pos];
            if (row.size() != n) fail(pos + 1, "row length does not match n");
            for (std::uint32_t v = 0; v < n; ++v) {
                if (row[v] != '0' && row[v] != '1') fail(pos + 1, "cell must be 0 or 1");
                g.set(u, v, row[v] == '1');
            }
        }
        if (pos != lines.size()) fail(pos + 1, "trailing content");
        return g;
    }
    std::uint32_t n = 0, k = 0;
    if (!(dims >> n >> k)) fail(pos, "expected 'n k'");
    std::string extra;
    if (dims >> extra) fail(pos, "unexpected token after 'n k'");
    ListGraph g = ListGraph::make(n, k);
    for (std::uint32_t u = 0; u < n; ++u, ++pos) {
        if (pos >= lines.size()) fail(pos + 1, "missing neighbor row");
        std::istringstream row(lines[pos]);
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t v = 0;
            if (!(row >> v)) fail(pos + 1, "expected " + std::to_string(k) + " neighbors");
            if (v >= n) fail(pos + 1, "neighbor index out of range");
            g.set(u, i, v);
        }
        std::string rest;
        if (row >> rest) fail(pos + 1, "unexpected token after neighbors");
    }
    if (pos != lines.size()) fail(pos + 1, "trailing content");
    return g;
}

void save_graph(const GraphFile& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << write_graph_text(g);
}

GraphFile load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph_text(buf.str());
}

} // namespace qconn
