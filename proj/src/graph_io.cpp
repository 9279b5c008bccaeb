#include "ccn/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ccn {

namespace {

// Strips a '#' comment and returns the whitespace tokens of the line.
std::vector<std::string> tokens_of(const std::string& raw) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line_no) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected integer, got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError("line " + std::to_string(line_no) +
                         ": trailing characters in '" + tok + "'");
    return value;
}

Graph build_checked(int n, std::vector<Edge> edges, bool one_based,
                    std::ostream* diag) {
    if (one_based) {
        for (auto& [u, v] : edges) {
            --u;
            --v;
        }
    }
    if (n < 1) throw ParseError("vertex count must be at least 1");
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range: (" +
                             std::to_string(one_based ? u + 1 : u) + ", " +
                             std::to_string(one_based ? v + 1 : v) + ")");
        if (u == v)
            throw ParseError("self-loop at vertex " +
                             std::to_string(one_based ? u + 1 : u));
    }
    Graph g(n, edges);
    if (diag && g.size() < static_cast<int>(edges.size()))
        *diag << "note: removed "
              << static_cast<int>(edges.size()) - g.size()
              << " duplicate edge(s)\n";
    return g;
}

Graph read_edge_list(const std::string& text, bool one_based,
                     std::ostream* diag) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = tokens_of(raw);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": header must be 'n m'");
            n = parse_int(toks[0], line_no);
            m = parse_int(toks[1], line_no);
            if (m < 0) throw ParseError("negative edge count in header");
            have_header = true;
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            throw ParseError("line " + std::to_string(line_no) +
                             ": more edge lines than the header announced");
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'u v'");
        edges.emplace_back(parse_int(toks[0], line_no),
                           parse_int(toks[1], line_no));
    }
    if (!have_header) throw ParseError("missing 'n m' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header announced " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
    return build_checked(n, std::move(edges), one_based, diag);
}

Graph read_json(const std::string& text, bool one_based, std::ostream* diag) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw ParseError("json graph needs fields 'n' and 'edges'");
    if (!doc["n"].is_number_integer())
        throw ParseError("field 'n' must be an integer");
    if (!doc["edges"].is_array())
        throw ParseError("field 'edges' must be an array");
    int n = doc["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 ||
            !item[0].is_number_integer() || !item[1].is_number_integer())
            throw ParseError("each edge must be a 2-element integer array");
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return build_checked(n, std::move(edges), one_based, diag);
}

} // namespace

Graph read_graph(const std::string& text, GraphFormat format, bool one_based,
                 std::ostream* diag) {
    switch (format) {
    case GraphFormat::edge_list:
        return read_edge_list(text, one_based, diag);
    case GraphFormat::json:
        return read_json(text, one_based, diag);
    }
    throw ParseError("unknown graph format");
}

Graph read_graph_auto(const std::string& text, bool one_based,
                      std::ostream* diag) {
    auto first = text.find_first_not_of(" \t\r\n");
    GraphFormat format = (first != std::string::npos && text[first] == '{')
                             ? GraphFormat::json
                             : GraphFormat::edge_list;
    return read_graph(text, format, one_based, diag);
}

std::string write_graph(const Graph& g, GraphFormat format, bool one_based) {
    const int shift = one_based ? 1 : 0;
    if (format == GraphFormat::edge_list) {
        std::ostringstream out;
        out << g.order() << ' ' << g.size() << '\n';
        for (const auto& [u, v] : g.edges())
            out << u + shift << ' ' << v + shift << '\n';
        return out.str();
    }
    nlohmann::ordered_json doc;
    doc["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u + shift, v + shift});
    doc["edges"] = std::move(edges);
    return doc.dump();
}

Graph read_graph_file(const std::string& path, bool one_based,
                      std::ostream* diag) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph_auto(buf.str(), one_based, diag);
}

} // namespace ccn
