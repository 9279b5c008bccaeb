#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ccn/graph.hpp"

namespace ccn {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GraphFormat { edge_list, json };

/// Parses a graph from text.
///
/// edge_list: header line "n m" followed by m lines "u v". Anything from '#'
/// to end of line is a comment; blank lines are skipped.
/// json: {"n": <int>, "edges": [[u, v], ...]}.
///
/// one_based shifts vertex ids down by one on input. Duplicate edges are
/// merged; when diag is non-null a note is written to it per merged edge set.
Graph read_graph(const std::string& text, GraphFormat format,
                 bool one_based = false, std::ostream* diag = nullptr);

/// Detects the format from the first non-space byte ('{' means json).
Graph read_graph_auto(const std::string& text, bool one_based = false,
                      std::ostream* diag = nullptr);

/// Serializes canonically (edges ascending); read_graph(write_graph(g)) == g.
std::string write_graph(const Graph& g, GraphFormat format,
                        bool one_based = false);

Graph read_graph_file(const std::string& path, bool one_based = false,
                      std::ostream* diag = nullptr);

} // namespace ccn
