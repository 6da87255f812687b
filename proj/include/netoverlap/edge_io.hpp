#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "netoverlap/graph.hpp"

namespace netoverlap {

// Shortest decimal form that parses back to the identical double
// ("1" for 1.0, "0.1" for 0.1).
std::string format_double(double value);

// Strict full-token double parse; returns false on trailing garbage,
// empty input, or a non-finite value.
bool parse_double(const std::string& token, double& out);

// Strict full-token parse of a non-negative integer node index.
bool parse_node_id(const std::string& token, NodeId& out);

struct ParsedEdgeList {
    std::vector<WeightedEdge> edges;
    std::size_t node_count = 0; // 1 + max node index, 0 when no edges
};

// Reads "u v w" lines, w optional (default 1.0). Blank lines and lines whose
// first non-space character is '#' are skipped.
// Throws ParseError (with line number), NonPositiveWeightError, DuplicateEdgeError.
ParsedEdgeList parse_edge_list(std::istream& in);
ParsedEdgeList parse_edge_list(const std::string& text);

// Canonical edge-list output: one "u v w" line per edge, u < v, rows sorted
// by (u, v), weights in shortest round-trip form. parse(write(g)) == g.
void write_edge_list(const WeightedGraph& g, std::ostream& out);
std::string write_edge_list(const WeightedGraph& g);

// Community file: one "node_id community_id" line per node, same comment and
// blank-line conventions as the edge-list format.
CommunityAssignment parse_community_list(std::istream& in, std::size_t node_count);
void write_community_list(const CommunityAssignment& communities, std::ostream& out);

} // namespace netoverlap
