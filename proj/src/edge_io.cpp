#include "netoverlap/edge_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace netoverlap {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

std::uint64_t pair_key(NodeId u, NodeId v) {
    NodeId lo = std::min(u, v);
    NodeId hi = std::max(u, v);
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

bool parse_double(const std::string& token, double& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last && std::isfinite(out);
}

bool parse_node_id(const std::string& token, NodeId& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

ParsedEdgeList parse_edge_list(std::istream& in) {
    ParsedEdgeList result;
    std::unordered_set<std::uint64_t> seen;
    std::string line;
    std::size_t line_no = 0;
    NodeId max_id = 0;
    bool any = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto tokens = split_ws(line);
        if (tokens.size() != 2 && tokens.size() != 3) {
            throw ParseError("expected 'u v' or 'u v w', got " +
                             std::to_string(tokens.size()) + " fields", line_no);
        }
        WeightedEdge e;
        if (!parse_node_id(tokens[0], e.u)) {
            throw ParseError("bad node index '" + tokens[0] + "'", line_no);
        }
        if (!parse_node_id(tokens[1], e.v)) {
            throw ParseError("bad node index '" + tokens[1] + "'", line_no);
        }
        if (tokens.size() == 3) {
            if (!parse_double(tokens[2], e.weight)) {
                throw ParseError("bad weight '" + tokens[2] + "'", line_no);
            }
            if (!(e.weight > 0.0)) {
                throw NonPositiveWeightError("line " + std::to_string(line_no) +
                                             ": non-positive weight '" + tokens[2] + "'");
            }
        } else {
            e.weight = 1.0; // unweighted convention
        }
        if (e.u != e.v && !seen.insert(pair_key(e.u, e.v)).second) {
            throw DuplicateEdgeError("line " + std::to_string(line_no) +
                                     ": duplicate edge (" + tokens[0] + ", " +
                                     tokens[1] + ")");
        }
        max_id = std::max({max_id, e.u, e.v});
        any = true;
        result.edges.push_back(e);
    }
    result.node_count = any ? static_cast<std::size_t>(max_id) + 1 : 0;
    return result;
}

ParsedEdgeList parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    for (const WeightedEdge& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << '\n';
    }
}

std::string write_edge_list(const WeightedGraph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

CommunityAssignment parse_community_list(std::istream& in, std::size_t node_count) {
    CommunityAssignment result;
    result.membership.assign(node_count, 0);
    std::vector<bool> assigned(node_count, false);
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        auto tokens = split_ws(line);
        if (tokens.size() != 2) {
            throw ParseError("expected 'node_id community_id', got " +
                             std::to_string(tokens.size()) + " fields", line_no);
        }
        NodeId node = 0;
        std::uint32_t comm = 0;
        if (!parse_node_id(tokens[0], node) || node >= node_count) {
            throw ParseError("bad node index '" + tokens[0] + "'", line_no);
        }
        if (!parse_node_id(tokens[1], comm)) {
            throw ParseError("bad community id '" + tokens[1] + "'", line_no);
        }
        if (assigned[node]) {
            throw ParseError("node " + tokens[0] + " assigned twice", line_no);
        }
        assigned[node] = true;
        result.membership[node] = comm;
    }
    for (std::size_t i = 0; i < node_count; ++i) {
        if (!assigned[i]) {
            throw Error("node " + std::to_string(i) + " has no community assignment");
        }
    }
    validate_communities(result, node_count);
    return result;
}

void write_community_list(const CommunityAssignment& communities, std::ostream& out) {
    for (std::size_t i = 0; i < communities.membership.size(); ++i) {
        out << i << ' ' << communities.membership[i] << '\n';
    }
}

} // namespace netoverlap
