#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gals {

// Thrown for malformed input files; the message carries a line number when
// one is known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Immutable undirected simple graph. Nodes are contiguous ids 0..n-1
// internally; the original file tokens are kept in node_names for output.
//
// Invariants: adjacency lists are sorted and symmetric, hold no self-loops
// and no duplicates, degree(i) == adj(i).size(), and the degree sum is 2m.
class Network {
public:
    // Builds from a deduplicated edge set over ids 0..n-1. Throws
    // std::invalid_argument on self-loops, duplicates, or out-of-range ids.
    Network(int node_count, std::vector<std::pair<int, int>> edges,
            std::vector<std::string> names);

    int node_count() const { return n_; }
    long long edge_count() const { return m_; }
    const std::vector<int>& adj(int i) const { return adj_[i]; }
    int degree(int i) const { return static_cast<int>(adj_[i].size()); }
    bool has_edge(int i, int j) const;

    const std::string& name(int i) const { return names_[i]; }
    // Returns -1 when no node carries the token.
    int id_of(const std::string& token) const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> token_to_id_;
};

// Reads "token token" edge lines. Blank lines are skipped and '#' starts a
// comment. Node ids are assigned in order of first appearance, duplicate
// edges collapse, and the result is independent of line order beyond that
// id assignment. Throws ParseError (with a line number) on lines that do
// not hold exactly two tokens, on self-loops, and on input with no edges.
Network parse_edge_list(std::istream& in);

// Reads the GML subset  graph [ node [ id I ... ] edge [ source S target T ... ] ].
// Unknown keys (including nested lists) are skipped. A node's token is its
// label when present, otherwise its id rendered in decimal. "directed 1"
// warns to stderr and the edges are symmetrized; edge weights are ignored
// with a warning. Throws ParseError on missing id/source/target, references
// to undeclared nodes, unbalanced brackets, self-loops, or an empty graph.
Network parse_gml(std::istream& in);

// Canonical serialization: one "token token" line per edge, ordered by
// internal ids. parse_edge_list of the output rebuilds the same graph over
// the same node names, though ids may renumber. Isolated nodes are lost:
// the format carries edges only.
void write_edge_list(std::ostream& out, const Network& net);

// Convenience wrappers that open the file and dispatch on the extension
// (".gml" vs anything else) unless format ("gml"/"edgelist") is given.
Network load_network(const std::string& path, const std::string& format = "");

} // namespace gals
