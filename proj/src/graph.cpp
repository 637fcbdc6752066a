#include "gals/graph.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace gals {

Network::Network(int node_count, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> names)
    : n_(node_count), adj_(node_count), names_(std::move(names)) {
    if (node_count < 0) throw std::invalid_argument("negative node count");
    if (!names_.empty() && static_cast<int>(names_.size()) != n_)
        throw std::invalid_argument("name list does not match node count");
    if (names_.empty()) {
        names_.reserve(n_);
        for (int i = 0; i < n_; ++i) names_.push_back(std::to_string(i));
    }
    for (int i = 0; i < n_; ++i) {
        if (!token_to_id_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate node token: " + names_[i]);
    }
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b)
            throw std::invalid_argument("self-loop on node " + names_[a]);
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    m_ = static_cast<long long>(edges.size());
    for (int i = 0; i < n_; ++i) {
        std::sort(adj_[i].begin(), adj_[i].end());
        if (std::adjacent_find(adj_[i].begin(), adj_[i].end()) != adj_[i].end())
            throw std::invalid_argument("duplicate edge at node " + names_[i]);
    }
}

bool Network::has_edge(int i, int j) const {
    const std::vector<int>& a = adj_[i];
    return std::binary_search(a.begin(), a.end(), j);
}

int Network::id_of(const std::string& token) const {
    auto it = token_to_id_.find(token);
    return it == token_to_id_.end() ? -1 : it->second;
}

namespace {

ParseError at_line(int line, const std::string& what) {
    return ParseError("line " + std::to_string(line) + ": " + what);
}

struct EdgeAccumulator {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;

    int intern(const std::string& token) {
        auto it = ids.find(token);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(names.size());
        ids.emplace(token, id);
        names.push_back(token);
        return id;
    }

    // Returns false when the pair was already present.
    bool add(int a, int b) {
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) return false;
        edges.emplace_back(key.first, key.second);
        return true;
    }
};

} // namespace

Network parse_edge_list(std::istream& in) {
    EdgeAccumulator acc;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string a, b, extra;
        if (!(line >> a)) continue;
        if (!(line >> b))
            throw at_line(line_no, "expected two tokens, got one");
        if (line >> extra)
            throw at_line(line_no, "expected two tokens, got more");
        if (a == b) throw at_line(line_no, "self-loop on '" + a + "'");
        // First token interned first so ids follow appearance order.
        int ia = acc.intern(a);
        int ib = acc.intern(b);
        acc.add(ia, ib);
    }
    if (acc.edges.empty()) throw ParseError("no edges in input");
    int node_count = static_cast<int>(acc.names.size());
    return Network(node_count, std::move(acc.edges), std::move(acc.names));
}

namespace {

// GML lexer: brackets, quoted strings, or bare words.
struct GmlLexer {
    std::istream& in;
    std::string pending;

    bool next(std::string& tok) {
        if (!pending.empty()) {
            tok = std::move(pending);
            pending.clear();
            return true;
        }
        char c;
        while (in.get(c)) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c == '[' || c == ']') {
                tok.assign(1, c);
                return true;
            }
            if (c == '"') {
                tok.clear();
                bool terminated = false;
                while (in.get(c)) {
                    if (c == '"') {
                        terminated = true;
                        break;
                    }
                    tok.push_back(c);
                }
                if (!terminated) throw ParseError("unterminated string");
                return true;
            }
            tok.assign(1, c);
            while (in.get(c)) {
                if (std::isspace(static_cast<unsigned char>(c))) break;
                if (c == '[' || c == ']' || c == '"') {
                    pending.assign(1, c);
                    break;
                }
                tok.push_back(c);
            }
            return true;
        }
        return false;
    }
};

// Consumes a value (scalar or bracketed list) after an unknown key.
void skip_gml_value(GmlLexer& lex) {
    std::string tok;
    if (!lex.next(tok)) throw ParseError("key with no value");
    if (tok != "[") return;
    int depth = 1;
    while (depth > 0) {
        if (!lex.next(tok)) throw ParseError("unbalanced brackets");
        if (tok == "[") ++depth;
        if (tok == "]") --depth;
    }
}

long long parse_gml_int(GmlLexer& lex, const std::string& key) {
    std::string tok;
    if (!lex.next(tok)) throw ParseError(key + " with no value");
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer for " + key + ": '" + tok + "'");
    }
}

} // namespace

Network parse_gml(std::istream& in) {
    GmlLexer lex{in, {}};
    std::string tok;

    bool saw_graph = false;
    while (lex.next(tok)) {
        if (tok == "graph") {
            saw_graph = true;
            break;
        }
        skip_gml_value(lex);
    }
    if (!saw_graph) throw ParseError("no graph block");
    if (!lex.next(tok) || tok != "[") throw ParseError("graph without '['");

    std::unordered_map<long long, int> gml_ids;
    std::vector<std::string> labels;
    struct RawEdge {
        long long source, target;
    };
    std::vector<RawEdge> raw_edges;
    bool directed = false;
    bool weights_seen = false;
    bool closed = false;

    while (lex.next(tok)) {
        if (tok == "]") {
            closed = true;
            break;
        }
        if (tok == "directed") {
            directed = parse_gml_int(lex, "directed") != 0;
        } else if (tok == "node") {
            if (!lex.next(tok) || tok != "[") throw ParseError("node without '['");
            long long id = 0;
            bool has_id = false;
            std::string label;
            bool has_label = false;
            while (true) {
                if (!lex.next(tok)) throw ParseError("unbalanced brackets");
                if (tok == "]") break;
                if (tok == "id") {
                    id = parse_gml_int(lex, "id");
                    has_id = true;
                } else if (tok == "label") {
                    if (!lex.next(label)) throw ParseError("label with no value");
                    has_label = true;
                } else {
                    skip_gml_value(lex);
                }
            }
            if (!has_id) throw ParseError("node without id");
            int internal = static_cast<int>(labels.size());
            if (!gml_ids.emplace(id, internal).second)
                throw ParseError("duplicate node id " + std::to_string(id));
            labels.push_back(has_label ? label : std::to_string(id));
        } else if (tok == "edge") {
            if (!lex.next(tok) || tok != "[") throw ParseError("edge without '['");
            long long source = 0, target = 0;
            bool has_source = false, has_target = false;
            while (true) {
                if (!lex.next(tok)) throw ParseError("unbalanced brackets");
                if (tok == "]") break;
                if (tok == "source") {
                    source = parse_gml_int(lex, "source");
                    has_source = true;
                } else if (tok == "target") {
                    target = parse_gml_int(lex, "target");
                    has_target = true;
                } else if (tok == "weight" || tok == "value") {
                    weights_seen = true;
                    skip_gml_value(lex);
                } else {
                    skip_gml_value(lex);
                }
            }
            if (!has_source) throw ParseError("edge without source");
            if (!has_target) throw ParseError("edge without target");
            raw_edges.push_back({source, target});
        } else {
            skip_gml_value(lex);
        }
    }
    if (!closed) throw ParseError("unbalanced brackets");

    if (directed)
        std::cerr << "warning: directed graph symmetrized to undirected\n";
    if (weights_seen) std::cerr << "warning: edge weights ignored\n";

    EdgeAccumulator acc;
    for (const RawEdge& e : raw_edges) {
        auto s = gml_ids.find(e.source);
        auto t = gml_ids.find(e.target);
        if (s == gml_ids.end())
            throw ParseError("edge references unknown node " +
                             std::to_string(e.source));
        if (t == gml_ids.end())
            throw ParseError("edge references unknown node " +
                             std::to_string(e.target));
        if (s->second == t->second)
            throw ParseError("self-loop on node " + std::to_string(e.source));
        // Parallel edges collapse; under directed input the two
        // orientations collapse to one undirected edge.
        acc.add(s->second, t->second);
    }
    if (acc.edges.empty()) throw ParseError("no edges in input");
    int node_count = static_cast<int>(labels.size());
    try {
        return Network(node_count, std::move(acc.edges), std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void write_edge_list(std::ostream& out, const Network& net) {
    for (int i = 0; i < net.node_count(); ++i)
        for (int j : net.adj(i))
            if (i < j) out << net.name(i) << ' ' << net.name(j) << '\n';
}

Network load_network(const std::string& path, const std::string& format) {
    std::string kind = format;
    if (kind.empty()) {
        auto dot = path.rfind('.');
        std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
        kind = ext == "gml" ? "gml" : "edgelist";
    }
    if (kind != "gml" && kind != "edgelist")
        throw std::invalid_argument("unknown graph format: " + kind);
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open " + path);
    try {
        return kind == "gml" ? parse_gml(in) : parse_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

} // namespace gals
