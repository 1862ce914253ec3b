#include "adjsem/graph.hpp"

#include <algorithm>
#include <sstream>

namespace adjsem {

Graph::Graph(std::vector<std::string> vertex_names) : names_(std::move(vertex_names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("empty vertex name");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate vertex: " + names_[i]);
    }
    adj_.assign(names_.size() * names_.size(), 0);
}

Graph Graph::empty_graph() { return Graph{}; }

Graph Graph::one_loop() {
    Graph g({"0"});
    g.add_edge(0, 0);
    return g;
}

std::optional<int> Graph::index_of(const std::string& vertex) const {
    auto it = index_.find(vertex);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::require_index(const std::string& vertex) const {
    auto i = index_of(vertex);
    if (!i) throw std::invalid_argument("unknown vertex: " + vertex);
    return *i;
}

bool Graph::has_edge(const std::string& a, const std::string& b) const {
    return has_edge(require_index(a), require_index(b));
}

void Graph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
        throw std::out_of_range("edge endpoint out of range");
    adj_[idx(a, b)] = 1;
}

void Graph::add_edge(const std::string& a, const std::string& b) {
    add_edge(require_index(a), require_index(b));
}

void Graph::add_undirected(const std::string& a, const std::string& b) {
    int i = require_index(a), j = require_index(b);
    add_edge(i, j);
    add_edge(j, i);
}

void Graph::add_loop(const std::string& a) {
    int i = require_index(a);
    add_edge(i, i);
}

int Graph::edge_count() const {
    int c = 0;
    for (auto v : adj_) c += v;
    return c;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < vertex_count(); ++a)
        for (int b = 0; b < vertex_count(); ++b)
            if (has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

bool Graph::is_reflexive() const {
    for (int a = 0; a < vertex_count(); ++a)
        if (!has_edge(a, a)) return false;
    return true;
}

bool Graph::is_symmetric() const {
    for (int a = 0; a < vertex_count(); ++a)
        for (int b = 0; b < vertex_count(); ++b)
            if (has_edge(a, b) && !has_edge(b, a)) return false;
    return true;
}

bool Graph::is_loopless() const {
    for (int a = 0; a < vertex_count(); ++a)
        if (has_edge(a, a)) return false;
    return true;
}

ParseError::ParseError(std::string message, int line_no)
    : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + message
                                     : std::move(message)),
      line(line_no) {}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    std::optional<Graph> g;
    while (std::getline(in, raw)) {
        ++line_no;
        auto toks = split_ws(strip_comment(raw));
        if (toks.empty()) continue;
        if (!g) {
            if (toks[0] != "vertices:")
                throw ParseError("expected 'vertices:' header", line_no);
            g.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
            continue;
        }
        try {
            if (toks[0] == "loop") {
                if (toks.size() != 2) throw ParseError("expected 'loop <vertex>'", line_no);
                g->add_loop(toks[1]);
            } else if (toks.size() == 3 && toks[1] == "->") {
                g->add_edge(toks[0], toks[2]);
            } else if (toks.size() == 3 && toks[1] == "--") {
                g->add_undirected(toks[0], toks[2]);
            } else {
                throw ParseError("unrecognized edge line", line_no);
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!g) throw ParseError("missing 'vertices:' header", line_no);
    return *g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices:";
    for (const auto& n : g.vertex_names()) out << ' ' << n;
    out << '\n';
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        if (g.has_edge(a, a)) out << "loop " << g.name(a) << '\n';
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.has_edge(a, b) && g.has_edge(b, a))
                out << g.name(a) << " -- " << g.name(b) << '\n';
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && g.has_edge(a, b) && !g.has_edge(b, a))
                out << g.name(a) << " -> " << g.name(b) << '\n';
    return out.str();
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (const auto& n : g.vertex_names()) out << "  \"" << n << "\";\n";
    for (auto [a, b] : g.edges())
        out << "  \"" << g.name(a) << "\" -> \"" << g.name(b) << "\";\n";
    out << "}\n";
    return out.str();
}

Graph product(const Graph& g, const Graph& h) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(g.vertex_count()) * h.vertex_count());
    for (const auto& a : g.vertex_names())
        for (const auto& b : h.vertex_names()) names.push_back("(" + a + "," + b + ")");
    Graph p(std::move(names));
    int nh = h.vertex_count();
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = 0; b < nh; ++b)
            for (int c = 0; c < g.vertex_count(); ++c)
                for (int d = 0; d < nh; ++d)
                    if (g.has_edge(a, c) && h.has_edge(b, d)) p.add_edge(a * nh + b, c * nh + d);
    return p;
}

Graph product_of_none() { return Graph::one_loop(); }

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& vertices) {
    std::vector<int> keep;
    keep.reserve(vertices.size());
    for (const auto& v : vertices) keep.push_back(g.require_index(v));
    Graph s(vertices);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

Graph reflexive_closure(const Graph& g) {
    Graph r = g;
    for (int a = 0; a < r.vertex_count(); ++a) r.add_edge(a, a);
    return r;
}

Graph symmetric_closure(const Graph& g) {
    Graph r = g;
    for (auto [a, b] : g.edges()) r.add_edge(b, a);
    return r;
}

namespace {

std::vector<std::string> numbered(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}

Graph complete_loopless(int n) {
    Graph g(numbered(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) g.add_edge(a, b);
    return g;
}

Graph c_graph(int k) {
    // Complete loopless graph on 0..k+1 with both directions of the pairs
    // {0,k+1}, {0,k}, {1,k+1} removed.
    Graph g(numbered(k + 2));
    auto drop = [&](int a, int b) { return (a == 0 && b == k + 1) || (a == 0 && b == k) || (a == 1 && b == k + 1); };
    for (int a = 0; a < k + 2; ++a)
        for (int b = 0; b < k + 2; ++b)
            if (a != b && !drop(std::min(a, b), std::max(a, b))) g.add_edge(a, b);
    return g;
}

}  // namespace

Graph catalog_graph(const std::string& name, std::optional<int> parameter) {
    auto need_param = [&](int lo) {
        if (!parameter || *parameter < lo)
            throw std::invalid_argument("catalog " + name + ": parameter must be >= " + std::to_string(lo));
        return *parameter;
    };
    if (name == "EMPTY") return Graph::empty_graph();
    if (name == "LOOP1") return Graph::one_loop();
    if (name == "C") return c_graph(need_param(2));
    if (name == "K") return complete_loopless(need_param(1));
    if (name == "U") {
        int n = need_param(1);
        Graph g(numbered(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) g.add_edge(a, b);
        return g;
    }
    if (name == "G1") {
        Graph g(numbered(4));
        g.add_edge("1", "2");
        g.add_loop("1");
        g.add_loop("2");
        g.add_loop("3");
        g.add_undirected("0", "1");
        g.add_undirected("2", "3");
        g.add_undirected("1", "3");
        return g;
    }
    if (name == "S1") {
        Graph g(numbered(4));
        g.add_loop("1");
        g.add_loop("2");
        g.add_loop("3");
        g.add_undirected("0", "1");
        g.add_undirected("1", "2");
        g.add_undirected("2", "3");
        return g;
    }
    if (name == "S2") {
        Graph g(numbered(2));
        g.add_loop("1");
        g.add_undirected("0", "1");
        return g;
    }
    if (name == "R1") {
        Graph g(numbered(3));
        g.add_edge("0", "1");
        g.add_loop("0");
        g.add_loop("1");
        g.add_loop("2");
        g.add_undirected("1", "2");
        g.add_undirected("0", "2");
        return g;
    }
    if (name == "RS1") {
        Graph g(numbered(3));
        g.add_loop("0");
        g.add_loop("1");
        g.add_loop("2");
        g.add_undirected("0", "1");
        g.add_undirected("1", "2");
        return g;
    }
    if (name == "P") {
        Graph g({"1", "2", "3"});
        g.add_edge("1", "2");
        g.add_edge("2", "3");
        g.add_loop("1");
        g.add_loop("2");
        g.add_loop("3");
        return g;
    }
    if (name == "CHAIN2") {
        Graph g(numbered(2));
        g.add_loop("0");
        g.add_loop("1");
        g.add_edge("0", "1");
        return g;
    }
    throw std::invalid_argument("unknown catalog graph: " + name);
}

std::vector<std::string> catalog_names() {
    return {"C", "G1", "S1", "S2", "R1", "RS1", "P", "CHAIN2", "K", "U", "LOOP1", "EMPTY"};
}

namespace {

struct VertexSignature {
    int out_deg = 0, in_deg = 0;
    bool loop = false;
    auto operator<=>(const VertexSignature&) const = default;
};

VertexSignature signature(const Graph& g, int v) {
    VertexSignature s;
    for (int b = 0; b < g.vertex_count(); ++b) {
        if (g.has_edge(v, b)) ++s.out_deg;
        if (g.has_edge(b, v)) ++s.in_deg;
    }
    s.loop = g.has_edge(v, v);
    return s;
}

bool extend_iso(const Graph& g, const Graph& h, std::vector<int>& map, std::vector<bool>& used, int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        if (signature(g, v) != signature(h, w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
            if (g.has_edge(v, u) != h.has_edge(w, map[u])) ok = false;
        }
        if (g.has_edge(v, v) != h.has_edge(w, w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_iso(g, h, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> graph_isomorphism(const Graph& g, const Graph& h, int cap) {
    if (g.vertex_count() != h.vertex_count()) return std::nullopt;
    if (g.vertex_count() > cap) throw std::invalid_argument("graph_isomorphism: vertex count over cap");
    std::vector<int> map(g.vertex_count(), -1);
    std::vector<bool> used(g.vertex_count(), false);
    if (extend_iso(g, h, map, used, 0)) return map;
    return std::nullopt;
}

}  // namespace adjsem
