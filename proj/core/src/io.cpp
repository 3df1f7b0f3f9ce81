#include "hamiltonica/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hamiltonica {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j]) v |= 1;
        }
        out.push_back(char(v + 63));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6 writer");
    }
    std::vector<bool> bits;
    bits.reserve((size_t)n * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("truncated graph6");
        int c = (unsigned char)s[pos++];
        if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 byte");
        return c - 63;
    };
    int n;
    if (!s.empty() && (unsigned char)s[0] == 126) {
        ++pos;
        if (s.size() > 1 && (unsigned char)s[1] == 126)
            throw std::invalid_argument("graph6 n >= 2^18 unsupported");
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    std::vector<std::pair<int, int>> edges;
    int have = 0, buf = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                buf = next();
                have = 6;
            }
            --have;
            if ((buf >> have) & 1) edges.emplace_back(u, v);
        }
    return Graph(n, edges);
}

ordered_json label_to_json(const VertexLabel& l) {
    ordered_json j;
    switch (l.kind()) {
        case VertexLabel::Kind::Plain:
            j["kind"] = "plain";
            j["name"] = l.name();
            break;
        case VertexLabel::Kind::TDelta:
            j["kind"] = "tdelta";
            j["role"] = role_name(l.role());
            if (role_is_indexed(l.role())) j["index"] = l.index();
            break;
        case VertexLabel::Kind::ProductPair:
            j["kind"] = "pair";
            j["left"] = label_to_json(l.left());
            j["right"] = label_to_json(l.right());
            break;
    }
    return j;
}

VertexLabel label_from_json(const json& j) {
    std::string kind = j.at("kind");
    if (kind == "plain") return VertexLabel::plain(j.at("name"));
    if (kind == "tdelta") {
        TDeltaRole role = role_from_name(j.at("role"));
        int index = role_is_indexed(role) ? (int)j.at("index") : 0;
        return VertexLabel::tdelta(role, index);
    }
    if (kind == "pair")
        return VertexLabel::pair(label_from_json(j.at("left")),
                                 label_from_json(j.at("right")));
    throw std::invalid_argument("unknown label kind: " + kind);
}

ordered_json to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        ordered_json labels = ordered_json::object();
        for (const auto& [v, l] : g.labels())
            labels[std::to_string(v)] = label_to_json(l);
        j["labels"] = std::move(labels);
    }
    return j;
}

Graph graph_from_json(const json& j) {
    int n = j.at("n");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back((int)e.at(0), (int)e.at(1));
    std::map<int, VertexLabel> labels;
    if (j.contains("labels"))
        for (const auto& [k, v] : j.at("labels").items())
            labels.emplace(std::stoi(k), label_from_json(v));
    return Graph(n, edges, std::move(labels));
}

std::string to_json_string(const Graph& g) { return to_json(g).dump(); }

Graph graph_from_json_string(const std::string& s) {
    return graph_from_json(json::parse(s));
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  v" << v;
        if (const VertexLabel* l = g.label(v))
            out << " [label=\"" << l->text() << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::runtime_error("empty graph file: " + path);
    // '{' is also a valid graph6 leading byte (n = 60), so require a JSON
    // object key to follow before treating the file as JSON
    if (text[first] == '{') {
        size_t next = text.find_first_not_of(" \t\r\n", first + 1);
        if (next != std::string::npos && text[next] == '"')
            return graph_from_json_string(text);
    }
    size_t end = text.find_first_of("\r\n", first);
    return from_graph6(text.substr(first, end - first));
}

void write_graph_file(const Graph& g, const std::string& path,
                      const std::string& format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (format == "graph6")
        out << to_graph6(g) << "\n";
    else if (format == "json")
        out << to_json(g).dump(2) << "\n";
    else if (format == "dot")
        out << to_dot(g);
    else
        throw std::invalid_argument("unknown format: " + format);
}

}  // namespace hamiltonica
