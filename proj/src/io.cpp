#include "sci/io.hpp"

#include <fstream>
#include <sstream>

namespace sci {

namespace {

std::vector<int> parse_ints(const std::string& s, const std::string& ctx) {
    std::istringstream iss(s);
    std::vector<int> out;
    int x;
    while (iss >> x) out.push_back(x);
    std::string rest;
    if (iss.fail() && !iss.eof()) throw ParseError("bad integer in " + ctx + ": " + s);
    return out;
}

}  // namespace

GraphFile read_graph_text(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> pairs;
    enum class Mode { edges, halin, dh } mode = Mode::edges;
    GraphFile gf;
    HalinAnnotation halin;
    PruningSequence seq;
    bool have_halin = false, have_dh = false, have_base = false;

    while (std::getline(in, line)) {
        // strip trailing CR and surrounding whitespace
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string t = line.substr(start);
        if (t[0] == '#') {
            if (t == "#halin") mode = Mode::halin;
            else if (t == "#dh") mode = Mode::dh;
            continue;
        }
        if (n < 0) {
            auto hdr = parse_ints(t, "header");
            if (hdr.size() != 2) throw ParseError("expected header 'n m', got: " + t);
            n = hdr[0];
            m = hdr[1];
            if (n < 0 || m < 0) throw ParseError("negative header values");
            continue;
        }
        if (mode == Mode::edges) {
            auto e = parse_ints(t, "edge line");
            if (e.size() != 2) throw ParseError("expected edge 'u v', got: " + t);
            pairs.emplace_back(e[0], e[1]);
            continue;
        }
        auto colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'key: values' in annotation, got: " + t);
        std::string key = t.substr(0, colon);
        std::string val = t.substr(colon + 1);
        if (mode == Mode::halin) {
            have_halin = true;
            if (key == "tree") halin.tree_edges = parse_ints(val, "tree annotation");
            else if (key == "cycle") halin.cycle_order = parse_ints(val, "cycle annotation");
            else throw ParseError("unknown halin annotation key: " + key);
        } else {
            have_dh = true;
            if (key == "base") {
                auto b = parse_ints(val, "dh base");
                if (b.size() != 2) throw ParseError("dh base needs two vertices");
                seq.base = {b[0], b[1]};
                have_base = true;
            } else if (key == "seq") {
                std::istringstream iss(val);
                std::string op;
                int v, a;
                if (!(iss >> op >> v >> a)) throw ParseError("bad dh step: " + val);
                PruningStep st;
                if (op == "pendant") st.op = PruningStep::Op::pendant;
                else if (op == "true_twin") st.op = PruningStep::Op::true_twin;
                else if (op == "false_twin") st.op = PruningStep::Op::false_twin;
                else throw ParseError("unknown dh op: " + op);
                st.vertex = v;
                st.anchor = a;
                seq.steps.push_back(st);
            } else {
                throw ParseError("unknown dh annotation key: " + key);
            }
        }
    }
    if (n < 0) throw ParseError("empty input");
    if (static_cast<int>(pairs.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", found " +
                         std::to_string(pairs.size()));
    try {
        gf.graph = build_graph(n, pairs);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
    if (have_halin) gf.halin = halin;
    if (have_dh) {
        if (!have_base && !seq.steps.empty()) seq.base = {0, 1};
        gf.dh_sequence = seq;
    }
    return gf;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const GraphFile& gf) {
    const Graph& g = gf.graph;
    out << g.n << " " << g.m() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    if (gf.halin) {
        out << "#halin\n";
        out << "tree:";
        for (int e : gf.halin->tree_edges) out << " " << e;
        out << "\n";
        out << "cycle:";
        for (int v : gf.halin->cycle_order) out << " " << v;
        out << "\n";
    }
    if (gf.dh_sequence) {
        out << "#dh\n";
        out << "base: " << gf.dh_sequence->base.first << " " << gf.dh_sequence->base.second
            << "\n";
        for (const auto& st : gf.dh_sequence->steps) {
            const char* op = st.op == PruningStep::Op::pendant      ? "pendant"
                             : st.op == PruningStep::Op::true_twin ? "true_twin"
                                                                   : "false_twin";
            out << "seq: " << op << " " << st.vertex << " " << st.anchor << "\n";
        }
    }
}

void write_graph_file(const std::string& path, const GraphFile& gf) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    write_graph_text(out, gf);
}

StrongColoring read_coloring_file(const std::string& path, int m) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    StrongColoring c;
    c.colors.assign(m, -1);
    std::string line;
    int maxc = -1;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        auto v = parse_ints(line, "coloring line");
        if (v.size() != 2) throw ParseError("expected 'edge_id color', got: " + line);
        if (v[0] < 0 || v[0] >= m) throw ParseError("edge id out of range: " + line);
        if (v[1] < 0) throw ParseError("negative color: " + line);
        c.colors[v[0]] = v[1];
        maxc = std::max(maxc, v[1]);
    }
    for (int e = 0; e < m; ++e)
        if (c.colors[e] < 0) throw ParseError("edge " + std::to_string(e) + " uncolored");
    c.k = maxc + 1;
    return c;
}

void write_coloring_file(const std::string& path, const StrongColoring& c) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    for (size_t e = 0; e < c.colors.size(); ++e) out << e << " " << c.colors[e] << "\n";
}

std::string dot_color_name(int index) {
    static const char* names[16] = {"red",     "blue",   "green",  "orange", "purple", "brown",
                                    "cyan",    "magenta", "gold",  "pink",   "gray",   "olive",
                                    "navy",    "teal",   "maroon", "lime"};
    int base = index % 16;
    int round = index / 16;
    std::string name = names[base];
    if (round > 0) name += std::to_string(round + 1);
    return name;
}

void write_dot_file(const std::string& path, const Graph& g, const StrongColoring* c) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << "graph G {\n";
    for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        out << "  " << u << " -- " << v;
        if (c) out << " [color=\"" << dot_color_name(c->colors[e]) << "\", label=" << c->colors[e]
                   << "]";
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace sci
