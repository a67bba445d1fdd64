#include "spinlab/io.hpp"

#include <fstream>
#include <sstream>

namespace spinlab {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

// Next meaningful line as tokens; empty vector at end of stream.
std::vector<std::string> next_tokens(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        return toks;
    }
    return {};
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + ": expected an integer, got \"" + s + "\"");
    }
}

std::vector<int> parse_ints(const std::vector<std::string>& toks, std::size_t from,
                            const char* what) {
    std::vector<int> out;
    for (std::size_t i = from; i < toks.size(); ++i) out.push_back(parse_int(toks[i], what));
    return out;
}

}  // namespace

SymmetricFunction read_function(std::istream& in) {
    auto kline = next_tokens(in);
    if (kline.size() != 2 || kline[0] != "k")
        throw ParseError("function file must start with \"k <arity>\"");
    const int k = parse_int(kline[1], "arity");
    if (k < 1) throw ParseError("arity must be positive");

    auto wline = next_tokens(in);
    if (wline.empty() || wline[0] != "w")
        throw ParseError("function file needs a \"w <weights>\" line");
    if ((int)wline.size() != k + 2)
        throw ParseError("expected " + std::to_string(k + 1) + " weights, got " +
                         std::to_string(wline.size() - 1));
    std::vector<Rat> w;
    for (int i = 1; i <= k + 1; ++i) {
        try {
            w.push_back(parse_rat(wline[i]));
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    }
    if (!next_tokens(in).empty()) throw ParseError("trailing content after the weight line");
    return SymmetricFunction(k, std::move(w));
}

HypergraphFile read_hypergraph(std::istream& in) {
    auto nline = next_tokens(in);
    if (nline.size() != 2 || nline[0] != "vertices")
        throw ParseError("hypergraph file must start with \"vertices <n>\"");
    const int n = parse_int(nline[1], "vertex count");
    if (n < 0) throw ParseError("vertex count must be nonnegative");

    HypergraphFile out;
    out.h = Hypergraph(n);
    for (auto toks = next_tokens(in); !toks.empty(); toks = next_tokens(in)) {
        if (toks[0] == "e") {
            try {
                out.h.add_edge(parse_ints(toks, 1, "edge vertex"));
            } catch (const ParseError&) {
                throw;
            } catch (const SpinError& e) {
                throw ParseError(e.what());
            }
        } else if (toks[0] == "terminals") {
            out.terminals = parse_ints(toks, 1, "terminal");
            for (int v : out.terminals)
                if (v < 0 || v >= n) throw ParseError("terminal out of range");
            if (!next_tokens(in).empty())
                throw ParseError("the terminals trailer must be the last line");
            return out;
        } else {
            throw ParseError("unexpected directive \"" + toks[0] + "\" in hypergraph file");
        }
    }
    return out;
}

Graph read_graph(std::istream& in) {
    auto nline = next_tokens(in);
    if (nline.size() != 2 || nline[0] != "vertices")
        throw ParseError("graph file must start with \"vertices <n>\"");
    const int n = parse_int(nline[1], "vertex count");
    if (n < 0) throw ParseError("vertex count must be nonnegative");

    Graph g(n);
    for (auto toks = next_tokens(in); !toks.empty(); toks = next_tokens(in)) {
        if (toks[0] != "g" || toks.size() != 3)
            throw ParseError("graph edges are \"g u v\" lines");
        try {
            g.add_edge(parse_int(toks[1], "endpoint"), parse_int(toks[2], "endpoint"));
        } catch (const ParseError&) {
            throw;
        } catch (const SpinError& e) {
            throw ParseError(e.what());
        }
    }
    return g;
}

CspInstance read_csp(std::istream& in) {
    auto nline = next_tokens(in);
    if (nline.size() != 2 || nline[0] != "vars")
        throw ParseError("CSP file must start with \"vars <n>\"");
    CspInstance inst;
    inst.vars = parse_int(nline[1], "variable count");
    if (inst.vars < 0) throw ParseError("variable count must be nonnegative");

    for (auto toks = next_tokens(in); !toks.empty(); toks = next_tokens(in)) {
        if (toks[0] != "c" || toks.size() < 2)
            throw ParseError("CSP constraints are \"c v1 ... vk\" lines");
        auto slots = parse_ints(toks, 1, "constraint variable");
        for (int v : slots)
            if (v < 0 || v >= inst.vars) throw ParseError("constraint variable out of range");
        inst.constraints.push_back(std::move(slots));
    }
    return inst;
}

namespace {
template <typename T>
T load(const std::string& path, T (*reader)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    return reader(in);
}
}  // namespace

SymmetricFunction load_function(const std::string& path) { return load(path, read_function); }
HypergraphFile load_hypergraph(const std::string& path) { return load(path, read_hypergraph); }
Graph load_graph(const std::string& path) { return load(path, read_graph); }
CspInstance load_csp(const std::string& path) { return load(path, read_csp); }

std::string write_function(const SymmetricFunction& f) {
    std::ostringstream out;
    out << "k " << f.k << "\nw";
    for (const Rat& x : f.w) out << ' ' << to_frac(x);
    out << '\n';
    return out.str();
}

std::string write_hypergraph(const Hypergraph& h, const std::vector<int>& terminals) {
    std::ostringstream out;
    out << "vertices " << h.n << '\n';
    for (const auto& e : h.edges) {
        out << 'e';
        for (int v : e) out << ' ' << v;
        out << '\n';
    }
    if (!terminals.empty()) {
        out << "terminals";
        for (int v : terminals) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.n << '\n';
    for (auto [u, v] : g.edges) out << "g " << u << ' ' << v << '\n';
    return out.str();
}

std::string write_csp(const CspInstance& inst) {
    std::ostringstream out;
    out << "vars " << inst.vars << '\n';
    for (const auto& c : inst.constraints) {
        out << 'c';
        for (int v : c) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur, ',')) {
        if (cur.empty()) throw ParseError("empty entry in vertex list \"" + s + "\"");
        out.push_back(parse_int(cur, "vertex"));
    }
    return out;
}

AdmissibleCollection parse_conditioning(const std::string& s) {
    AdmissibleCollection cond;
    std::string field;
    std::istringstream ss(s);
    while (std::getline(ss, field, ';')) {
        if (field.empty()) continue;
        auto eqpos = field.find('=');
        if (eqpos == std::string::npos)
            throw ParseError("conditioning fields look like \"pin0=...\": \"" + field + "\"");
        const std::string key = field.substr(0, eqpos);
        const std::string val = field.substr(eqpos + 1);
        if (key == "pin0") {
            if (!val.empty()) cond.pin0 = parse_vertex_list(val);
        } else if (key == "pin1") {
            if (!val.empty()) cond.pin1 = parse_vertex_list(val);
        } else if (key == "eq") {
            std::string block;
            std::istringstream bs(val);
            while (std::getline(bs, block, '|'))
                if (!block.empty()) cond.eq_blocks.push_back(parse_vertex_list(block));
        } else {
            throw ParseError("unknown conditioning field \"" + key + "\"");
        }
    }
    return cond;
}

}  // namespace spinlab
