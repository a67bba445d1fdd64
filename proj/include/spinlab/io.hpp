#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinlab/graph.hpp"
#include "spinlab/reduction.hpp"
#include "spinlab/spin_core.hpp"

namespace spinlab {

// Line-oriented text formats.  Blank lines and lines starting with '#' are
// ignored everywhere; anything else unexpected is a ParseError.
//
//   function:   "k <int>" then "w <k+1 rationals>"
//   hypergraph: "vertices <n>", one "e v1 ... vk" per edge,
//               optional trailing "terminals v ..."
//   graph:      "vertices <n>", then "g u v" lines
//   csp:        "vars <n>", then "c v1 ... vk" lines (repeats allowed)

struct HypergraphFile {
    Hypergraph h;
    std::vector<int> terminals;  // empty when no trailer present
};

SymmetricFunction read_function(std::istream& in);
HypergraphFile read_hypergraph(std::istream& in);
Graph read_graph(std::istream& in);
CspInstance read_csp(std::istream& in);

SymmetricFunction load_function(const std::string& path);
HypergraphFile load_hypergraph(const std::string& path);
Graph load_graph(const std::string& path);
CspInstance load_csp(const std::string& path);

std::string write_function(const SymmetricFunction& f);
std::string write_hypergraph(const Hypergraph& h, const std::vector<int>& terminals = {});
std::string write_graph(const Graph& g);
std::string write_csp(const CspInstance& inst);

// Command-line sub-syntaxes.
std::vector<int> parse_vertex_list(const std::string& s);        // "0,1,2"
AdmissibleCollection parse_conditioning(const std::string& s);   // "pin0=1,2;pin1=;eq=3,4|5,6"

}  // namespace spinlab
