#pragma once

#include <prs/graph.hpp>

#include <string_view>

namespace prs
{
    /// Parses a graph argument: a named graph, a graph6 string, or "@path"
    /// (a file holding graph6 or the "n m" edge-list format).
    ///
    /// Names are terms joined by 'u' (disjoint union), each an optional
    /// multiplicity followed by Kn, Ka,b, Cn, Pn or En (n isolated vertices):
    /// "K6", "C7", "K2,4", "2K2", "K3uK2", "K6uE1". Components are laid out
    /// left to right with the labelling of the standard generators.
    /// Names always contain a digit, which graph6 bodies never do.
    auto parse_graph_argument(std::string_view text) -> Graph;

    /// Just the named-graph language; throws FormatError on anything else.
    auto parse_named_graph(std::string_view text) -> Graph;
}
