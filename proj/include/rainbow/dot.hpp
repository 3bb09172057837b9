#pragma once

#include "rainbow/colouring.hpp"

namespace rainbow {

/// Graphviz export with a fixed palette; colours past the palette wrap
/// around. Output is byte-stable for a fixed input.
inline void export_dot(std::ostream& out, const Graph& g,
                       const EdgeColouring* colouring = nullptr)
{
    static const char* kPalette[] = {
        "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
        "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62",
        "#8da0cb", "#e78ac3", "#a6d854", "#ffd92f", "#e5c494",
        "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
    };
    constexpr int kPaletteSize = 20;
    if (colouring)
        check_total(g, *colouring);
    out << "graph g {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << ";\n";
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        out << "  " << u << " -- " << v;
        if (colouring) {
            int c = colouring->colour[i];
            out << " [color=\"" << kPalette[c % kPaletteSize] << "\", label=\"" << c << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace rainbow
