#ifndef RCGRAPH_RENDER_HPP
#define RCGRAPH_RENDER_HPP

#include <iomanip>
#include <sstream>
#include <string>

#include "rcgraph/graph.hpp"

namespace rcgraph {

// ASCII grid of a graph. Layout, byte for byte:
//   - first line: two spaces, then every column label right-aligned to
//     width 2 (so "   1 2 3" for n = 3);
//   - one line per row: the row label right-aligned to width 2, then one
//     width-2 cell per column: '+' at a crossing, '.' at an empty place
//     inside the staircase (row + col <= n), blank outside it;
//   - trailing spaces trimmed, every line ends with '\n'.
// n defaults to the smallest staircase containing all crossings.
inline std::string render_ascii(const Graph& g, int n = 0)
{
    if (n <= 0)
        n = std::max(2, g.staircase_bound());

    auto trim = [](std::string line) {
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        return line;
    };

    std::ostringstream out;
    {
        std::ostringstream header;
        header << "  ";
        for (int j = 1; j <= n; ++j)
            header << std::setw(2) << j;
        out << trim(header.str()) << '\n';
    }
    for (int i = 1; i <= n; ++i) {
        std::ostringstream line;
        line << std::setw(2) << i;
        for (int j = 1; j <= n; ++j) {
            char cell = ' ';
            if (g.contains({i, j}))
                cell = '+';
            else if (i + j <= n)
                cell = '.';
            line << std::setw(2) << cell;
        }
        out << trim(line.str()) << '\n';
    }
    return out.str();
}

}  // namespace rcgraph

#endif
