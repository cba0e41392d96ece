#include "arcmodel/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace arcmodel {

std::string render_ascii(const ArcSet& s)
{
    if (s.empty())
        return "(empty diagram)\n";

    const std::vector<Endpoint> points = s.endpoints();
    std::map<Endpoint, std::size_t> column;
    std::string axis;
    for (const Endpoint& p : points) {
        if (!axis.empty())
            axis += "  ";
        column[p] = axis.size();
        axis += to_string(p);
    }

    // Widest chords first so nested arcs sit closer to the axis.
    std::vector<Arc> ordered(s.begin(), s.end());
    std::sort(ordered.begin(), ordered.end(), [&](const Arc& x, const Arc& y) {
        const std::size_t sx = column[x.right()] - column[x.left()];
        const std::size_t sy = column[y.right()] - column[y.left()];
        if (sx != sy)
            return sx > sy;
        return x < y;
    });

    std::ostringstream out;
    for (const Arc& u : ordered) {
        const std::size_t lo = column[u.left()];
        const std::size_t hi = column[u.right()];
        std::string row(hi + 1, ' ');
        row[lo] = u.left().is_minus_infinity() ? 'o' : '.';
        for (std::size_t i = lo + 1; i < hi; ++i)
            row[i] = '-';
        row[hi] = '.';
        out << row << '\n';
    }
    out << axis << '\n';
    return out.str();
}

std::string render_dot(const ArcSet& s)
{
    std::ostringstream out;
    out << "graph arcs {\n";
    out << "  rankdir=LR;\n";
    for (const Endpoint& p : s.endpoints()) {
        out << "  \"" << to_string(p) << "\"";
        if (p.is_minus_infinity())
            out << " [shape=box]";
        out << ";\n";
    }
    for (const Arc& u : s)
        out << "  \"" << to_string(u.left()) << "\" -- \"" << to_string(u.right()) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string quiver_text(const ChainQuiver& q)
{
    std::ostringstream out;
    std::vector<std::string> shape;
    for (const auto& chain : q.chains) {
        out << "A_" << chain.size() << ":";
        for (std::size_t i = 0; i < chain.size(); ++i)
            out << (i == 0 ? " " : " -> ") << to_string(chain[i]);
        out << '\n';
        shape.push_back("A_" + std::to_string(chain.size()));
    }
    out << "endomorphism algebra: ";
    if (shape.empty())
        out << "0";
    else
        for (std::size_t i = 0; i < shape.size(); ++i)
            out << (i == 0 ? "" : " x ") << "k[" << shape[i] << "]";
    out << '\n';
    return out.str();
}

std::string quiver_dot(const ChainQuiver& q)
{
    std::ostringstream out;
    out << "digraph quiver {\n";
    out << "  rankdir=LR;\n";
    for (const auto& chain : q.chains)
        for (const Arc& u : chain)
            out << "  \"" << to_string(u) << "\";\n";
    for (const auto& chain : q.chains)
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            out << "  \"" << to_string(chain[i]) << "\" -> \"" << to_string(chain[i + 1])
                << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace arcmodel
