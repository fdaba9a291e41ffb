#include "gica/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

namespace gica {

namespace {

constexpr const char* kCellGlyphs = ".#o+*%@&";
constexpr const char* kLinkGlyphs = "xyzuvw";

char cell_glyph(int value) {
    if (value < 0 || value >= 8) throw std::invalid_argument("no glyph for component value >= 8");
    return kCellGlyphs[value];
}

struct Legend {
    std::map<Permutation, char> glyphs;  // non-identity link values

    char link_glyph(const Permutation& p) const {
        if (p.is_identity()) return ' ';
        return glyphs.at(p);
    }
};

Legend build_legend(const std::vector<GaugedConfiguration>& trace, int lo, int hi) {
    std::set<Permutation> values;
    for (const auto& config : trace)
        for (int x = lo; x < hi; ++x) {
            const Permutation p = config.link(x);
            if (!p.is_identity()) values.insert(p);
        }
    Legend legend;
    size_t next = 0;
    for (const Permutation& p : values) {
        if (next >= 6) throw std::invalid_argument("more than 6 distinct link values in one trace");
        legend.glyphs[p] = kLinkGlyphs[next++];
    }
    return legend;
}

/// Cell range [lo, hi) covering every non-quiescent site and link of the
/// trace; rings use the full circumference.
std::pair<int, int> viewport(const std::vector<GaugedConfiguration>& trace) {
    const Topology& topo = trace.front().topology();
    if (topo.is_ring()) return {0, topo.ring_size()};
    bool any = false;
    int lo = 0, hi = 1;
    auto grow = [&](int a, int b) {
        if (!any) {
            lo = a;
            hi = b;
            any = true;
        } else {
            lo = std::min(lo, a);
            hi = std::max(hi, b);
        }
    };
    for (const auto& config : trace) {
        for (int x : config.matter().support()) grow(x, x + 1);
        for (int x : config.field_support()) grow(x, x + 2);
    }
    return {lo, hi};
}

std::string render_text(const std::vector<GaugedConfiguration>& trace) {
    const auto [lo, hi] = viewport(trace);
    const bool ring = trace.front().topology().is_ring();
    const Legend legend = build_legend(trace, lo, hi);
    const int alphabet = trace.front().alphabet_size();

    std::string out;
    out += "# spacetime diagram, time flows upward\n";
    out += "# cell glyphs (value left|right): ";
    for (int v = 0; v < alphabet; ++v) {
        if (v) out += " ";
        out += std::to_string(v);
        out += "=";
        out += cell_glyph(v);
    }
    out += "\n# field glyphs: id=' '";
    for (const auto& [perm, glyph] : legend.glyphs) {
        out += " ";
        out += perm.cycle_string();
        out += "=";
        out += glyph;
    }
    out += "\n";
    if (!ring) {
        out += "# window x = " + std::to_string(lo) + ".." + std::to_string(hi - 1) + "\n";
    }

    for (size_t row = trace.size(); row-- > 0;) {
        const GaugedConfiguration& config = trace[row];
        char label[16];
        std::snprintf(label, sizeof(label), "t%4zu |", row);
        out += label;
        for (int x = lo; x < hi; ++x) {
            const Cell cell = config.cell(x);
            out += cell_glyph(cell.left);
            out += cell_glyph(cell.right);
            if (ring || x + 1 < hi) out += legend.link_glyph(config.link(x));
        }
        out += "|\n";
    }
    return out;
}

constexpr const char* kCellFill[8] = {"#ffffff", "#1a1a1a", "#9e9e9e", "#d32f2f",
                                      "#1976d2", "#388e3c", "#f57c00", "#7b1fa2"};
constexpr const char* kLinkFill[6] = {"#2e7d32", "#66bb6a", "#a5d6a7",
                                      "#00695c", "#4db6ac", "#b2dfdb"};

std::string render_svg(const std::vector<GaugedConfiguration>& trace) {
    const auto [lo, hi] = viewport(trace);
    const bool ring = trace.front().topology().is_ring();
    const Legend legend = build_legend(trace, lo, hi);

    const int cell_w = 20, link_w = 10, row_h = 24, pad = 4;
    const int columns = hi - lo;
    const int links = ring ? columns : columns - 1;
    const int width = 2 * pad + columns * cell_w + links * link_w;
    const int height = 2 * pad + static_cast<int>(trace.size()) * row_h;

    std::map<Permutation, int> link_index;
    int next = 0;
    for (const auto& [perm, glyph] : legend.glyphs) link_index[perm] = next++;

    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    out += buf;
    for (size_t row = 0; row < trace.size(); ++row) {
        const GaugedConfiguration& config = trace[row];
        const int y = pad + static_cast<int>(trace.size() - 1 - row) * row_h;
        int x_px = pad;
        for (int x = lo; x < hi; ++x) {
            const Cell cell = config.cell(x);
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\" "
                          "stroke=\"#777\"/>\n",
                          x_px, y, cell_w / 2, row_h - 4, kCellFill[cell.left % 8]);
            out += buf;
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\" "
                          "stroke=\"#777\"/>\n",
                          x_px + cell_w / 2, y, cell_w / 2, row_h - 4, kCellFill[cell.right % 8]);
            out += buf;
            x_px += cell_w;
            if (ring || x + 1 < hi) {
                const Permutation p = config.link(x);
                if (!p.is_identity()) {
                    std::snprintf(buf, sizeof(buf),
                                  "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                                  "fill=\"%s\"/>\n",
                                  x_px + 1, y + (row_h - 4) / 4, link_w - 2, (row_h - 4) / 2,
                                  kLinkFill[link_index[p] % 6]);
                    out += buf;
                }
                x_px += link_w;
            }
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string render_spacetime(const std::vector<GaugedConfiguration>& trace, DiagramFormat format) {
    if (trace.empty()) throw std::invalid_argument("cannot render an empty trace");
    for (const auto& config : trace)
        if (config.topology() != trace.front().topology())
            throw std::invalid_argument("trace mixes topologies");
    return format == DiagramFormat::Text ? render_text(trace) : render_svg(trace);
}

}  // namespace gica
