#include "hive/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hive {

namespace {

std::string cellLabel(const Board& b, const Hex& h, const RenderOptions& opts) {
    const Stack* st = b.stackAt(h);
    if (!st) return "";
    const Piece& top = st->back();
    std::string s;
    s += colorChar(top.owner);
    s += kindChar(top.kind);
    if (st->size() > 1)
        s += std::to_string(st->size());
    else if (opts.showIds)
        s += std::to_string(top.id);
    return s;
}

}  // namespace

std::string renderAscii(const Board& b, const RenderOptions& opts) {
    if (b.stacks().empty() && opts.overlay.empty()) return "(empty board)\n";
    int qmin = 1 << 28, qmax = -(1 << 28), rmin = 1 << 28, rmax = -(1 << 28);
    auto widen = [&](const Hex& h) {
        qmin = std::min(qmin, h.q);
        qmax = std::max(qmax, h.q);
        rmin = std::min(rmin, h.r);
        rmax = std::max(rmax, h.r);
    };
    for (const auto& [hex, st] : b.stacks()) widen(hex);
    for (const auto& [hex, label] : opts.overlay) widen(hex);
    qmin -= 1; qmax += 1; rmin -= 1; rmax += 1;

    std::ostringstream out;
    out << "to_move=" << colorChar(b.toMove()) << " ply=" << b.ply()
        << " outcome=" << outcomeName(outcome(b)) << "\n";
    const int cell = 6;
    for (int r = rmin; r <= rmax; ++r) {
        // Stagger rows so the 6-neighborhood reads correctly.
        std::string indent(static_cast<std::size_t>((r - rmin) * cell / 2), ' ');
        out << indent;
        std::ostringstream row;
        for (int q = qmin; q <= qmax; ++q) {
            Hex h{q, r};
            std::string label = cellLabel(b, h, opts);
            auto ov = opts.overlay.find(h);
            if (ov != opts.overlay.end())
                label = label.empty() ? ov->second : label + "*";
            if (label.empty()) label = b.occupied(h) ? "?" : ".";
            if (static_cast<int>(label.size()) > cell - 1) label.resize(cell - 1);
            int pad = cell - static_cast<int>(label.size());
            row << label << std::string(static_cast<std::size_t>(pad), ' ');
        }
        std::string line = row.str();
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "   | r=" << r << " q>=" << qmin << "\n";
    }
    return out.str();
}

std::string renderSvg(const Board& b, const RenderOptions& opts) {
    // Pointy-top hexes; axial -> pixel.
    const double size = 24.0;
    const double sqrt3 = 1.7320508075688772;
    auto cx = [&](const Hex& h) { return size * sqrt3 * (h.q + h.r / 2.0); };
    auto cy = [&](const Hex& h) { return size * 1.5 * h.r; };

    double xmin = 1e9, xmax = -1e9, ymin = 1e9, ymax = -1e9;
    auto widen = [&](const Hex& h) {
        xmin = std::min(xmin, cx(h) - 2 * size);
        xmax = std::max(xmax, cx(h) + 2 * size);
        ymin = std::min(ymin, cy(h) - 2 * size);
        ymax = std::max(ymax, cy(h) + 2 * size);
    };
    for (const auto& [hex, st] : b.stacks()) widen(hex);
    for (const auto& [hex, label] : opts.overlay) widen(hex);
    if (b.stacks().empty() && opts.overlay.empty()) { xmin = ymin = -50; xmax = ymax = 50; }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << xmin << " " << ymin << " "
        << (xmax - xmin) << " " << (ymax - ymin) << "\">\n";
    std::vector<Hex> hexes;
    for (const auto& [hex, st] : b.stacks()) hexes.push_back(hex);
    std::sort(hexes.begin(), hexes.end());
    for (const Hex& h : hexes) {
        const Stack& st = *b.stackAt(h);
        const Piece& top = st.back();
        const double x = cx(h), y = cy(h);
        out << "<polygon points=\"";
        for (int k = 0; k < 6; ++k) {
            const double a = 3.14159265358979 / 180.0 * (60.0 * k - 30.0);
            out << (x + size * 0.95 * std::cos(a)) << "," << (y + size * 0.95 * std::sin(a));
            if (k != 5) out << " ";
        }
        const bool black = top.owner == Color::Black;
        out << "\" fill=\"" << (black ? "#444444" : "#eeeecc")
            << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << x << "\" y=\"" << (y + 4) << "\" text-anchor=\"middle\" font-size=\"12\" fill=\""
            << (black ? "#ffffff" : "#000000") << "\">" << kindChar(top.kind);
        if (st.size() > 1) out << static_cast<int>(st.size());
        out << "</text>\n";
    }
    for (const auto& [h, label] : opts.overlay) {
        out << "<text x=\"" << cx(h) << "\" y=\"" << (cy(h) - size * 0.55)
            << "\" text-anchor=\"middle\" font-size=\"9\" fill=\"#aa2222\">" << label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace hive
