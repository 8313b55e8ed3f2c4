#include "knotpad/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace knotpad {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Top matching as (left, right) pairs, 1-based.
std::vector<std::pair<int, int>> top_caps(const PlatDiagram& p) {
    std::vector<std::pair<int, int>> caps;
    const auto partner = p.top_partner();
    for (int pos = 1; pos <= 2 * p.m; ++pos)
        if (partner[pos] > pos) caps.push_back({pos, partner[pos]});
    return caps;
}

}  // namespace

std::string render_plat_ascii(const PlatDiagram& p) {
    const int w = 2 * p.m;
    const int cell = 6;
    const int width = cell * w;
    auto col = [&](int pos) { return cell * (pos - 1) + cell / 2; };
    std::vector<std::string> lines;
    // top caps: outer arc first, then the nested ones
    const auto caps = top_caps(p);
    for (int layer = 0; layer < 2; ++layer) {
        std::string line(width, ' ');
        for (int pos = 1; pos <= w; ++pos) line[col(pos)] = '|';
        bool any = false;
        for (auto [a, b] : caps) {
            const bool outer = b - a > 1;
            if (outer != (layer == 0)) continue;
            any = true;
            line[col(a)] = '+';
            line[col(b)] = '+';
            for (int c = col(a) + 1; c < col(b); ++c)
                if (line[c] != '|' || outer) line[c] = '-';
        }
        if (layer == 0 && any) {
            // positions strictly inside the outer arc do not reach this line
            for (int pos = 2; pos < w; ++pos) line[col(pos)] = '-';
        }
        if (any) lines.push_back("     " + line);
    }
    for (int r = p.n() - 1; r >= 0; --r) {
        std::string line(width, ' ');
        for (int pos = 1; pos <= w; ++pos) line[col(pos)] = '|';
        for (std::size_t j = 0; j < p.rows[r].size(); ++j) {
            const int left = p.left_position(r, static_cast<int>(j));
            const int a = col(left) - 1, b = col(left + 1) + 1;
            std::string box(b - a + 1, ' ');
            box.front() = '[';
            box.back() = ']';
            const std::string label = std::to_string(p.rows[r][j]);
            const int start = (static_cast<int>(box.size()) - static_cast<int>(label.size())) / 2;
            for (std::size_t k = 0; k < label.size() && start + k + 1 < box.size(); ++k) box[start + k] = label[k];
            line.replace(a, box.size(), box);
        }
        char tag[16];
        std::snprintf(tag, sizeof tag, "%4d ", r + 1);
        lines.push_back(tag + line);
    }
    std::string cups(width, ' ');
    for (int j = 1; j <= p.m; ++j) {
        cups[col(2 * j - 1)] = '+';
        cups[col(2 * j)] = '+';
        for (int c = col(2 * j - 1) + 1; c < col(2 * j); ++c) cups[c] = '-';
    }
    lines.push_back("     " + cups);
    std::ostringstream out;
    out << "plat m=" << p.m << " n=" << p.n() << "\n";
    for (auto& l : lines) {
        while (!l.empty() && l.back() == ' ') l.pop_back();
        out << l << "\n";
    }
    return out.str();
}

std::string render_plat_svg(const PlatDiagram& p) {
    const int w = 2 * p.m;
    const double dx = 40, dy = 48, margin = 40;
    const double width = margin * 2 + dx * (w - 1);
    const double top = margin + 2 * dx / 2;
    const double height = top + dy * std::max(1, p.n()) + margin + dx;
    auto x = [&](int pos) { return margin + dx * (pos - 1); };
    auto y_row_top = [&](int r) { return top + dy * (p.n() - 1 - r); };  // row r, 0 = bottom
    const double y_top = top, y_bottom = top + dy * p.n();
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\"" << fmt(height)
      << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    s << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    // strands between boxes
    for (int r = 0; r < p.n(); ++r) {
        std::vector<bool> boxed(w + 1, false);
        for (std::size_t j = 0; j < p.rows[r].size(); ++j) {
            const int left = p.left_position(r, static_cast<int>(j));
            boxed[left] = boxed[left + 1] = true;
        }
        for (int pos = 1; pos <= w; ++pos) {
            const double y0 = y_row_top(r), y1 = y0 + dy;
            if (!boxed[pos]) {
                s << "<line x1=\"" << fmt(x(pos)) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x(pos)) << "\" y2=\""
                  << fmt(y1) << "\"/>\n";
            } else {
                s << "<line x1=\"" << fmt(x(pos)) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x(pos)) << "\" y2=\""
                  << fmt(y0 + 8) << "\"/>\n";
                s << "<line x1=\"" << fmt(x(pos)) << "\" y1=\"" << fmt(y1 - 8) << "\" x2=\"" << fmt(x(pos))
                  << "\" y2=\"" << fmt(y1) << "\"/>\n";
            }
        }
    }
    // top caps and bottom cups
    for (auto [a, b] : top_caps(p)) {
        const double rise = 12 + 6 * (b - a);
        s << "<path d=\"M " << fmt(x(a)) << " " << fmt(y_top) << " C " << fmt(x(a)) << " " << fmt(y_top - rise)
          << " " << fmt(x(b)) << " " << fmt(y_top - rise) << " " << fmt(x(b)) << " " << fmt(y_top) << "\"/>\n";
    }
    for (int j = 1; j <= p.m; ++j) {
        const int a = 2 * j - 1, b = 2 * j;
        s << "<path d=\"M " << fmt(x(a)) << " " << fmt(y_bottom) << " C " << fmt(x(a)) << " " << fmt(y_bottom + 18)
          << " " << fmt(x(b)) << " " << fmt(y_bottom + 18) << " " << fmt(x(b)) << " " << fmt(y_bottom) << "\"/>\n";
    }
    s << "</g>\n<g font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (int r = 0; r < p.n(); ++r)
        for (std::size_t j = 0; j < p.rows[r].size(); ++j) {
            const int left = p.left_position(r, static_cast<int>(j));
            const double bx = x(left) - 8, by = y_row_top(r) + 8;
            s << "<rect x=\"" << fmt(bx) << "\" y=\"" << fmt(by) << "\" width=\"" << fmt(dx + 16) << "\" height=\""
              << fmt(dy - 16) << "\" fill=\"white\" stroke=\"black\"/>\n";
            s << "<text x=\"" << fmt(bx + (dx + 16) / 2) << "\" y=\"" << fmt(by + (dy - 16) / 2 + 4) << "\">"
              << "a" << r + 1 << "," << j + 1 << "=" << p.rows[r][j] << "</text>\n";
        }
    s << "</g>\n</svg>\n";
    return s.str();
}

std::string render_pd_ascii(const Diagram& k) {
    std::ostringstream out;
    out << "pd crossings=" << k.crossing_count() << " writhe=" << k.writhe()
        << " alternating=" << (k.is_alternating() ? "yes" : "no") << "\n";
    const auto pd = k.to_pd();
    for (int x = 0; x < k.crossing_count(); ++x) {
        out << "X" << x << " [" << pd[x][0] << "," << pd[x][1] << "," << pd[x][2] << "," << pd[x][3] << "] "
            << (k.sign(x) > 0 ? "+" : "-") << "\n";
    }
    if (k.crossing_count() == 0) out << "(unknot)\n";
    return out.str();
}

std::string render_pd_svg(const Diagram& k) {
    const double size = 400, centre = size / 2, radius = 170;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
      << "\" viewBox=\"0 0 " << fmt(size) << " " << fmt(size) << "\">\n";
    s << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    const int n = k.crossing_count();
    if (n == 0) {
        s << "<circle cx=\"" << fmt(centre) << "\" cy=\"" << fmt(centre) << "\" r=\"" << fmt(radius / 2) << "\"/>\n";
        s << "</g>\n</svg>\n";
        return s.str();
    }
    // vertices: crossings 0..n-1, then two subdivision points per edge label
    const int edges = k.edge_count();
    auto sub = [&](int label, int which) { return n + 2 * (label - 1) + which; };
    const int nv = n + 2 * edges;
    std::vector<std::vector<int>> adj(nv);
    auto join = [&](int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (int lab = 1; lab <= edges; ++lab) {
        join(k.tail(lab).crossing, sub(lab, 0));
        join(sub(lab, 0), sub(lab, 1));
        join(sub(lab, 1), k.head(lab).crossing);
    }
    // outer face: the longest walk (first on ties), pinned to a circle
    int outer = 0;
    for (int f = 1; f < k.face_count(); ++f)
        if (k.faces()[f].size() > k.faces()[outer].size()) outer = f;
    std::vector<int> ring;
    for (const Half h : k.faces()[outer]) {
        const int lab = k.label(h);
        ring.push_back(h.crossing);
        if (k.is_out(h)) {
            ring.push_back(sub(lab, 0));
            ring.push_back(sub(lab, 1));
        } else {
            ring.push_back(sub(lab, 1));
            ring.push_back(sub(lab, 0));
        }
    }
    std::vector<double> px(nv, centre), py(nv, centre);
    std::vector<bool> pinned(nv, false);
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (pinned[ring[i]]) continue;
        const double t = 2 * M_PI * static_cast<double>(i) / static_cast<double>(ring.size());
        px[ring[i]] = centre + radius * std::cos(t);
        py[ring[i]] = centre - radius * std::sin(t);
        pinned[ring[i]] = true;
    }
    for (int iter = 0; iter < 2000; ++iter)
        for (int v = 0; v < nv; ++v) {
            if (pinned[v]) continue;
            double sx = 0, sy = 0;
            for (int u : adj[v]) {
                sx += px[u];
                sy += py[u];
            }
            px[v] = sx / static_cast<double>(adj[v].size());
            py[v] = sy / static_cast<double>(adj[v].size());
        }
    // each label drawn tail -> head; under-passage ends are shortened
    for (int lab = 1; lab <= edges; ++lab) {
        const Half t = k.tail(lab), h = k.head(lab);
        std::vector<std::pair<double, double>> pts{{px[t.crossing], py[t.crossing]},
                                                   {px[sub(lab, 0)], py[sub(lab, 0)]},
                                                   {px[sub(lab, 1)], py[sub(lab, 1)]},
                                                   {px[h.crossing], py[h.crossing]}};
        auto trim = [](std::pair<double, double>& end, const std::pair<double, double>& toward) {
            end.first += 0.3 * (toward.first - end.first);
            end.second += 0.3 * (toward.second - end.second);
        };
        if (t.slot % 2 == 0) trim(pts[0], pts[1]);
        if (h.slot % 2 == 0) trim(pts[3], pts[2]);
        s << "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            s << (i ? " " : "") << fmt(pts[i].first) << "," << fmt(pts[i].second);
        s << "\"/>\n";
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

}  // namespace knotpad
