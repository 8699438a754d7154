#include "ck/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace ck {

namespace {

constexpr double pi = 3.14159265358979323846;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v + 0.0);  // +0.0 kills negative zero
    return buf;
}

std::string header(double x0, double y0, double w, double h) {
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    s += num(x0) + " " + num(y0) + " " + num(w) + " " + num(h) + "\" width=\"480\">\n";
    return s;
}

std::string line(double x1, double y1, double x2, double y2, const std::string& style) {
    return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
           "\" y2=\"" + num(y2) + "\" " + style + "/>\n";
}

std::string dot(double x, double y, double r, const std::string& fill) {
    return "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) +
           "\" fill=\"" + fill + "\"/>\n";
}

std::string text_at(double x, double y, double size, const std::string& t) {
    return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + num(size) +
           "\" text-anchor=\"middle\" dominant-baseline=\"middle\" fill=\"#555\">" + t +
           "</text>\n";
}

std::string chord_style(int sign, double width) {
    if (sign == 0)
        return "stroke=\"#999\" stroke-width=\"" + num(width * 2.5) +
               "\" stroke-linecap=\"round\"";
    std::string s = "stroke=\"#222\" stroke-width=\"" + num(width) + "\"";
    if (sign < 0) s += " stroke-dasharray=\"" + num(width * 3) + "\"";
    return s;
}

// chords and visit arcs share the disk layout: slot j of 2n sits at angle
// 90deg - (j + 1/2) * 360/(2n), so the base point gap faces up
std::pair<double, double> disk_point(int slot, int total, double cx, double cy,
                                     double r) {
    const double a = pi / 2 - 2 * pi * (slot + 0.5) / total;
    return {cx + r * std::cos(a), cy - r * std::sin(a)};
}

}  // namespace

std::string svg_of_diagram(const chord_diagram& d) {
    const int S = std::max(d.slots(), 1);
    std::string s = header(-1.25, -1.25, 2.5, 2.5);
    s += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbb\" "
         "stroke-width=\"0.02\"/>\n";
    s += dot(0, -1, 0.04, "#d33");  // base point
    for (const auto& c : d.chords) {
        const auto [x1, y1] = disk_point(c.a, S, 0, 0, 1);
        const auto [x2, y2] = disk_point(c.b, S, 0, 0, 1);
        s += line(x1, y1, x2, y2, chord_style(c.sign, 0.025));
    }
    for (int i = 0; i < d.order(); ++i) {
        for (const int slot : {d.chords[i].a, d.chords[i].b}) {
            const auto [x, y] = disk_point(slot, S, 0, 0, 1);
            s += dot(x, y, 0.025, "#222");
            const auto [lx, ly] = disk_point(slot, S, 0, 0, 1.12);
            s += text_at(lx, ly, 0.12, std::to_string(i + 1));
        }
    }
    s += "</svg>\n";
    return s;
}

std::string svg_of_planar(const planar_diagram& p) {
    const auto px = [](const point& q) { return q.x.convert_to<double>(); };
    const auto py = [](const point& q) { return -q.y.convert_to<double>(); };

    double lo_x = 1e9, lo_y = 1e9, hi_x = -1e9, hi_y = -1e9;
    for (const auto& comp : p.comps)
        for (const auto& v : comp) {
            lo_x = std::min(lo_x, px(v));
            hi_x = std::max(hi_x, px(v));
            lo_y = std::min(lo_y, py(v));
            hi_y = std::max(hi_y, py(v));
        }
    if (lo_x > hi_x) lo_x = lo_y = -1, hi_x = hi_y = 1;
    const double margin = 0.4;

    // gaps to cut out of segments that pass underneath, per (comp, seg)
    std::map<std::pair<int, int>, std::vector<double>> under_at;
    for (const auto& c : p.crossings)
        under_at[{c.under.comp, c.under.seg}].push_back(c.under.t.convert_to<double>());

    std::string s = header(lo_x - margin, lo_y - margin, hi_x - lo_x + 2 * margin,
                           hi_y - lo_y + 2 * margin);
    const std::string stroke = "stroke=\"#222\" stroke-width=\"0.045\" fill=\"none\" "
                               "stroke-linecap=\"round\" stroke-linejoin=\"round\"";
    const double gap = 0.09;
    for (int ci = 0; ci < static_cast<int>(p.comps.size()); ++ci) {
        const auto& comp = p.comps[ci];
        const int n = static_cast<int>(comp.size());
        for (int seg = 0; seg < n; ++seg) {
            const point a = comp[seg];
            const point b = comp[(seg + 1) % n];
            const double ax = px(a), ay = py(a), bx = px(b), by = py(b);
            const double len = std::hypot(bx - ax, by - ay);
            std::vector<std::pair<double, double>> keep = {{0.0, 1.0}};
            auto it = under_at.find({ci, seg});
            if (it != under_at.end() && len > 0) {
                std::sort(it->second.begin(), it->second.end());
                keep.clear();
                double at = 0;
                for (double t : it->second) {
                    keep.push_back({at, std::max(at, t - gap / len)});
                    at = std::min(1.0, t + gap / len);
                }
                keep.push_back({at, 1.0});
            }
            for (const auto& [t0, t1] : keep) {
                if (t1 - t0 < 1e-9) continue;
                s += line(ax + (bx - ax) * t0, ay + (by - ay) * t0, ax + (bx - ax) * t1,
                          ay + (by - ay) * t1, stroke);
            }
        }
    }
    s += dot(p.basepoint.x.convert_to<double>(), -p.basepoint.y.convert_to<double>(),
             0.08, "#d33");
    s += "</svg>\n";
    return s;
}

std::string svg_of_pd(const pd_code& code) {
    const gauss_code g = gauss_of(code);
    const int k = std::max<int>(1, static_cast<int>(g.comps.size()));
    std::string s = header(-1.25, -1.25, 2.5 * k, 2.5);

    // visit positions: one circle per component
    std::map<int, std::vector<std::pair<double, double>>> spots;  // label -> points
    std::map<int, int> label_sign;
    std::map<int, std::pair<double, double>> over_spot;
    for (int ci = 0; ci < static_cast<int>(g.comps.size()); ++ci) {
        const double cx = 2.5 * ci;
        s += "<circle cx=\"" + num(cx) +
             "\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"0.02\"/>\n";
        const auto& comp = g.comps[ci];
        const int total = std::max<int>(1, static_cast<int>(comp.size()));
        for (int j = 0; j < static_cast<int>(comp.size()); ++j) {
            const auto [x, y] = disk_point(j, total, cx, 0, 1);
            spots[comp[j].label].push_back({x, y});
            label_sign[comp[j].label] = comp[j].sign;
            if (comp[j].over) over_spot[comp[j].label] = {x, y};
            const auto [lx, ly] = disk_point(j, total, cx, 0, 1.13);
            s += text_at(lx, ly, 0.12,
                         (comp[j].over ? "O" : "U") + std::to_string(comp[j].label) +
                             (comp[j].sign > 0 ? "+" : "-"));
        }
    }
    for (const auto& [label, pts] : spots) {
        if (pts.size() != 2) continue;
        s += line(pts[0].first, pts[0].second, pts[1].first, pts[1].second,
                  chord_style(label_sign[label], 0.02));
        const auto o = over_spot.find(label);
        if (o != over_spot.end()) s += dot(o->second.first, o->second.second, 0.045, "#222");
    }
    s += "</svg>\n";
    return s;
}

}  // namespace ck
