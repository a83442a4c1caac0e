#include "geobip/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <unordered_map>

namespace geobip {

namespace {

constexpr double kCanvas = 800;
constexpr double kMargin = 20;

struct Style {
  const char* stroke;
  double width;
};

class Frame {
 public:
  Frame(double x0, double y0, double x1, double y1) : x0_(x0), y1_(y1) {
    const double span = std::max({x1 - x0, y1 - y0, 1e-12});
    scale_ = (kCanvas - 2 * kMargin) / span;
    w_ = (x1 - x0) * scale_ + 2 * kMargin;
    h_ = (y1 - y0) * scale_ + 2 * kMargin;
  }
  double x(double v) const { return kMargin + (v - x0_) * scale_; }
  // SVG y grows downward.
  double y(double v) const { return kMargin + (y1_ - v) * scale_; }
  double len(double v) const { return v * scale_; }
  double width() const { return w_; }
  double height() const { return h_; }

 private:
  double x0_;
  double y1_;
  double scale_ = 1;
  double w_ = kCanvas;
  double h_ = kCanvas;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& instance, const std::optional<Verdict>& verdict) {
  std::unordered_map<ObjectId, Color> colors;
  std::set<ObjectId> cycle;
  if (verdict && verdict->is_bipartite()) {
    for (const auto& [id, c] : verdict->bipartite().coloring) colors[id] = c;
  } else if (verdict) {
    cycle.insert(verdict->odd_cycle().cycle.begin(), verdict->odd_cycle().cycle.end());
  }
  auto style = [&](ObjectId id) -> Style {
    if (!verdict) return {"#333333", 1.5};
    if (verdict->is_bipartite()) {
      const auto it = colors.find(id);
      if (it == colors.end()) return {"#333333", 1.5};
      return {it->second == Color::kRed ? "#d62728" : "#1f4fd6", 1.5};
    }
    return cycle.count(id) ? Style{"#ff8c00", 4} : Style{"#b0b0b0", 1};
  };

  double x0 = HUGE_VAL, y0 = HUGE_VAL, x1 = -HUGE_VAL, y1 = -HUGE_VAL;
  auto grow = [&](double lx, double ly, double hx, double hy) {
    x0 = std::min(x0, lx);
    y0 = std::min(y0, ly);
    x1 = std::max(x1, hx);
    y1 = std::max(y1, hy);
  };
  for (const Segment& s : instance.segments) {
    const double px = s.p.x.to_double(), py = s.p.y.to_double();
    const double qx = s.q.x.to_double(), qy = s.q.y.to_double();
    grow(std::min(px, qx), std::min(py, qy), std::max(px, qx), std::max(py, qy));
  }
  for (const Ball& b : instance.balls) {
    const double r = b.radius.to_double();
    const double cx = b.center[0].to_double();
    const double cy = b.center.size() > 1 ? b.center[1].to_double() : 0.0;
    grow(cx - r, cy - r, cx + r, cy + r);
  }
  if (x0 > x1) x0 = y0 = 0, x1 = y1 = 1;
  const Frame f(x0, y0, x1, y1);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width()) << "\" height=\"" << num(f.height())
      << "\" viewBox=\"0 0 " << num(f.width()) << ' ' << num(f.height()) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Highlighted cycle members go last so they stay on top.
  auto draw = [&](bool highlighted) {
    for (const Segment& s : instance.segments) {
      if (cycle.count(s.id) != static_cast<std::size_t>(highlighted)) continue;
      const Style st = style(s.id);
      out << "<line data-id=\"" << s.id << "\" x1=\"" << num(f.x(s.p.x.to_double())) << "\" y1=\""
          << num(f.y(s.p.y.to_double())) << "\" x2=\"" << num(f.x(s.q.x.to_double())) << "\" y2=\""
          << num(f.y(s.q.y.to_double())) << "\" stroke=\"" << st.stroke << "\" stroke-width=\"" << st.width
          << "\" stroke-linecap=\"round\"/>\n";
    }
    for (const Ball& b : instance.balls) {
      if (cycle.count(b.id) != static_cast<std::size_t>(highlighted)) continue;
      const Style st = style(b.id);
      const double cy = b.center.size() > 1 ? b.center[1].to_double() : 0.0;
      out << "<circle data-id=\"" << b.id << "\" cx=\"" << num(f.x(b.center[0].to_double())) << "\" cy=\""
          << num(f.y(cy)) << "\" r=\"" << num(f.len(b.radius.to_double())) << "\" fill=\"" << st.stroke
          << "\" fill-opacity=\"0.15\" stroke=\"" << st.stroke << "\" stroke-width=\"" << st.width << "\"/>\n";
    }
  };
  draw(false);
  draw(true);
  out << "</svg>\n";
  return out.str();
}

}  // namespace geobip
