#include "trop2/svg.hpp"

#include "trop2/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace trop2 {

namespace {

using Point = std::pair<Rational, Rational>;

struct Row {
  Rational a0, a1, b;  // a0 x + a1 y <= b
};

std::vector<Row> rows_of(const Polyhedron& p) {
  std::vector<Row> rows;
  for (const auto& c : p.inequalities()) rows.push_back({c.a[0], c.a[1], c.b});
  for (const auto& c : p.equalities()) {
    rows.push_back({c.a[0], c.a[1], c.b});
    rows.push_back({-c.a[0], -c.a[1], -c.b});
  }
  return rows;
}

std::vector<Row> box_rows(const BoundingBox& b) {
  return {{1, 0, b.xmax}, {-1, 0, -b.xmin}, {0, 1, b.ymax}, {0, -1, -b.ymin}};
}

std::vector<Point> vertices(const std::vector<Row>& rows) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Row &r = rows[i], &s = rows[j];
      Rational det = r.a0 * s.a1 - r.a1 * s.a0;
      if (det == 0) continue;
      Point p{(r.b * s.a1 - r.a1 * s.b) / det, (r.a0 * s.b - r.b * s.a0) / det};
      bool ok = std::all_of(rows.begin(), rows.end(),
                            [&](const Row& w) { return w.a0 * p.first + w.a1 * p.second <= w.b; });
      if (ok) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

struct Shape {
  std::vector<Point> pts;  // 1: point, 2: segment, more: polygon in cyclic order
  std::string label;
  std::size_t colour = 0;
};

std::optional<Shape> clip(const Polyhedron& cell, const BoundingBox& box) {
  if (cell.ambient_dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "plot cells must live in R^2");
  auto rows = rows_of(cell);
  auto b = box_rows(box);
  rows.insert(rows.end(), b.begin(), b.end());
  auto v = vertices(rows);
  if (v.empty()) return std::nullopt;
  Shape s;
  bool collinear = true;
  for (std::size_t k = 2; k < v.size() && collinear; ++k) collinear = cross(v[0], v[1], v[k]) == 0;
  if (v.size() <= 2 || collinear) {
    s.pts = {v.front()};
    if (v.size() > 1) s.pts.push_back(v.back());  // sorted, so the extremes
    return s;
  }
  double cx = 0, cy = 0;
  for (const auto& p : v) cx += p.first.get_d(), cy += p.second.get_d();
  cx /= v.size(), cy /= v.size();
  std::sort(v.begin(), v.end(), [&](const Point& p, const Point& q) {
    return std::atan2(p.second.get_d() - cy, p.first.get_d() - cx) <
           std::atan2(q.second.get_d() - cy, q.first.get_d() - cx);
  });
  s.pts = std::move(v);
  return s;
}

BoundingBox fit(const std::vector<PlotItem>& items) {
  std::vector<Point> pts;
  for (const auto& it : items) {
    if (it.cell.ambient_dim() != 2) throw Error(ErrorCode::UnsupportedDimension, "plot cells must live in R^2");
    if (it.cell.is_empty()) continue;
    auto v = vertices(rows_of(it.cell));
    pts.insert(pts.end(), v.begin(), v.end());
    const auto& r = it.cell.rel_int_point();
    pts.emplace_back(r[0], r[1]);
  }
  if (pts.empty()) return {};
  BoundingBox b{pts[0].first, pts[0].second, pts[0].first, pts[0].second};
  for (const auto& p : pts) {
    b.xmin = std::min(b.xmin, p.first), b.xmax = std::max(b.xmax, p.first);
    b.ymin = std::min(b.ymin, p.second), b.ymax = std::max(b.ymax, p.second);
  }
  Rational mx = 2 + (b.xmax - b.xmin) / 4, my = 2 + (b.ymax - b.ymin) / 4;
  return {b.xmin - mx, b.ymin - my, b.xmax + mx, b.ymax + my};
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};

class Canvas {
 public:
  explicit Canvas(const BoundingBox& b) : b_(b) {}
  static constexpr double kMargin = 40, kSize = 400;

  std::string x(const Rational& v) const { return num(kMargin + Rational((v - b_.xmin) / (b_.xmax - b_.xmin)).get_d() * kSize); }
  std::string y(const Rational& v) const { return num(kMargin + Rational((b_.ymax - v) / (b_.ymax - b_.ymin)).get_d() * kSize); }

  // Both ends on one side of the box: an artefact of clipping.
  bool on_frame(const Point& p, const Point& q) const {
    return (p.first == b_.xmin && q.first == b_.xmin) || (p.first == b_.xmax && q.first == b_.xmax) ||
           (p.second == b_.ymin && q.second == b_.ymin) || (p.second == b_.ymax && q.second == b_.ymax);
  }

 private:
  BoundingBox b_;
};

}  // namespace

BoundingBox parse_bbox(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream in(text);
  std::string part;
  try {
    while (std::getline(in, part, ',')) v.push_back(parse_rational(part));
  } catch (const Error& e) {
    throw Error(ErrorCode::ValidationError, std::string("bad --bbox: ") + e.what());
  }
  if (v.size() != 4 || v[0] >= v[2] || v[1] >= v[3])
    throw Error(ErrorCode::ValidationError, "--bbox must be xmin,ymin,xmax,ymax with xmin < xmax and ymin < ymax");
  return {v[0], v[1], v[2], v[3]};
}

std::string render_scene(const PlotScene& scene, const std::optional<BoundingBox>& box) {
  const BoundingBox b = box ? *box : fit(scene.items);
  Canvas cv(b);

  std::vector<Shape> shapes;
  for (std::size_t i = 0; i < scene.items.size(); ++i) {
    if (scene.items[i].cell.ambient_dim() != 2)
      throw Error(ErrorCode::UnsupportedDimension, "plot cells must live in R^2");
    if (auto s = clip(scene.items[i].cell, b)) {
      s->label = scene.items[i].label;
      s->colour = i % std::size(kPalette);
      shapes.push_back(std::move(*s));
    }
  }
  std::vector<Point> all;
  for (const auto& s : shapes) all.insert(all.end(), s.pts.begin(), s.pts.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  auto is_member = [&](const Point& p) { return !scene.member || scene.member({p.first, p.second}); };
  auto midpoint = [](const Point& p, const Point& q) {
    return Point{(p.first + q.first) / 2, (p.second + q.second) / 2};
  };

  std::ostringstream out;
  const double full = 2 * Canvas::kMargin + Canvas::kSize;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(full) << "\" height=\"" << num(full)
      << "\" viewBox=\"0 0 " << num(full) << ' ' << num(full) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(full) << "\" height=\"" << num(full) << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(Canvas::kMargin) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
      << escape(scene.title) << "</text>\n";

  // axes
  out << "<g stroke=\"#999\" stroke-width=\"0.75\">\n";
  if (b.xmin <= 0 && 0 <= b.xmax)
    out << "<line x1=\"" << cv.x(0) << "\" y1=\"" << cv.y(b.ymin) << "\" x2=\"" << cv.x(0) << "\" y2=\"" << cv.y(b.ymax)
        << "\"/>\n";
  if (b.ymin <= 0 && 0 <= b.ymax)
    out << "<line x1=\"" << cv.x(b.xmin) << "\" y1=\"" << cv.y(0) << "\" x2=\"" << cv.x(b.xmax) << "\" y2=\"" << cv.y(0)
        << "\"/>\n";
  out << "<rect x=\"" << cv.x(b.xmin) << "\" y=\"" << cv.y(b.ymax) << "\" width=\"" << num(Canvas::kSize)
      << "\" height=\"" << num(Canvas::kSize) << "\" fill=\"none\"/>\n</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"10\" fill=\"#555\">\n";
  out << "<text x=\"" << cv.x(b.xmin) << "\" y=\"" << num(full - 22) << "\">" << pretty_rational(b.xmin) << "</text>\n";
  out << "<text x=\"" << cv.x(b.xmax) << "\" y=\"" << num(full - 22) << "\" text-anchor=\"end\">"
      << pretty_rational(b.xmax) << "</text>\n";
  out << "<text x=\"" << num(full / 2) << "\" y=\"" << num(full - 8) << "\" text-anchor=\"middle\">"
      << escape(scene.x_label) << "</text>\n";
  out << "<text x=\"8\" y=\"" << cv.y(b.ymin) << "\">" << pretty_rational(b.ymin) << "</text>\n";
  out << "<text x=\"8\" y=\"" << num(Canvas::kMargin + 10) << "\">" << pretty_rational(b.ymax) << "</text>\n";
  out << "<text x=\"8\" y=\"" << num(full / 2) << "\">" << escape(scene.y_label) << "</text>\n</g>\n";

  // fills first so every edge stays visible
  for (const auto& s : shapes) {
    if (s.pts.size() < 3) continue;
    out << "<polygon points=\"";
    for (std::size_t k = 0; k < s.pts.size(); ++k)
      out << (k ? " " : "") << cv.x(s.pts[k].first) << ',' << cv.y(s.pts[k].second);
    out << "\" fill=\"" << kPalette[s.colour] << "\" fill-opacity=\"0.3\" stroke=\"none\"/>\n";
  }

  auto edge = [&](const Point& p, const Point& q, const char* colour) {
    // split at every vertex of the scene lying inside the segment
    std::vector<std::pair<Rational, Point>> cuts{{0, p}, {1, q}};
    Rational len = (q.first - p.first) * (q.first - p.first) + (q.second - p.second) * (q.second - p.second);
    for (const auto& v : all) {
      if (cross(p, q, v) != 0) continue;
      Rational t = ((v.first - p.first) * (q.first - p.first) + (v.second - p.second) * (q.second - p.second)) / len;
      if (t > 0 && t < 1) cuts.emplace_back(t, v);
    }
    std::sort(cuts.begin(), cuts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const Point &a = cuts[k].second, &c = cuts[k + 1].second;
      if (cv.on_frame(a, c)) continue;
      out << "<line x1=\"" << cv.x(a.first) << "\" y1=\"" << cv.y(a.second) << "\" x2=\"" << cv.x(c.first)
          << "\" y2=\"" << cv.y(c.second) << "\" stroke=\"" << colour << "\" stroke-width=\"2\"";
      if (!is_member(midpoint(a, c))) out << " stroke-dasharray=\"6,4\"";
      out << "/>\n";
    }
  };

  for (const auto& s : shapes) {
    if (s.pts.size() == 2) edge(s.pts[0], s.pts[1], kPalette[s.colour]);
    if (s.pts.size() >= 3)
      for (std::size_t k = 0; k < s.pts.size(); ++k) edge(s.pts[k], s.pts[(k + 1) % s.pts.size()], "#333");
  }
  for (const auto& s : shapes) {
    if (s.pts.size() != 1) continue;
    bool in = is_member(s.pts[0]);
    out << "<circle cx=\"" << cv.x(s.pts[0].first) << "\" cy=\"" << cv.y(s.pts[0].second) << "\" r=\"4\" fill=\""
        << (in ? "#333" : "white") << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  }

  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#111\" text-anchor=\"middle\">\n";
  for (const auto& s : shapes) {
    if (s.label.empty()) continue;
    Rational lx = 0, ly = 0;
    for (const auto& p : s.pts) lx += p.first, ly += p.second;
    lx /= static_cast<long>(s.pts.size()), ly /= static_cast<long>(s.pts.size());
    out << "<text x=\"" << cv.x(lx) << "\" y=\"" << cv.y(ly) << "\"" << (s.pts.size() == 1 ? " dy=\"-8\"" : "") << ">"
        << escape(s.label) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

namespace {

std::string monomial_name(const ExponentVector& e) {
  static const char* const names[] = {"x", "y"};
  std::string out;
  for (std::size_t i = 0; i < e.size() && i < 2; ++i) {
    if (e[i] == 0) continue;
    out += names[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string support_label(const SupportSet& s) {
  return s.size() == 1 ? monomial_name(s[0]) : support_set_to_string(s);
}

void require_plane(std::size_t d) {
  if (d != 2) throw Error(ErrorCode::UnsupportedDimension, "plots need d = 2, got d = " + std::to_string(d));
}

// Adds cells not equal to an earlier one.
void add_distinct(std::vector<PlotItem>& items, const Polyhedron& cell, const std::string& label) {
  for (const auto& it : items)
    if (poly_equal(it.cell, cell)) return;
  items.push_back({cell, label});
}

// Constraints on (x_0, x_1) with x_0 = 0, moved onto one axis of the plane.
void add_slice(std::vector<Constraint>& out, const std::vector<Constraint>& src, std::size_t axis) {
  for (const auto& c : src) {
    RationalVector a{0, 0};
    a[axis] = c.a[1];
    out.push_back({a, c.b});
  }
}

}  // namespace

std::string render_svg(const Rank2Decomposition& dec, Panel panel, const std::optional<BoundingBox>& box) {
  require_plane(dec.d);
  PlotScene scene;
  if (panel == Panel::T) {
    scene.title = "t-projection";
    scene.x_label = "t1", scene.y_label = "t2";
    for (const auto& p : dec.pieces) add_distinct(scene.items, p.piece.t_part(), support_label(p.t));
  } else {
    scene.title = "u-projection fibres";
    scene.x_label = "u1", scene.y_label = "u2";
    for (const auto& p : dec.pieces) add_distinct(scene.items, p.piece.u_part(), support_label(p.s));
  }
  return render_scene(scene, box);
}

std::string render_svg(const std::vector<SupportCell1>& cells, const std::optional<BoundingBox>& box) {
  PlotScene scene;
  scene.title = "support cells";
  for (const auto& c : cells) {
    require_plane(c.cell.ambient_dim());
    scene.items.push_back({c.cell, c.cell.affine_dim() == 2 ? support_label(c.support_set) : std::string()});
  }
  return render_scene(scene, box);
}

std::string render_svg(const ConeDecomposition& dec, Panel panel, const std::optional<BoundingBox>& box) {
  require_plane(dec.d);
  PlotScene scene;
  scene.title = panel == Panel::T ? "covector cells, t-part" : "covector cells, u-part";
  scene.x_label = panel == Panel::T ? "t1" : "u1";
  scene.y_label = panel == Panel::T ? "t2" : "u2";
  for (const auto& p : dec.pieces) {
    if (panel == Panel::T) add_distinct(scene.items, p.piece.t_part(), covector_to_string(p.t));
    else add_distinct(scene.items, p.piece.u_part(), covector_to_string(p.s));
  }
  return render_scene(scene, box);
}

std::string render_cone_slice(const GeneratorMatrix& v0, const std::optional<BoundingBox>& box) {
  GeneratorMatrix v = v0.d == 1 ? homogenize(v0) : v0;
  require_plane(v.d);
  auto dec = cone_decompose(v);
  PlotScene scene;
  scene.title = "cone slice at first coordinate (0,0)";
  scene.x_label = "t", scene.y_label = "u";
  for (const auto& piece : cone_closure(dec)) {
    // restrict both blocks to coordinate 0 = 0, keep coordinate 1
    std::vector<Constraint> le, eq;
    add_slice(le, piece.t_part().inequalities(), 0);
    add_slice(eq, piece.t_part().equalities(), 0);
    add_slice(le, piece.u_part().inequalities(), 1);
    add_slice(eq, piece.u_part().equalities(), 1);
    Polyhedron cell(2, le, eq);
    if (cell.is_feasible()) add_distinct(scene.items, cell, "");
  }
  scene.member = [v](const RationalVector& x) {
    return is_in_cone({Rank2Value(0, 0), Rank2Value(x[0], x[1])}, v);
  };
  return render_scene(scene, box);
}

}  // namespace trop2
