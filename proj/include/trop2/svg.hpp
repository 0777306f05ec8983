#pragma once
// Write-only SVG pictures of planar (d = 2) complexes.
//
// Cells are closed polyhedra clipped to a bounding box. When a membership
// test is supplied, boundary pieces whose midpoint fails it are dashed and
// points failing it are drawn hollow, which is how excluded boundaries show.

#include "trop2/convexity.hpp"
#include "trop2/hypersurface.hpp"

#include <functional>
#include <optional>
#include <string>

namespace trop2 {

struct BoundingBox {
  Rational xmin = -5, ymin = -5, xmax = 5, ymax = 5;
};

/// "xmin,ymin,xmax,ymax". Throws ValidationError.
BoundingBox parse_bbox(const std::string& text);

struct PlotItem {
  Polyhedron cell;  // in R^2
  std::string label;
};

struct PlotScene {
  std::string title;
  std::string x_label = "x1";
  std::string y_label = "x2";
  std::vector<PlotItem> items;
  std::function<bool(const RationalVector&)> member;
};

/// Without a box, one is fitted around the vertices (with margin).
std::string render_scene(const PlotScene& scene, const std::optional<BoundingBox>& box = std::nullopt);

enum class Panel { T, U };

/// T panel: the distinct Q_T. U panel: every R_S overlaid. Throws UnsupportedDimension.
std::string render_svg(const Rank2Decomposition& dec, Panel panel, const std::optional<BoundingBox>& box = std::nullopt);
/// All cells, labelled where full-dimensional.
std::string render_svg(const std::vector<SupportCell1>& cells, const std::optional<BoundingBox>& box = std::nullopt);
std::string render_svg(const ConeDecomposition& dec, Panel panel, const std::optional<BoundingBox>& box = std::nullopt);
/// Slice of a cone in T_2^2 at first coordinate (0,0), drawn in the (t, u)
/// plane of the second coordinate. Polytopes with d = 1 are homogenised first.
std::string render_cone_slice(const GeneratorMatrix& v, const std::optional<BoundingBox>& box = std::nullopt);

}  // namespace trop2
