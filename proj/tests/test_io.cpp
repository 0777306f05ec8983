#include "random.hpp"
#include "support.hpp"
#include "trop2/error.hpp"
#include "trop2/io.hpp"
#include "trop2/svg.hpp"

#include <gtest/gtest.h>

using namespace trop2;
using namespace trop2::testing;

namespace {

// Structural equality: polyhedra compare by their stored rows.
bool same_rows(const Polyhedron& a, const Polyhedron& b) {
  auto rows_equal = [](const std::vector<Constraint>& x, const std::vector<Constraint>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].a != y[i].a || x[i].b != y[i].b) return false;
    return true;
  };
  return a.ambient_dim() == b.ambient_dim() && rows_equal(a.inequalities(), b.inequalities()) &&
         rows_equal(a.equalities(), b.equalities());
}

template <class T, class F>
T through_text(const T& x, F parse) {
  return parse(parse_json_text(to_json(x).dump()));
}

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ValidationError;
}

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, Scalars) {
  EXPECT_EQ(to_json(Rational(-3, 2)).get<std::string>(), "-3/2");
  EXPECT_EQ(to_json(Rank2Value::zero()).get<std::string>(), "inf");
  EXPECT_EQ(to_json(Rank2Value(1, Rational(1, 3))).dump(), "[\"1/1\",\"1/3\"]");
  EXPECT_EQ(rank2_from_json(Json::parse("[\"2/4\", 7]")), Rank2Value(Rational(1, 2), 7));
  EXPECT_EQ(rank2_from_json(Json("inf")), Rank2Value::zero());
}

TEST(Json, ParseErrors) {
  EXPECT_EQ(code_of([] { parse_json_text("{\"d\": "); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { rank2_from_json(Json::parse("[1]")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { rational_from_json(Json::parse("1.5")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { polyhedron_from_json(Json::parse("{\"le\": []}")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { polyhedron_from_json(Json::parse("{\"n\": 2, \"le\": [[[\"1\"], \"0\"]]}")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { trop_poly2_from_json(Json::parse("{\"d\": 2, \"terms\": [{\"exp\": [1], \"val\": [0, 0]}]}")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { covector_from_json(Json::parse("[[0, 1]]")); }), ErrorCode::ParseError);
}

TEST(Json, PolynomialInputForms) {
  auto by_val = trop_poly2_from_json(Json::parse(
      R"({"d": 2, "terms": [{"exp": [1, 0], "val": ["0", "0"]}, {"exp": [0, 0], "val": ["2", "1"]}]})"));
  auto by_coeff = trop_poly2_from_json(Json::parse(
      R"({"d": 2, "terms": [{"exp": [1, 0], "coeff": "1 + t"}, {"exp": [0, 0], "coeff": [{"c": "3", "t": "2", "u": "1"}]}]})"));
  EXPECT_EQ(by_val.coeffs, by_coeff.coeffs);
}

TEST(Json, DecompositionRoundTrip) {
  auto dec = rank2_decompose(poly2(2, {{{1, 1}, {0, 1}}, {{1, 0}, {0, 0}}, {{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}}));
  auto back = through_text(dec, decomposition_from_json);
  ASSERT_EQ(back.pieces.size(), dec.pieces.size());
  for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
    EXPECT_EQ(back.pieces[i].t, dec.pieces[i].t);
    EXPECT_EQ(back.pieces[i].s, dec.pieces[i].s);
    EXPECT_TRUE(same_rows(back.pieces[i].piece.t_part(), dec.pieces[i].piece.t_part()));
    EXPECT_TRUE(same_rows(back.pieces[i].piece.u_part(), dec.pieces[i].piece.u_part()));
  }
  EXPECT_EQ(to_json(back).dump(), to_json(dec).dump());
}

TEST(JsonProperty, RoundTrips) {
  Random rng(31);
  for (int k = 0; k < 100; ++k) {
    auto f = rng.poly2(2, static_cast<std::size_t>(rng.integer(1, 4)), -3, 3);
    EXPECT_EQ(through_text(f, trop_poly2_from_json).coeffs, f.coeffs);

    auto g = rng.positive_puiseux(3);
    EXPECT_EQ(through_text(g, puiseux_from_json), g);

    auto lf = rng.u_free(3, 3, -3, 3);
    EXPECT_EQ(through_text(lf, laurent_from_json).terms, lf.terms);

    auto v = rng.generators(3, 3, -3, 3, 0.2);
    EXPECT_EQ(through_text(v, generators_from_json).gens, v.gens);

    auto lex = LexPolyhedron(2, {{{1, -1}, Rank2Value(rng.integer(-3, 3), 1)}, {{0, 2}, Rank2Value(0, rng.integer(-3, 3))}});
    auto lex_back = through_text(lex, lex_polyhedron_from_json);
    ASSERT_EQ(lex_back.halfspaces().size(), 2u);
    EXPECT_EQ(lex_back.halfspaces()[0].s, lex.halfspaces()[0].s);
    EXPECT_EQ(lex_back.halfspaces()[0].q, lex.halfspaces()[0].q);
    EXPECT_EQ(lex_back.halfspaces()[1].q, lex.halfspaces()[1].q);
  }
}

TEST(JsonProperty, ComputedDocumentsRoundTrip) {
  Random rng(32);
  for (int k = 0; k < 10; ++k) {
    auto v = rng.generators(2, 3, -2, 2, 0.0);
    auto dec = cone_decompose(v);
    auto back = through_text(dec, cone_decomposition_from_json);
    EXPECT_EQ(to_json(back).dump(), to_json(dec).dump());
    for (std::size_t i = 0; i < dec.pieces.size(); ++i) EXPECT_EQ(back.pieces[i].t, dec.pieces[i].t);

    auto f = rng.u_free(2, 3, -2, 2, 1), g = rng.u_free(2, 3, -2, 2, 1);
    auto r = stable_intersection(f, g);
    auto rb = through_text(r, stable_result_from_json);
    EXPECT_EQ(rb.method, r.method);
    EXPECT_EQ(rb.beta, r.beta);
    ASSERT_EQ(rb.pieces.size(), r.pieces.size());
    for (std::size_t i = 0; i < r.pieces.size(); ++i) EXPECT_TRUE(same_rows(rb.pieces[i], r.pieces[i]));
    EXPECT_EQ(to_json(rb).dump(), to_json(r).dump());

    auto cert = choose_beta({support_of(f), support_of(g)});
    auto cb = through_text(cert, beta_certificate_from_json);
    EXPECT_EQ(cb.beta, cert.beta);
    EXPECT_EQ(cb.checked_vectors, cert.checked_vectors);
    EXPECT_EQ(cb.all_nonzero, cert.all_nonzero);
  }
  for (std::size_t d : {2, 3}) {
    auto gs = goldfarb_sit(d);
    auto back = through_text(gs, goldfarb_sit_from_json);
    EXPECT_EQ(back.vertices, gs.vertices);
    EXPECT_EQ(back.tight, gs.tight);
    ASSERT_EQ(back.rank2.size(), gs.rank2.size());
    for (std::size_t i = 0; i < gs.rank2.size(); ++i) EXPECT_EQ(row_to_string(back.rank2[i]), row_to_string(gs.rank2[i]));
    EXPECT_EQ(to_json(back).dump(), to_json(gs).dump());
  }
  auto cells = support_cells1(project_poly(poly2(2, {{{1, 0}, {0, 0}}, {{0, 1}, {1, 0}}, {{0, 0}, {2, 1}}}), Axis::T));
  EXPECT_EQ(to_json(through_text(cells, support_cells_from_json)).dump(), to_json(cells).dump());
}

TEST(Svg, ThreeRaysAtApex) {
  auto dec = rank2_decompose(poly2(2, {{{1, 0}, {0, 0}}, {{0, 1}, {1, 0}}, {{0, 0}, {2, 1}}}));
  BoundingBox box{0, -1, 4, 3};
  auto svg = render_svg(dec, Panel::T, box);
  // apex (2,1) is the centre of the box: pixel (240, 240)
  EXPECT_EQ(count(svg, "<line x1=\"240.00\" y1=\"240.00\""), 2u);  // rays east and north
  EXPECT_EQ(count(svg, "x2=\"240.00\" y2=\"240.00\""), 1u);         // diagonal ray ending at the apex
  EXPECT_EQ(count(svg, "<circle cx=\"240.00\" cy=\"240.00\""), 1u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 0u);
  EXPECT_EQ(svg, render_svg(dec, Panel::T, box));
}

TEST(Svg, EmptyDecompositionHasAxes) {
  Rank2Decomposition dec;
  dec.d = 2;
  auto svg = render_svg(dec, Panel::U);
  EXPECT_EQ(count(svg, "<line"), 2u);
  EXPECT_EQ(count(svg, "<polygon"), 0u);
  EXPECT_NE(svg.find("-5"), std::string::npos);
}

TEST(Svg, IntervalHasDashedExcludedBoundary) {
  GeneratorMatrix v{1, {{Rank2Value(-2, 0)}, {Rank2Value(2, 1)}}};
  auto svg = render_cone_slice(v, BoundingBox{-4, -4, 4, 4});
  EXPECT_EQ(count(svg, "<polygon"), 1u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 2u);  // t = -2 below 0, t = 2 above 1
  // x = -2 is pixel 140; the dashed part runs from u = 0 (y 240) down to u = -4 (y 440)
  EXPECT_NE(svg.find("x1=\"140.00\" y1=\"240.00\" x2=\"140.00\" y2=\"440.00\" stroke=\"#333\" stroke-width=\"2\" "
                     "stroke-dasharray"),
            std::string::npos);
}

TEST(Svg, CubicRegionsLabelled) {
  auto f = poly2(2, {{{0, 0}, {0, 0}},
                     {{1, 0}, {1, 0}},
                     {{0, 1}, {1, 0}},
                     {{1, 1}, {3, 0}},
                     {{2, 0}, {5, 0}},
                     {{0, 2}, {5, 0}},
                     {{2, 1}, {9, 0}},
                     {{1, 2}, {9, 0}},
                     {{3, 0}, {15, 0}},
                     {{0, 3}, {15, 0}}});
  auto svg = render_svg(support_cells1(project_poly(f, Axis::T)));
  EXPECT_EQ(count(svg, "<polygon"), 10u);
  for (const char* label : {">1<", ">x<", ">y<", ">xy<", ">x^2<", ">y^2<", ">x^2y<", ">xy^2<", ">x^3<", ">y^3<"})
    EXPECT_EQ(count(svg, label), 1u) << label;
}

TEST(Svg, Errors) {
  Rank2Decomposition dec;
  dec.d = 3;
  EXPECT_EQ(code_of([&] { render_svg(dec, Panel::T); }), ErrorCode::UnsupportedDimension);
  EXPECT_EQ(code_of([] { parse_bbox("1,2,3"); }), ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { parse_bbox("1,2,0,3"); }), ErrorCode::ValidationError);
  auto b = parse_bbox("-1/2,0,3,4");
  EXPECT_EQ(b.xmin, Rational(-1, 2));
  EXPECT_EQ(b.ymax, 4);
}
