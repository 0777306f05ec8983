// trop2: batch front end. One job per invocation, JSON in and JSON (or SVG) out.
//
// Exit status: 0 success, 2 bad input or options, 3 computation error or a
// failed --oracle / --selfcheck comparison.

#include "trop2/error.hpp"
#include "trop2/io.hpp"
#include "trop2/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace trop2;

namespace {

struct Options {
  std::string input, f, g, gens, out, sigma, rho, beta, grid = "1/4", bbox, format = "json", panel = "t";
  std::uint64_t seed = 0;
  std::size_t d = 0, count = 1000;
  bool oracle = false, selfcheck = false, polytope = false;
};

// Parsed and validated option values.
struct Job {
  std::string command;
  Options opt;
  std::optional<Rational> sigma, rho, beta;
  Rational grid;
  std::optional<BoundingBox> bbox;
  Panel panel = Panel::T;
};

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InadmissibleEvaluation:
    case ErrorCode::NonEvaluableExponent:
    case ErrorCode::EmptyPolyhedron:
    case ErrorCode::CellNotInComplex:
    case ErrorCode::NonGenericDirection:
      return 3;
    default:
      return 2;
  }
}

Rational option_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorCode::ValidationError, "--" + name + " expects p/q, got \"" + text + "\"");
  }
}

Job validate(const std::string& command, const Options& o) {
  Job job{command, o, {}, {}, {}, option_rational("grid", o.grid), {}, Panel::T};
  if (!o.sigma.empty()) job.sigma = option_rational("sigma", o.sigma);
  if (!o.rho.empty()) job.rho = option_rational("rho", o.rho);
  if (!o.beta.empty()) job.beta = option_rational("beta", o.beta);
  for (const auto* v : {&job.sigma, &job.rho, &job.beta})
    if (*v && **v <= 0) throw Error(ErrorCode::ValidationError, "--sigma, --rho and --beta must be positive");
  if (job.grid <= 0) throw Error(ErrorCode::ValidationError, "--grid must be positive");
  if (!o.bbox.empty()) job.bbox = parse_bbox(o.bbox);
  if (o.format != "json" && o.format != "svg") throw Error(ErrorCode::ValidationError, "--format is json or svg");
  if (o.panel != "t" && o.panel != "u") throw Error(ErrorCode::ValidationError, "--panel is t or u");
  job.panel = o.panel == "t" ? Panel::T : Panel::U;
  return job;
}

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

void write_output(const Job& job, const std::string& text) {
  if (job.opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(job.opt.out);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + job.opt.out);
  out << text;
}

Json header(const Job& job, Json inputs) {
  Json options = {{"grid", format_rational(job.grid)}, {"seed", job.opt.seed}};
  if (job.sigma) options["sigma"] = format_rational(*job.sigma);
  if (job.rho) options["rho"] = format_rational(*job.rho);
  if (job.beta) options["beta"] = format_rational(*job.beta);
  if (job.bbox) options["bbox"] = job.opt.bbox;
  return {{"tool", "trop2"}, {"version", kVersion}, {"command", job.command}, {"inputs", std::move(inputs)},
          {"options", std::move(options)}};
}

Json echo(const std::string& path, const Json& doc) { return {{"path", path}, {"document", doc}}; }

int emit(const Job& job, const Json& doc) {
  write_output(job, doc.dump(2) + "\n");
  return 0;
}

// Terms given by valuation are lifted to the monomial t^a u^b.
LaurentPolynomial polynomial_from_json(const Json& j) {
  Json copy = j;
  if (copy.contains("terms") && copy["terms"].is_array())
    for (auto& term : copy["terms"])
      if (term.contains("val") && !term.contains("coeff")) {
        auto v = rank2_from_json(term["val"]);
        if (v.is_zero()) throw Error(ErrorCode::ParseError, "coefficient valuation may not be inf");
        term["coeff"] = to_json(PuiseuxPoly::monomial(1, v.first(), v.second()));
      }
  return laurent_from_json(copy);
}

int run_hypersurface(const Job& job) {
  Json doc = read_document(job.opt.input);
  TropPoly2 f = trop_poly2_from_json(doc);
  auto dec = rank2_decompose(f);
  if (job.opt.format == "svg") {
    write_output(job, render_svg(dec, job.panel, job.bbox));
    return 0;
  }
  Json out = header(job, {{"input", echo(job.opt.input, doc)}});
  out["decomposition"] = to_json(dec);
  out["piece_count"] = dec.pieces.size();
  int status = 0;
  if (job.opt.selfcheck) {
    auto g = grid_check(f, dec, job.grid);
    Json bad = Json::array();
    for (const auto& p : g.failures) {
      Json x = Json::array();
      for (const auto& c : p) x.push_back(to_json(c));
      bad.push_back(x);
    }
    out["selfcheck"] = {{"step", format_rational(g.step)}, {"samples", g.samples}, {"grid_points", g.grid_points},
                        {"failures", bad}, {"ok", g.ok()}};
    if (!g.ok()) status = 3;
  }
  emit(job, out);
  return status;
}

int run_closure(const Job& job) {
  Json doc = read_document(job.opt.input);
  Rank2Decomposition dec;
  if (doc.contains("decomposition")) dec = decomposition_from_json(doc["decomposition"]);
  else if (doc.contains("pieces")) dec = decomposition_from_json(doc);
  else dec = rank2_decompose(trop_poly2_from_json(doc));
  auto pieces = closure2(dec);
  auto maximal = maximal_pieces(pieces);
  Json list = Json::array();
  for (const auto& p : pieces) {
    bool is_max = std::any_of(maximal.begin(), maximal.end(), [&](const auto& m) { return piece_equal(m, p); });
    list.push_back({{"Qt", to_json(p.t_part())}, {"Ru", to_json(p.u_part())}, {"dim", p.affine_dim()}, {"maximal", is_max}});
  }
  Json out = header(job, {{"input", echo(job.opt.input, doc)}});
  out["d"] = dec.d;
  out["closure"] = list;
  return emit(job, out);
}

int run_stable(const Job& job) {
  Json fdoc = read_document(job.opt.f), gdoc = read_document(job.opt.g);
  auto f = polynomial_from_json(fdoc), g = polynomial_from_json(gdoc);
  if (f.d != g.d) throw Error(ErrorCode::DimensionMismatch, "f and g have different d");
  std::vector<SupportSet> supports{support_of(f), support_of(g)};
  BetaCertificate cert = job.beta ? certify_beta(supports, *job.beta) : choose_beta(supports);
  if (!cert.all_nonzero)
    throw Error(ErrorCode::ValidationError, "--beta " + pretty_rational(*job.beta) + " is not generic for these supports");
  auto result = stable_intersection(f, g, cert.beta);
  Json out = header(job, {{"f", echo(job.opt.f, fdoc)}, {"g", echo(job.opt.g, gdoc)}});
  out["beta_certificate"] = to_json(cert);
  out["result"] = to_json(result);
  int status = 0;
  if (job.opt.oracle) {
    auto direct = direct_stable_intersection(f, g);
    bool agree = union_equal(result.pieces, direct.pieces);
    out["oracle"] = {{"method", direct.method}, {"pieces", to_json(direct)["pieces"]}, {"agreement", agree}};
    if (!agree) status = 3;
  }
  emit(job, out);
  return status;
}

int run_cone(const Job& job) {
  Json doc = read_document(job.opt.gens);
  auto v = generators_from_json(doc);
  if (job.opt.polytope) v = homogenize(v);
  auto dec = cone_decompose(v);
  if (job.opt.format == "svg") {
    write_output(job, render_svg(dec, job.panel, job.bbox));
    return 0;
  }
  Json out = header(job, {{"gens", echo(job.opt.gens, doc)}});
  out["homogenized"] = job.opt.polytope;
  out["decomposition"] = to_json(dec);
  out["piece_count"] = dec.pieces.size();
  return emit(job, out);
}

int run_gscube(const Job& job) {
  auto gs = goldfarb_sit(job.opt.d);
  bool cube = check_cube_incidence(gs);
  Json out = header(job, {{"d", job.opt.d}});
  out["goldfarb_sit"] = to_json(gs);
  out["vertex_count"] = gs.vertices.size();
  out["cube_incidence"] = cube;
  emit(job, out);
  return cube ? 0 : 3;
}

const Rational kSigmas[] = {Rational(1, 2), Rational(1, 3), Rational(2)};

// Random positive polynomial: integer u-exponents keep sigma^b rational.
PuiseuxPoly random_positive(std::mt19937_64& rng) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  PuiseuxPoly g;
  Rational a(pick(-6, 6), 2), b(pick(-3, 3));
  a.canonicalize();
  g.add_term(pick(1, 9), a, b);
  for (long k = pick(0, 4); k > 0; --k) {
    Rational da(pick(0, 6), 2), db(pick(-3, 3));
    da.canonicalize();
    if (da == 0 && db <= 0) db = pick(1, 3);
    long c = pick(1, 9) * (pick(0, 1) ? 1 : -1);
    g.add_term(c, a + da, b + db);
  }
  return g;
}

// c t^a u^b - c sigma^b t^a with b < 0: positive, and the t^a sum vanishes at sigma.
PuiseuxPoly manufactured_cancellation(std::mt19937_64& rng, const Rational& sigma) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  Rational a(pick(-4, 4)), c(pick(1, 9));
  long b = -pick(1, 3);
  PuiseuxPoly g;
  g.add_term(c, a, b);
  g.add_term(-c * *exact_power(sigma, b), a, 0);
  g.add_term(pick(1, 9), a + pick(1, 3), 0);
  return g;
}

Json diagram_report(const PuiseuxPoly& gamma, const Rational& sigma) {
  Json r = {{"gamma", gamma.to_string()}, {"sigma", format_rational(sigma)}, {"val2", to_json(val2(gamma))}};
  auto image = partial_eval_u(gamma, EvalPoint(sigma));
  r["image"] = image.to_string();
  r["image_val"] = to_json(val2(image).first());
  r["holds"] = check_diagram(gamma, EvalPoint(sigma));
  return r;
}

int run_check_diagram(const Job& job) {
  if (job.opt.selfcheck) {
    std::mt19937_64 rng(job.opt.seed);
    std::size_t checked = 0, inadmissible = 0, failures = 0, cancellations = 0, flagged = 0;
    for (std::size_t k = 0; k < job.opt.count; ++k) {
      auto gamma = random_positive(rng);
      const auto& sigma = kSigmas[k % 3];
      if (!is_admissible_u(gamma, EvalPoint(sigma))) {
        ++inadmissible;
        continue;
      }
      ++checked;
      failures += !check_diagram(gamma, EvalPoint(sigma));
    }
    for (std::size_t k = 0; k < std::max<std::size_t>(job.opt.count / 10, 1); ++k) {
      const auto& sigma = kSigmas[k % 3];
      auto gamma = manufactured_cancellation(rng, sigma);
      ++cancellations;
      bool rejected = !is_admissible_u(gamma, EvalPoint(sigma));
      try {
        partial_eval_u(gamma, EvalPoint(sigma));
        rejected = false;
      } catch (const Error& e) {
        rejected = rejected && e.code() == ErrorCode::InadmissibleEvaluation;
      }
      flagged += rejected;
    }
    Json out = header(job, Json::object());
    bool ok = failures == 0 && flagged == cancellations;
    out["selfcheck"] = {{"cases", job.opt.count},          {"admissible_checked", checked},
                        {"inadmissible_skipped", inadmissible}, {"failures", failures},
                        {"cancellations", cancellations},   {"cancellations_flagged", flagged},
                        {"ok", ok}};
    emit(job, out);
    return ok ? 0 : 3;
  }
  if (job.opt.input.empty()) throw Error(ErrorCode::ValidationError, "check-diagram needs --input or --selfcheck");
  if (!job.sigma) throw Error(ErrorCode::ValidationError, "check-diagram needs --sigma");
  Json doc = read_document(job.opt.input);
  auto gamma = puiseux_from_json(doc.is_object() ? doc.at("gamma") : doc);
  Json out = header(job, {{"input", echo(job.opt.input, doc)}});
  out["diagram"] = diagram_report(gamma, *job.sigma);
  if (job.rho) {
    auto image = partial_eval_t(gamma, EvalPoint(*job.rho));
    out["t_evaluation"] = {{"rho", format_rational(*job.rho)}, {"image", image.to_string()},
                           {"image_val", to_json(val2(image).second())}};
  }
  emit(job, out);
  return out["diagram"]["holds"].get<bool>() ? 0 : 3;
}

int run_plot(const Job& job) {
  Json doc = read_document(job.opt.input);
  std::string svg;
  if (doc.contains("gens")) {
    svg = render_cone_slice(generators_from_json(doc), job.bbox);
  } else if (doc.contains("terms")) {
    auto f = trop_poly2_from_json(doc);
    svg = render_svg(support_cells1(project_poly(f, job.panel == Panel::T ? Axis::T : Axis::U)), job.bbox);
  } else if (doc.contains("pieces") && !doc["pieces"].empty() && doc["pieces"][0].contains("At")) {
    svg = render_svg(cone_decomposition_from_json(doc), job.panel, job.bbox);
  } else if (doc.contains("decomposition") && doc["command"] == "cone") {
    svg = render_svg(cone_decomposition_from_json(doc["decomposition"]), job.panel, job.bbox);
  } else if (doc.contains("decomposition")) {
    svg = render_svg(decomposition_from_json(doc["decomposition"]), job.panel, job.bbox);
  } else {
    svg = render_svg(decomposition_from_json(doc), job.panel, job.bbox);
  }
  write_output(job, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-two tropical hypersurfaces, stable intersections and tropical cones"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "output file (default stdout)");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
  };
  auto plotting = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or svg");
    sub->add_option("--panel", o.panel, "t or u");
    sub->add_option("--bbox", o.bbox, "xmin,ymin,xmax,ymax");
  };

  auto* hyp = app.add_subcommand("hypersurface", "rank-two decomposition of trop2(f)");
  hyp->add_option("--input", o.input, "polynomial JSON")->required()->check(CLI::ExistingFile);
  hyp->add_flag("--selfcheck", o.selfcheck, "grid soundness check (d = 2)");
  hyp->add_option("--grid", o.grid, "grid step p/q");
  common(hyp);
  plotting(hyp);

  auto* clo = app.add_subcommand("closure", "closed pieces of a decomposition");
  clo->add_option("--input", o.input, "polynomial or decomposition JSON")->required()->check(CLI::ExistingFile);
  common(clo);

  auto* sta = app.add_subcommand("stable", "stable intersection of trop(f) and trop(g)");
  sta->add_option("--f", o.f, "polynomial JSON")->required()->check(CLI::ExistingFile);
  sta->add_option("--g", o.g, "polynomial JSON")->required()->check(CLI::ExistingFile);
  sta->add_option("--beta", o.beta, "perturbation weight p/q (skips the search)");
  sta->add_flag("--oracle", o.oracle, "compare with the cell-pair definition");
  common(sta);

  auto* con = app.add_subcommand("cone", "covector decomposition of a rank-two cone");
  con->add_option("--gens", o.gens, "generator JSON")->required()->check(CLI::ExistingFile);
  con->add_flag("--polytope", o.polytope, "homogenise first");
  common(con);
  plotting(con);

  auto* gsc = app.add_subcommand("gscube", "Goldfarb-Sit cube systems");
  gsc->add_option("--d", o.d, "dimension")->required();
  common(gsc);

  auto* dia = app.add_subcommand("check-diagram", "valuation versus partial evaluation");
  dia->add_option("--input", o.input, "Puiseux polynomial JSON")->check(CLI::ExistingFile);
  dia->add_option("--sigma", o.sigma, "value substituted for u");
  dia->add_option("--rho", o.rho, "value substituted for t");
  dia->add_flag("--selfcheck", o.selfcheck, "random cases");
  dia->add_option("--count", o.count, "random cases for --selfcheck");
  common(dia);

  auto* plo = app.add_subcommand("plot", "SVG of a d = 2 document");
  plo->add_option("--input", o.input, "polynomial, decomposition or generator JSON")->required()->check(CLI::ExistingFile);
  common(plo);
  plotting(plo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Job job = validate(command, o);
    if (command == "hypersurface") return run_hypersurface(job);
    if (command == "closure") return run_closure(job);
    if (command == "stable") return run_stable(job);
    if (command == "cone") return run_cone(job);
    if (command == "gscube") return run_gscube(job);
    if (command == "check-diagram") return run_check_diagram(job);
    return run_plot(job);
  } catch (const Error& e) {
    Json err = {{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return exit_code(e.code());
  } catch (const nlohmann::json::exception& e) {
    Json err = {{"error", "ParseError"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
}
