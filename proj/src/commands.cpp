#include "gramcal/commands.hpp"

#include <fstream>
#include <sstream>

#include "gramcal/errors.hpp"
#include "gramcal/report.hpp"
#include "gramcal/svg_render.hpp"

namespace gramcal::cli {

namespace {

nlohmann::json polytope_to_json(const WeightedPolyhedron& wp) {
  nlohmann::json j;
  j["halfspaces"] = nlohmann::json::array();
  j["weights"] = nlohmann::json::array();
  for (size_t i = 0; i < wp.poly.facet_count(); ++i) {
    j["halfspaces"].push_back(halfspace_to_json(wp.poly.halfspaces[i]));
    j["weights"].push_back(wp.facet_weight(static_cast<int>(i)).str());
  }
  return j;
}

std::optional<MutationKind> parse_mutation(const std::string& name) {
  if (name == "none") return std::nullopt;
  if (name == "flip-sign") return MutationKind::flip_sign;
  if (name == "bump-weight") return MutationKind::bump_weight;
  if (name == "shift-offset") return MutationKind::shift_offset;
  throw input_error("unknown mutation '" + name + "'");
}

void require_single_q(const WeightedPolyhedron& wp) {
  if (wp.poly.facet_count() == 0) return;
  const Poly first = wp.facet_weight(0);
  for (size_t i = 1; i < wp.poly.facet_count(); ++i) {
    if (!(wp.facet_weight(static_cast<int>(i)) == first)) {
      throw input_error("polar mode requires the same weight on every facet");
    }
  }
  if (!first.is_single_variable()) {
    throw input_error("polar mode requires a single indeterminate weight");
  }
}

std::string signed_label(const Poly& coeff) {
  const std::string s = coeff.str();
  return s.empty() || s.front() == '-' ? s : "+" + s;
}

struct Decomposition {
  FormalSum sum;
  nlohmann::json terms;
  nlohmann::json extras;            // mode-specific report fields
  std::optional<Vec> xi_used;
};

Decomposition build_decomposition(const WeightedPolyhedron& wp, const FaceLattice& lattice,
                                  const std::string& mode, const std::optional<Vec>& xi_opt) {
  Decomposition out{FormalSum(wp.poly.dim), nlohmann::json::array(), nlohmann::json::object(), {}};
  if (mode == "bg") {
    out.sum = brianchon_gram(wp, lattice);
    out.terms = terms_to_json(out.sum);
    return out;
  }
  if (mode == "faces") {
    out.sum = face_expansion(wp, lattice);
    out.terms = terms_to_json(out.sum);
    return out;
  }
  if (mode == "brion") {
    const FormalSum bg = brianchon_gram(wp, lattice);
    const BrionSplit split = brion_split(bg);
    out.sum = split.line_part + split.vertex_part;
    for (const auto& term : split.line_part.terms()) {
      nlohmann::json j = term_to_json(term);
      j["part"] = "line";
      out.terms.push_back(std::move(j));
    }
    for (const auto& term : split.vertex_part.terms()) {
      nlohmann::json j = term_to_json(term);
      j["part"] = "vertex";
      out.terms.push_back(std::move(j));
    }
    out.extras["line_terms"] = split.line_part.size();
    out.extras["vertex_terms"] = split.vertex_part.size();
    return out;
  }
  if (mode == "polar") {
    require_single_q(wp);
    const Vec xi = xi_opt ? *xi_opt : sample_polarizing(wp.poly, lattice);
    if (!is_polarizing(xi, lattice)) {
      throw input_error("--xi is not polarizing (constant on an edge)");
    }
    const std::vector<PolarizedCone> cones = polar_decompose(wp, lattice, xi);
    out.sum = polar_total(cones, wp.poly.dim);
    size_t i = 0;
    for (const auto& cone : cones) {
      nlohmann::json j = term_to_json(out.sum.terms()[i++]);
      j["flips"] = cone.flip_count();
      j["vertex"] = nlohmann::json::array();
      for (const auto& c : cone.vertex.point) j["vertex"].push_back(to_string(c));
      out.terms.push_back(std::move(j));
    }
    nlohmann::json xi_json = nlohmann::json::array();
    for (const auto& c : xi) xi_json.push_back(to_string(c));
    out.extras["xi"] = std::move(xi_json);
    out.xi_used = xi;
    return out;
  }
  throw input_error("unknown mode '" + mode + "'");
}

}  // namespace

Vec parse_xi(const std::string& csv, int dim) {
  Vec xi;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) xi.push_back(parse_rational(part));
  if (static_cast<int>(xi.size()) != dim) {
    throw input_error("--xi needs " + std::to_string(dim) + " comma-separated rationals");
  }
  return xi;
}

CommandOutcome cmd_decompose(const std::string& path, const DecomposeOptions& options) {
  const WeightedPolyhedron wp = build_weighted(parse_polytope_file(path));
  if (!is_bounded(wp.poly)) throw input_error("decompose: input polyhedron is unbounded");
  const FaceLattice lattice = enumerate_faces(wp.poly);
  const GenericityReport genericity = classify_genericity(wp.poly, lattice);
  const std::optional<MutationKind> mutation = parse_mutation(options.mutate);

  CommandOutcome outcome;
  outcome.report["command"] = "decompose";
  outcome.report["file"] = path;
  outcome.report["mode"] = options.mode;
  outcome.report["dim"] = wp.poly.dim;
  outcome.report["genericity"] = to_string(genericity.cls);
  outcome.report["polytope"] = polytope_to_json(wp);

  const CheckOptions check_options{options.cell_cap, options.fallback_samples, options.seed};

  // The non-simple Brianchon-Gram route runs the whole chopping pipeline;
  // fault injection bypasses it and checks the mutated sum directly.
  if (options.mode == "bg" && genericity.cls == Genericity::nonsimple_vertices_only &&
      !mutation) {
    const ChopData chop = chop_nonsimple(wp);
    const NonsimpleWitness witness = nonsimple_bg_witness(wp, chop, check_options);
    outcome.report["terms"] = terms_to_json(witness.f_p);
    nlohmann::json pipeline = nlohmann::json::array();
    const Verdict* conclusion = nullptr;
    for (const auto& check : witness.checks) {
      nlohmann::json j = verdict_to_json(check.verdict);
      j["name"] = check.name;
      pipeline.push_back(std::move(j));
      if (check.name == "conclusion") conclusion = &check.verdict;
    }
    outcome.report["verification"] = verdict_to_json(*conclusion);
    outcome.report["verification"]["pipeline"] = std::move(pipeline);
    bool failed = false;
    for (const auto& check : witness.checks) {
      if (check.verdict.kind == Verdict::Kind::unequal) failed = true;
    }
    outcome.exit_code = failed ? 1 : 0;
    outcome.text = "bg (non-simple pipeline): " + to_string(conclusion->kind) + " over " +
                   std::to_string(conclusion->checked) + " cells";
    return outcome;
  }

  Decomposition dec = build_decomposition(wp, lattice, options.mode, options.xi);
  if (mutation) dec.sum = mutate_sum(dec.sum, *mutation);

  const Verdict verdict = identity_check(dec.sum, indicator_sum(wp), check_options);
  outcome.report["terms"] =
      mutation ? terms_to_json(dec.sum) : std::move(dec.terms);
  for (auto& [key, value] : dec.extras.items()) outcome.report[key] = value;
  outcome.report["verification"] = verdict_to_json(verdict);
  outcome.exit_code = verdict.kind == Verdict::Kind::unequal ? 1 : 0;
  outcome.text = options.mode + ": " + to_string(verdict.kind) + " (" + verdict.mode + ", " +
                 std::to_string(verdict.checked) + ")";
  return outcome;
}

Verdict reverify_report(const nlohmann::json& report) {
  const int dim = report.at("dim").get<int>();
  WeightedPolyhedron wp;
  wp.poly.dim = dim;
  const auto& poly = report.at("polytope");
  const auto& halfspaces = poly.at("halfspaces");
  const auto& weights = poly.at("weights");
  for (size_t i = 0; i < halfspaces.size(); ++i) {
    wp.poly.halfspaces.push_back(halfspace_from_json(halfspaces[i]));
    wp.weights.explicit_weights.emplace(static_cast<int>(i),
                                        parse_poly(weights[i].get<std::string>()));
  }
  const FormalSum sum = sum_from_json(report.at("terms"), dim);
  return identity_check(sum, indicator_sum(wp), CheckOptions{});
}

CommandOutcome cmd_lattice_sum(const std::string& path, const std::string& box_spec) {
  const WeightedPolyhedron wp = build_weighted(parse_polytope_file(path));
  if (!is_bounded(wp.poly)) throw input_error("lattice-sum: input polyhedron is unbounded");
  const int dim = wp.poly.dim;

  std::vector<std::pair<Rational, Rational>> box;
  {
    std::istringstream in(box_spec);
    std::string part;
    while (std::getline(in, part, ',')) {
      const auto colon = part.find(':');
      if (colon == std::string::npos) {
        throw input_error("--box axis '" + part + "' must be '<lo>:<hi>'");
      }
      box.emplace_back(parse_rational(part.substr(0, colon)),
                       parse_rational(part.substr(colon + 1)));
    }
  }
  if (static_cast<int>(box.size()) != dim) {
    throw input_error("--box needs " + std::to_string(dim) + " axes");
  }

  std::vector<mpz_class> lo(box.size()), hi(box.size());
  mpz_class point_count(1);
  for (size_t k = 0; k < box.size(); ++k) {
    lo[k] = rational_ceil(box[k].first).get_num();
    hi[k] = rational_floor(box[k].second).get_num();
    mpz_class width = hi[k] - lo[k] + 1;
    if (width < 0) width = 0;
    point_count *= width;
  }
  if (point_count > 1000000) throw unsupported_error("lattice-sum: box has too many points");

  const FormalSum bg = brianchon_gram(wp);
  Poly direct, via_decomposition;
  size_t points = 0;
  if (point_count > 0) {
    std::vector<mpz_class> current(lo);
    while (true) {
      Vec x;
      x.reserve(current.size());
      for (const auto& c : current) x.emplace_back(c);
      direct += weight_at(wp, x);
      via_decomposition += bg.evaluate(x);
      ++points;
      size_t k = 0;
      for (; k < current.size(); ++k) {
        if (current[k] < hi[k]) {
          ++current[k];
          for (size_t j = 0; j < k; ++j) current[j] = lo[j];
          break;
        }
      }
      if (k == current.size()) break;
    }
  }

  CommandOutcome outcome;
  const bool agree = direct == via_decomposition;
  outcome.exit_code = agree ? 0 : 1;
  outcome.report["command"] = "lattice-sum";
  outcome.report["file"] = path;
  outcome.report["box"] = box_spec;
  outcome.report["points"] = points;
  outcome.report["sum"] = direct.str();
  outcome.report["decomposition_sum"] = via_decomposition.str();
  outcome.report["cross_check"] = agree ? "equal" : "unequal";
  outcome.text = direct.str();
  return outcome;
}

CommandOutcome cmd_render_svg(const std::string& path, const std::string& mode,
                              const std::optional<Vec>& xi, const std::string& out_path) {
  const WeightedPolyhedron wp = build_weighted(parse_polytope_file(path));
  if (!is_bounded(wp.poly)) throw input_error("render: input polyhedron is unbounded");
  const FaceLattice lattice = enumerate_faces(wp.poly);
  const Decomposition dec = build_decomposition(wp, lattice, mode, xi);

  std::vector<SvgPanel> panels;
  panels.push_back({"target", WeightedBody::of_polyhedron(wp)});
  for (const auto& term : dec.sum.terms()) {
    panels.push_back({signed_label(term.coeff), term.body});
  }
  const std::string svg = render_panels_svg(wp, panels);

  std::ofstream out(out_path);
  if (!out) throw input_error("cannot write '" + out_path + "'");
  out << svg;

  CommandOutcome outcome;
  outcome.report["command"] = "render";
  outcome.report["mode"] = mode;
  outcome.report["out"] = out_path;
  outcome.report["panels"] = panels.size();
  outcome.text = "wrote " + out_path + " (" + std::to_string(panels.size()) + " panels)";
  return outcome;
}

CommandOutcome cmd_info(const std::string& path) {
  const WeightedPolyhedron wp = build_weighted(parse_polytope_file(path));
  const FaceLattice lattice = enumerate_faces(wp.poly);
  const GenericityReport genericity = classify_genericity(wp.poly, lattice);
  const bool bounded = is_bounded(wp.poly);

  CommandOutcome outcome;
  outcome.report["command"] = "info";
  outcome.report["file"] = path;
  outcome.report["dim"] = wp.poly.dim;
  outcome.report["facets"] = wp.poly.facet_count();
  outcome.report["bounded"] = bounded;
  outcome.report["genericity"] = to_string(genericity.cls);
  nlohmann::json by_dim = nlohmann::json::object();
  for (int k = 0; k <= wp.poly.dim; ++k) {
    const size_t n = lattice.of_dim(k).size();
    if (n > 0) by_dim[std::to_string(k)] = n;
  }
  outcome.report["faces_by_dim"] = std::move(by_dim);
  outcome.report["face_count"] = lattice.faces.size();
  nlohmann::json vns = nlohmann::json::array();
  for (const auto& v : genericity.nonsimple_vertices) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& c : v.point) p.push_back(to_string(c));
    vns.push_back(std::move(p));
  }
  outcome.report["nonsimple_vertices"] = std::move(vns);

  std::ostringstream text;
  text << "dim " << wp.poly.dim << ", " << wp.poly.facet_count() << " facets, "
       << lattice.vertices().size() << " vertices, " << lattice.faces.size() << " faces, "
       << (bounded ? "bounded" : "unbounded") << ", " << to_string(genericity.cls);
  if (!genericity.nonsimple_vertices.empty()) {
    text << ", |V_ns| = " << genericity.nonsimple_vertices.size();
  }
  outcome.text = text.str();
  return outcome;
}

}  // namespace gramcal::cli
