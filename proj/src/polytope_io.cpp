#include "gramcal/polytope_io.hpp"

#include <fstream>
#include <sstream>

#include "gramcal/errors.hpp"

namespace gramcal {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& what) {
  throw input_error(source + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

ParsedPolytope parse_polytope_text(std::istream& in, const std::string& source_name) {
  ParsedPolytope out;
  bool have_dim = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head)) continue;  // blank
    if (head.front() == '#') continue;

    if (head == "dim") {
      if (have_dim) parse_fail(source_name, line_no, "duplicate 'dim' directive");
      long d = 0;
      if (!(tokens >> d) || d < 1) parse_fail(source_name, line_no, "expected 'dim <d>' with d >= 1");
      std::string extra;
      if (tokens >> extra) parse_fail(source_name, line_no, "trailing tokens after 'dim'");
      out.dim = static_cast<int>(d);
      have_dim = true;
      continue;
    }
    if (head == "facet") {
      if (!have_dim) parse_fail(source_name, line_no, "'facet' before 'dim'");
      AffineForm f;
      f.normal.reserve(static_cast<size_t>(out.dim));
      std::vector<std::string> entries;
      std::string tok;
      std::optional<std::string> weight_expr;
      while (tokens >> tok) {
        if (tok.rfind("weight=", 0) == 0) {
          // The expression is the rest of the line, spaces included.
          std::string rest;
          std::getline(tokens, rest);
          weight_expr = tok.substr(7) + rest;
          break;
        }
        entries.push_back(tok);
      }
      if (entries.size() != static_cast<size_t>(out.dim) + 1) {
        parse_fail(source_name, line_no,
                   "expected " + std::to_string(out.dim + 1) + " entries, got " +
                       std::to_string(entries.size()));
      }
      try {
        for (int k = 0; k < out.dim; ++k) f.normal.push_back(parse_rational(entries[static_cast<size_t>(k)]));
        f.offset = parse_rational(entries.back());
      } catch (const input_error& e) {
        parse_fail(source_name, line_no, e.what());
      }
      std::optional<Poly> weight;
      if (weight_expr) {
        try {
          weight = parse_poly(*weight_expr);
        } catch (const input_error& e) {
          parse_fail(source_name, line_no, e.what());
        }
      }
      out.forms.push_back(std::move(f));
      out.weights.push_back(std::move(weight));
      continue;
    }
    parse_fail(source_name, line_no, "unknown directive '" + head + "'");
  }
  if (!have_dim) throw input_error(source_name + ": missing 'dim' directive");
  return out;
}

ParsedPolytope parse_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  return parse_polytope_text(in, path);
}

WeightedPolyhedron build_weighted(const ParsedPolytope& parsed) {
  const BuiltPolyhedron built = build_polyhedron_indexed(parsed.forms, parsed.dim);
  WeightedPolyhedron wp;
  wp.poly = built.poly;
  for (size_t pos = 0; pos < built.kept.size(); ++pos) {
    const size_t original = built.kept[pos];
    const Poly weight = parsed.weights[original].has_value()
                            ? *parsed.weights[original]
                            : Poly::var(facet_weight_name(static_cast<int>(original)));
    wp.weights.explicit_weights.emplace(static_cast<int>(pos), weight);
  }
  return wp;
}

std::string print_polytope_file(const WeightedPolyhedron& wp) {
  std::ostringstream out;
  out << "dim " << wp.poly.dim << "\n";
  for (size_t i = 0; i < wp.poly.facet_count(); ++i) {
    out << "facet " << to_string(wp.poly.halfspaces[i]) << " weight="
        << wp.facet_weight(static_cast<int>(i)).str() << "\n";
  }
  return out.str();
}

}  // namespace gramcal
