#include "nlie/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nlie/cohomology.hpp"
#include "nlie/quotient.hpp"

namespace nlie {

namespace {

using nlohmann::json;

Rat rat_from_json(const json& v) {
  if (v.is_string()) return rat_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw ParseError("rational values must be strings like \"p/q\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// "2*e1 - 1/2*e3", or "0" for the zero vector.
std::string format_combo(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Rat c = v[i];
    bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    Rat a = abs(c);
    std::string name = i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    if (a == 1)
      out += name;
    else
      out += rat_to_string(a) + "*" + name;
  }
  return out.empty() ? "0" : out;
}

json vec_to_json(const Vec& v) {
  json obj = json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) obj[std::to_string(i)] = rat_to_string(v[i]);
  return obj;
}

std::string tuple_to_string(const Tuple& t,
                            const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += t[i] < names.size() ? names[t[i]] : std::to_string(t[i]);
  }
  return out + ")";
}

json algebra_summary(const NLieAlgebra& g) {
  return json{{"arity", g.arity()}, {"dim", g.dim()}, {"basis", g.basis_names()}};
}

std::vector<std::string> quotient_labels(const QuotientLie& q) {
  std::vector<std::string> labels;
  for (std::size_t rep : q.projection().representatives)
    labels.push_back(q.ext_basis().label(rep, q.source().basis_names()));
  return labels;
}

}  // namespace

NLieAlgebra algebra_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("arity") || !doc.contains("dim"))
      throw ParseError("algebra file needs \"arity\" and \"dim\"");
    std::size_t arity = doc.at("arity").get<std::size_t>();
    std::size_t dim = doc.at("dim").get<std::size_t>();
    if (arity < 2) throw ParseError("arity must be >= 2");
    std::vector<std::string> names;
    if (doc.contains("basis")) {
      names = doc.at("basis").get<std::vector<std::string>>();
      if (names.size() != dim) throw ParseError("basis name count != dim");
    }
    NLieAlgebra g(arity, dim, names);
    std::set<Tuple> seen;
    for (const json& entry : doc.value("brackets", json::array())) {
      Tuple args = entry.at("args").get<Tuple>();
      if (args.size() != arity)
        throw ParseError("bracket args must have length arity");
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] >= dim) throw ParseError("bracket arg index out of range");
        if (i > 0 && args[i - 1] >= args[i])
          throw ParseError("bracket args must be strictly increasing");
      }
      if (!seen.insert(args).second)
        throw ParseError("duplicate bracket args entry");
      Vec value(dim, Rat(0));
      for (const auto& [key, coeff] : entry.at("value").items()) {
        std::size_t idx = std::stoul(key);
        if (idx >= dim) throw ParseError("bracket value index out of range");
        value[idx] = rat_from_json(coeff);
      }
      g.set_bracket(args, value);
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed algebra file: ") + e.what());
  }
}

std::string algebra_to_json(const NLieAlgebra& g) {
  json brackets = json::array();
  for (const auto& [args, value] : g.structure())
    brackets.push_back({{"args", args}, {"value", vec_to_json(value)}});
  json doc{{"arity", g.arity()},
           {"dim", g.dim()},
           {"basis", g.basis_names()},
           {"brackets", brackets}};
  return doc.dump(2);
}

NLieAlgebra load_algebra_file(const std::string& path) {
  return algebra_from_json(read_file(path));
}

Subspace subspace_from_json(const std::string& json_text) {
  try {
    json doc = json::parse(json_text);
    std::size_t ambient = doc.at("ambient").get<std::size_t>();
    std::vector<Vec> rows;
    for (const json& row : doc.at("rows")) {
      Vec v;
      for (const json& entry : row) v.push_back(rat_from_json(entry));
      if (v.size() != ambient)
        throw ParseError("subspace row length != ambient");
      rows.push_back(std::move(v));
    }
    return Subspace::span(rows, ambient);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed subspace file: ") + e.what());
  }
}

Subspace load_subspace_file(const std::string& path) {
  return subspace_from_json(read_file(path));
}

Report report_check(const NLieAlgebra& g, bool as_json) {
  auto violations = g.check_filippov();
  Report rep;
  rep.exit_code = violations.empty() ? 0 : 1;
  if (as_json) {
    json list = json::array();
    for (const auto& v : violations)
      list.push_back({{"x", v.x_tuple},
                      {"y", v.y_tuple},
                      {"residual", vec_to_json(v.residual)}});
    rep.text = json{{"command", "check"},
                    {"algebra", algebra_summary(g)},
                    {"valid", violations.empty()},
                    {"violations", list}}
                   .dump(2) +
               "\n";
    return rep;
  }
  std::ostringstream out;
  out << "n-Lie algebra: arity " << g.arity() << ", dim " << g.dim() << "\n";
  if (violations.empty()) {
    out << "Filippov identity: PASS\n";
  } else {
    out << "Filippov identity: FAIL (" << violations.size()
        << " violation(s))\n";
    for (const auto& v : violations)
      out << "  x=" << tuple_to_string(v.x_tuple, g.basis_names())
          << " y=" << tuple_to_string(v.y_tuple, g.basis_names())
          << " residual=" << format_combo(v.residual, g.basis_names()) << "\n";
  }
  rep.text = out.str();
  return rep;
}

Report report_lie(const NLieAlgebra& g, bool as_json) {
  Report rep;
  auto violations = g.check_filippov();
  if (!violations.empty()) {
    rep.exit_code = 1;
    if (as_json)
      rep.text = json{{"command", "lie"},
                      {"algebra", algebra_summary(g)},
                      {"valid", false},
                      {"error", "algebra fails the Filippov identity"}}
                     .dump(2) +
                 "\n";
    else
      rep.text = "algebra fails the Filippov identity; run `check` for details\n";
    return rep;
  }
  QuotientLie q = QuotientLie::build(g);
  bool lie_ok = q.check_lie().empty();
  bool ad_ok = q.check_ad_well_defined();
  bool morphism_ok = q.check_ad_morphism();
  rep.exit_code = (lie_ok && ad_ok && morphism_ok) ? 0 : 1;
  std::vector<std::string> labels = quotient_labels(q);
  std::size_t inv_dim = g.invariants().dim();
  if (as_json) {
    json constants = json::array();
    for (const auto& [pair, value] : q.lie().structure())
      constants.push_back(
          {{"a", pair.first}, {"b", pair.second}, {"value", vec_to_json(value)}});
    rep.text = json{{"command", "lie"},
                    {"algebra", algebra_summary(g)},
                    {"valid", true},
                    {"exterior_dim", q.ext_dim()},
                    {"relations_dim", q.relations().dim()},
                    {"lie_dim", q.lie_dim()},
                    {"quotient_basis", labels},
                    {"structure_constants", constants},
                    {"checks",
                     {{"lie_axioms", lie_ok},
                      {"ad_well_defined", ad_ok},
                      {"ad_morphism", morphism_ok}}},
                    {"analysis",
                     {{"semisimple", q.is_semisimple()},
                      {"solvable", q.is_solvable()},
                      {"nilpotent", q.is_nilpotent()},
                      {"abelian", q.is_abelian()}}},
                    {"invariants_dim", inv_dim}}
                   .dump(2) +
               "\n";
    return rep;
  }
  std::ostringstream out;
  out << "n-Lie algebra: arity " << g.arity() << ", dim " << g.dim() << "\n";
  out << "dim Lambda^" << g.arity() - 1 << "(G) = " << q.ext_dim() << "\n";
  out << "dim V = " << q.relations().dim() << "\n";
  out << "dim L = " << q.lie_dim() << "\n";
  out << "quotient basis:";
  for (const auto& l : labels) out << " " << l;
  out << "\n";
  out << "structure constants:\n";
  if (q.lie().structure().empty()) out << "  (all zero)\n";
  for (const auto& [pair, value] : q.lie().structure())
    out << "  [" << labels[pair.first] << ", " << labels[pair.second]
        << "] = " << format_combo(value, labels) << "\n";
  out << "Lie axioms: " << (lie_ok ? "PASS" : "FAIL") << "\n";
  out << "ad well defined: " << (ad_ok ? "PASS" : "FAIL") << "\n";
  out << "ad morphism: " << (morphism_ok ? "PASS" : "FAIL") << "\n";
  out << "semisimple: " << (q.is_semisimple() ? "yes" : "no")
      << ", solvable: " << (q.is_solvable() ? "yes" : "no")
      << ", nilpotent: " << (q.is_nilpotent() ? "yes" : "no")
      << ", abelian: " << (q.is_abelian() ? "yes" : "no") << "\n";
  out << "dim Inv(G) = " << inv_dim << "\n";
  rep.text = out.str();
  return rep;
}

Report report_cohomology(const NLieAlgebra& g, std::size_t max_degree,
                         bool as_json) {
  Report rep;
  if (!g.is_valid()) {
    rep.exit_code = 1;
    rep.text = as_json ? json{{"command", "cohomology"},
                              {"valid", false},
                              {"error", "algebra fails the Filippov identity"}}
                                 .dump(2) +
                             "\n"
                       : "algebra fails the Filippov identity\n";
    return rep;
  }
  QuotientLie q = QuotientLie::build(g);
  bool flat = d_squared_zero(q, max_degree);
  auto rows = cohomology_dims(q, max_degree);
  rep.exit_code = flat ? 0 : 1;
  if (as_json) {
    json table = json::array();
    for (const auto& r : rows)
      table.push_back({{"degree", r.degree},
                       {"cochain_dim", r.cochain_dim},
                       {"rank_d", r.rank_d},
                       {"kernel_dim", r.kernel_dim},
                       {"h_dim", r.h_dim}});
    rep.text = json{{"command", "cohomology"},
                    {"algebra", algebra_summary(g)},
                    {"valid", true},
                    {"lie_dim", q.lie_dim()},
                    {"d_squared_zero", flat},
                    {"table", table}}
                   .dump(2) +
               "\n";
    return rep;
  }
  std::ostringstream out;
  out << "n-Lie algebra: arity " << g.arity() << ", dim " << g.dim()
      << ", lie_dim " << q.lie_dim() << "\n";
  out << "d^2 = 0 up to degree " << max_degree << ": "
      << (flat ? "PASS" : "FAIL") << "\n";
  out << "degree  cochain_dim  rank(d)  dim_ker  dim_H\n";
  for (const auto& r : rows)
    out << "  " << r.degree << "       " << r.cochain_dim << "        "
        << r.rank_d << "      " << r.kernel_dim << "      " << r.h_dim << "\n";
  rep.text = out.str();
  return rep;
}

Report report_subspace(const NLieAlgebra& g, const Subspace& s,
                       const std::string& query, bool as_json) {
  if (s.ambient_dim() != g.dim())
    throw ParseError("subspace ambient dim does not match the algebra");
  if (!g.is_valid()) {
    Report rep;
    rep.exit_code = 1;
    rep.text = "algebra fails the Filippov identity\n";
    return rep;
  }
  QuotientLie q = QuotientLie::build(g);
  bool verdict;
  if (query == "stable")
    verdict = g.is_stable(s);
  else if (query == "ideal")
    verdict = q.is_nlie_ideal(s);
  else if (query == "cartan")
    verdict = q.is_nlie_cartan(s);
  else if (query == "invariant")
    verdict = g.invariants().contains(s);
  else
    throw ParseError("unknown query: " + query);
  std::size_t pushed = q.push_subspace(s).dim();
  Report rep;
  rep.exit_code = verdict ? 0 : 1;
  if (as_json) {
    rep.text = json{{"command", "subspace"},
                    {"algebra", algebra_summary(g)},
                    {"query", query},
                    {"subspace_dim", s.dim()},
                    {"pushed_dim", pushed},
                    {"verdict", verdict}}
                   .dump(2) +
               "\n";
  } else {
    std::ostringstream out;
    out << "query " << query << " on a dim-" << s.dim() << " subspace: "
        << (verdict ? "true" : "false") << "\n";
    out << "pushed subspace dim in L = " << pushed << "\n";
    rep.text = out.str();
  }
  return rep;
}

}  // namespace nlie
