#include "frobenius/io.hpp"

#include <fstream>
#include <set>

#include "frobenius/error.hpp"
#include "frobenius/version.hpp"

namespace frob {

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw InputError((ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

std::string child(const std::string& ptr, const std::string& key) {
  return ptr + "/" + key;
}

std::string child(const std::string& ptr, std::size_t i) {
  return ptr + "/" + std::to_string(i);
}

const Json& field(const Json& obj, const char* key, const std::string& ptr) {
  if (!obj.is_object()) fail(ptr, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(ptr, std::string("missing field '") + key + "'");
  return *it;
}

double read_real(const Json& j, const std::string& ptr) {
  if (!j.is_number()) fail(ptr, "expected a number");
  return j.get<double>();
}

std::size_t read_size(const Json& j, const std::string& ptr) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(ptr, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string read_string(const Json& j, const std::string& ptr) {
  if (!j.is_string()) fail(ptr, "expected a string");
  return j.get<std::string>();
}

Complex read_complex(const Json& j, const std::string& ptr) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2)
    fail(ptr, "expected a complex number [re, im]");
  return {read_real(j[0], child(ptr, 0)), read_real(j[1], child(ptr, 1))};
}

const Json& read_array(const Json& j, std::size_t n, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array");
  if (j.size() != n)
    fail(ptr, "expected " + std::to_string(n) + " entries, got " +
                  std::to_string(j.size()));
  return j;
}

CVec read_vector(const Json& j, std::size_t n, const std::string& ptr) {
  read_array(j, n, ptr);
  CVec v(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    v(static_cast<Eigen::Index>(i)) = read_complex(j[i], child(ptr, i));
  return v;
}

std::vector<std::string> read_labels(const Json& j, const std::string& ptr) {
  if (!j.is_array()) fail(ptr, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(read_string(j[i], child(ptr, i)));
  return out;
}

std::map<std::string, double> read_weights(const Json& j,
                                           const std::string& ptr) {
  if (!j.is_object()) fail(ptr, "expected an object of weights");
  std::map<std::string, double> out;
  for (const auto& [k, v] : j.items()) out[k] = read_real(v, child(ptr, k));
  return out;
}

Json run_info(const RunInfo& info) {
  return Json{{"version", kVersion},
              {"seed", info.seed},
              {"tolerances", {{"tol", info.tol}}}};
}

Json vectors_to_json(const std::vector<CVec>& vs) {
  Json a = Json::array();
  for (const CVec& v : vs) a.push_back(vector_to_json(v));
  return a;
}

Json map_to_json(const PointMap& m) {
  Json o = Json::object();
  for (const auto& [k, v] : m) o[k] = v;
  return o;
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json vector_to_json(const CVec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
  return a;
}

HilbSemigroup semigroup_from_json(const Json& doc,
                                  std::optional<double> tol) {
  const std::size_t n = read_size(field(doc, "dim", ""), "/dim");
  const Json& mult = read_array(field(doc, "mult", ""), n, "/mult");
  std::vector<Complex> e(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string pi = child("/mult", i);
    read_array(mult[i], n, pi);
    for (std::size_t j = 0; j < n; ++j) {
      const std::string pj = child(pi, j);
      read_array(mult[i][j], n, pj);
      for (std::size_t k = 0; k < n; ++k)
        e[(i * n + j) * n + k] = read_complex(mult[i][j][k], child(pj, k));
    }
  }
  double t = kDefaultTol;
  if (doc.contains("tol")) t = read_real(doc["tol"], "/tol");
  if (tol) t = *tol;
  if (!(t > 0.0)) fail("/tol", "tolerance must be positive");
  std::string label;
  if (doc.contains("label")) label = read_string(doc["label"], "/label");
  for (const Complex& z : e)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail("/mult", "non-finite entry");
  return HilbSemigroup::new_unchecked(MultTensor(n, std::move(e)), t,
                                      std::move(label));
}

Json to_json(const HilbSemigroup& s) {
  const std::size_t n = s.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json col = Json::array();
      for (std::size_t k = 0; k < n; ++k)
        col.push_back(complex_to_json(s.tensor()(i, j, k)));
      row.push_back(std::move(col));
    }
    mult.push_back(std::move(row));
  }
  Json doc{{"dim", n}, {"mult", std::move(mult)}, {"tol", s.tol()}};
  if (!s.label().empty()) doc["label"] = s.label();
  return doc;
}

OrthogonalSet orthogonal_set_from_json(const Json& doc, double tol) {
  const std::size_t n = read_size(field(doc, "dim", ""), "/dim");
  const Json& vs = field(doc, "vectors", "");
  if (!vs.is_array()) fail("/vectors", "expected an array");
  std::vector<CVec> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    out.push_back(read_vector(vs[i], n, child("/vectors", i)));
  return OrthogonalSet(n, std::move(out), tol);
}

Json to_json(const OrthogonalSet& x) {
  return Json{{"dim", x.dim()}, {"vectors", vectors_to_json(x.vectors())}};
}

WeightSpec weights_from_json(const Json& doc) {
  WeightSpec w;
  w.points = read_labels(field(doc, "points", ""), "/points");
  w.weights = read_weights(field(doc, "weights", ""), "/weights");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < w.points.size(); ++i) {
    if (!seen.insert(w.points[i]).second)
      fail(child("/points", i), "duplicate point '" + w.points[i] + "'");
    if (!w.weights.count(w.points[i]))
      fail("/weights", "no weight for point '" + w.points[i] + "'");
  }
  return w;
}

WPointedSet pointed_set_from_json(const Json& doc) {
  WPointedSet x;
  x.points = read_labels(field(doc, "points", ""), "/points");
  x.basepoint = read_string(field(doc, "basepoint", ""), "/basepoint");
  x.weights = read_weights(field(doc, "weights", ""), "/weights");
  x.weights.erase(x.basepoint);
  x.validate();
  return x;
}

Json to_json(const WPointedSet& x) {
  Json w = Json::object();
  for (const std::string& p : x.non_basepoints()) w[p] = x.weight(p);
  return Json{{"points", x.points},
              {"basepoint", x.basepoint},
              {"weights", std::move(w)}};
}

PointMap point_map_from_json(const Json& doc) {
  const Json& m = field(doc, "map", "");
  if (!m.is_object()) fail("/map", "expected an object");
  PointMap out;
  for (const auto& [k, v] : m.items())
    out[k] = read_string(v, child("/map", k));
  return out;
}

Json to_json(const WSetMorphism& f) {
  return Json{{"source", to_json(f.source)},
              {"target", to_json(f.target)},
              {"map", map_to_json(f.map)},
              {"M_f", f.m_f}};
}

LinearMap linear_map_from_json(const Json& doc) {
  const std::size_t rows = read_size(field(doc, "rows", ""), "/rows");
  const std::size_t cols = read_size(field(doc, "cols", ""), "/cols");
  const Json& e = read_array(field(doc, "entries", ""), rows, "/entries");
  LinearMap m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    m.row(static_cast<Eigen::Index>(i)) =
        read_vector(e[i], cols, child("/entries", i)).transpose();
  return m;
}

Json linear_map_to_json(const LinearMap& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    rows.push_back(vector_to_json(m.row(i).transpose()));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const Check& c) {
  return Json{{"flag", c.ok},
              {"residual", c.residual},
              {"threshold", c.threshold},
              {"marginal", c.marginal()}};
}

Json to_json(const AxiomReport& r, const RunInfo& info) {
  Json doc = run_info(info);
  doc["op_norm"] = r.op_norm;
  doc["associative"] = to_json(r.associative);
  doc["commutative"] = to_json(r.commutative);
  doc["frobenius_top"] = to_json(r.frobenius_top);
  doc["frobenius_bottom"] = to_json(r.frobenius_bottom);
  doc["special"] = to_json(r.special);
  doc["comult_partial_isometry"] = to_json(r.comult_partial_isometry);
  doc["bisemigroup"] = to_json(r.bisemigroup);
  doc["frobenius"] = r.frobenius();
  return doc;
}

Json to_json(const StructureReport& r, const RunInfo& info) {
  Json ideals = Json::array();
  for (const MinimalIdeal& m : r.minimal_ideals)
    ideals.push_back(Json{{"g", vector_to_json(m.g)},
                          {"e", vector_to_json(m.e)},
                          {"weight", m.weight}});
  Json doc = run_info(info);
  doc["group_likes"] = vectors_to_json(r.group_likes);
  doc["radical_basis"] = vectors_to_json(r.radical_basis);
  doc["jperp_basis"] = vectors_to_json(r.jperp_basis);
  doc["minimal_ideals"] = std::move(ideals);
  doc["semisimple"] = r.semisimple;
  doc["radical_flag"] = r.radical_flag;
  doc["annihilator_equals_radical"] = to_json(r.annihilator_equals_radical);
  doc["unit"] = r.unit ? vector_to_json(*r.unit) : Json();
  doc["unit_check"] = r.unit_check ? to_json(*r.unit_check) : Json();
  return doc;
}

Json to_json(const MorphismClass& c, const RunInfo& info) {
  Json doc = run_info(info);
  doc["is_semigroup"] = to_json(c.semigroup);
  doc["is_cosemigroup"] = to_json(c.cosemigroup);
  doc["is_ambidextrous"] = c.ambidextrous;
  doc["is_proper"] = c.proper;
  doc["is_partial_injection_on_ideals"] = c.partial_injection;
  doc["induced"] = c.induced ? map_to_json(*c.induced) : Json();
  return doc;
}

Json to_json(const RoundTripReport& r, const RunInfo& info) {
  Json doc = run_info(info);
  doc["epsilon"] = Json{{"bijective", r.epsilon_bijective},
                        {"weight_residual", r.epsilon_weight_residual}};
  doc["phi"] = Json{{"tensor_residual", r.phi_tensor_residual},
                    {"jperp_closure_residual", r.jperp_closure_residual}};
  doc["pass"] = r.pass();
  return doc;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace frob
