#include "wvo/io.hpp"

#include <limits>
#include <sstream>

namespace wvo::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

std::size_t positive_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

Json to_json(const Rational& r) {
  if (denominator(r) == 1) {
    const Integer num = numerator(r);
    if (num >= std::numeric_limits<long long>::min() && num <= std::numeric_limits<long long>::max())
      return Json(num.convert_to<long long>());
  }
  return Json(to_string(r));
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(to_json(a.row(i)));
  return out;
}

Json to_json(const Cone& c) {
  Json out = {{"dim", c.dim()}, {"facets", Json::array()}};
  for (const auto& f : c.facets()) out["facets"].push_back(to_json(f));
  if (c.has_generators()) {
    out["generators"] = Json::array();
    for (const auto& g : c.generators()) out["generators"].push_back(to_json(g));
  }
  return out;
}

Json to_json(const Polyhedron& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows()) rows.push_back({{"a", to_json(r.normal)}, {"b", to_json(r.rhs)}});
  return {{"rows", rows}};
}

Json to_json(const VectorAffineMap& f) {
  Json out = {{"matrix", to_json(f.matrix)}, {"offset", to_json(f.offset)}};
  if (!f.domain.is_whole_space()) out["domain"] = to_json(f.domain);
  return out;
}

Rational rational_from_json(const Json& j, const std::string& path, const ParseOptions& opt) {
  try {
    if (j.is_number_integer()) return Rational(j.dump());
    if (j.is_number_float()) {
      if (!opt.approx) throw ParseError(path, "floating-point value " + j.dump() + " needs --approx");
      return parse_rational(j.dump());
    }
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      if (opt.approx) return parse_rational(s);
      if (s.find_first_of(".eE") != std::string::npos)
        throw ParseError(path, "decimal value \"" + s + "\" needs --approx");
      return parse_exact_rational(s);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
  throw ParseError(path, "expected a rational (integer or \"p/q\" string)");
}

Vec vec_from_json(const Json& j, const std::string& path, const ParseOptions& opt) {
  Vec out;
  const auto& arr = array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from_json(arr[i], at(path, i), opt));
  return out;
}

Matrix matrix_from_json(const Json& j, const std::string& path, std::size_t cols, const ParseOptions& opt) {
  const auto& arr = array(j, path);
  Matrix out(0, cols);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Vec row = vec_from_json(arr[i], at(path, i), opt);
    if (row.size() != cols)
      throw ParseError(at(path, i), "expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    out.append_row(row);
  }
  return out;
}

Cone cone_from_json(const Json& j, const std::string& path, const ParseOptions& opt) {
  const std::size_t dim = positive_size(field(j, path, "dim"), at(path, "dim"));
  if (dim == 0) throw ParseError(at(path, "dim"), "cone dimension must be positive");
  auto read_list = [&](const char* key) {
    std::vector<Vec> out;
    const std::string p = at(path, key);
    const auto& arr = array(j.at(key), p);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Vec v = vec_from_json(arr[i], at(p, i), opt);
      if (v.size() != dim) throw ParseError(at(p, i), "expected " + std::to_string(dim) + " entries");
      out.push_back(std::move(v));
    }
    return out;
  };
  if (j.contains("facets")) return Cone(dim, read_list("facets"));
  if (j.contains("generators")) return Cone::from_generators(dim, read_list("generators"));
  throw ParseError(path, "cone needs \"facets\" or \"generators\"");
}

Polyhedron polyhedron_from_json(const Json& j, const std::string& path, std::size_t dim, const ParseOptions& opt) {
  Polyhedron out(dim);
  const std::string rp = at(path, "rows");
  const auto& rows = array(field(j, path, "rows"), rp);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string p = at(rp, i);
    Vec a = vec_from_json(field(rows[i], p, "a"), at(p, "a"), opt);
    if (a.size() != dim) throw ParseError(at(p, "a"), "expected " + std::to_string(dim) + " entries");
    out.add_row(std::move(a), rational_from_json(field(rows[i], p, "b"), at(p, "b"), opt));
  }
  return out;
}

namespace {

VectorAffineMap map_from_json(const Json& j, const std::string& path, std::size_t out_dim, std::size_t in_dim,
                              const ParseOptions& opt) {
  Matrix m = matrix_from_json(field(j, path, "matrix"), at(path, "matrix"), in_dim, opt);
  if (m.rows() != out_dim) throw ParseError(at(path, "matrix"), "expected " + std::to_string(out_dim) + " rows");
  Vec b = vec_from_json(field(j, path, "offset"), at(path, "offset"), opt);
  if (b.size() != out_dim) throw ParseError(at(path, "offset"), "expected " + std::to_string(out_dim) + " entries");
  Polyhedron dom(in_dim);
  if (j.contains("domain")) dom = polyhedron_from_json(j.at("domain"), at(path, "domain"), in_dim, opt);
  return VectorAffineMap(std::move(m), std::move(b), std::move(dom));
}

}  // namespace

Json to_json(const Problem& p, const Json& metadata) {
  Json out = {{"schema_version", kSchemaVersion},
              {"dims", {{"n", p.n()}, {"m", p.m()}, {"p", p.p()}}},
              {"cones", {{"K", to_json(p.K())}, {"S", to_json(p.S())}}},
              {"maps", {{"F", to_json(p.F())}, {"G", to_json(p.G())}}},
              {"C", to_json(p.C())}};
  if (!metadata.empty()) out["metadata"] = metadata;
  return out;
}

std::string serialize_problem(const Problem& p, const Json& metadata) { return to_json(p, metadata).dump(2); }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("", "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

ProblemFile parse_problem_file(const std::string& text, const ParseOptions& opt) {
  const Json j = parse_json_text(text);
  const auto& ver = field(j, "", "schema_version");
  if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
    throw ParseError("schema_version", "unsupported schema version " + ver.dump());
  const auto& dims = field(j, "", "dims");
  const std::size_t n = positive_size(field(dims, "dims", "n"), "dims.n");
  const std::size_t m = positive_size(field(dims, "dims", "m"), "dims.m");
  const std::size_t p = positive_size(field(dims, "dims", "p"), "dims.p");
  if (n == 0 || m == 0 || p == 0) throw ParseError("dims", "dimensions must be positive");
  const auto& cones = field(j, "", "cones");
  Cone k = cone_from_json(field(cones, "cones", "K"), "cones.K", opt);
  Cone s = cone_from_json(field(cones, "cones", "S"), "cones.S", opt);
  if (k.dim() != m) throw ParseError("cones.K.dim", "must equal dims.m");
  if (s.dim() != p) throw ParseError("cones.S.dim", "must equal dims.p");
  const auto& maps = field(j, "", "maps");
  VectorAffineMap f = map_from_json(field(maps, "maps", "F"), "maps.F", m, n, opt);
  VectorAffineMap g = map_from_json(field(maps, "maps", "G"), "maps.G", p, n, opt);
  Polyhedron c = j.contains("C") ? polyhedron_from_json(j.at("C"), "C", n, opt) : Polyhedron(n);
  ProblemFile out;
  out.problem = Problem(std::move(k), std::move(s), std::move(f), std::move(g), std::move(c));
  if (j.contains("metadata")) out.metadata = j.at("metadata");
  return out;
}

Problem parse_problem(const std::string& text, const ParseOptions& opt) {
  return parse_problem_file(text, opt).problem;
}

Vec parse_vector_text(const std::string& text, const ParseOptions& opt) {
  std::string body = text;
  const auto first = body.find_first_not_of(" \t");
  const auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("", "empty vector");
  body = body.substr(first, last - first + 1);
  if (body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  Vec out;
  std::stringstream ss(body);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t\"");
    const auto e = item.find_last_not_of(" \t\"");
    if (b == std::string::npos) throw ParseError("[" + std::to_string(i) + "]", "empty entry");
    out.push_back(rational_from_json(Json(item.substr(b, e - b + 1)), "[" + std::to_string(i) + "]", opt));
    ++i;
  }
  return out;
}

Json to_json(const Certificate& c, const std::optional<FarkasQuery>& query) {
  Json out = {{"T", to_json(c.T)}, {"y_star", to_json(c.y_star)}, {"z_star", to_json(c.z_star)}, {"k0", to_json(c.k0)}};
  if (query) out["query"] = to_json(*query);
  return out;
}

namespace {

FarkasQuery query_from_json(const Json& j, const std::string& path, const Problem& prob, const ParseOptions& opt) {
  FarkasQuery q;
  q.L = matrix_from_json(field(j, path, "L"), at(path, "L"), prob.n(), opt);
  if (q.L.rows() != prob.m()) throw ParseError(at(path, "L"), "expected " + std::to_string(prob.m()) + " rows");
  q.y = vec_from_json(field(j, path, "y"), at(path, "y"), opt);
  if (q.y.size() != prob.m()) throw ParseError(at(path, "y"), "expected " + std::to_string(prob.m()) + " entries");
  return q;
}

}  // namespace

CertificateFile parse_certificate(const std::string& text, const Problem& prob, const ParseOptions& opt) {
  const Json j = parse_json_text(text);
  CertificateFile out;
  auto& c = out.certificate;
  c.T = matrix_from_json(field(j, "", "T"), "T", prob.p(), opt);
  if (c.T.rows() != prob.m()) throw ParseError("T", "expected " + std::to_string(prob.m()) + " rows");
  auto sized = [&](const char* key, std::size_t n) {
    Vec v = vec_from_json(field(j, "", key), key, opt);
    if (v.size() != n) throw ParseError(key, "expected " + std::to_string(n) + " entries");
    return v;
  };
  c.y_star = sized("y_star", prob.m());
  c.z_star = sized("z_star", prob.p());
  c.k0 = sized("k0", prob.m());
  if (j.contains("query")) out.query = query_from_json(j.at("query"), "query", prob, opt);
  return out;
}

std::vector<FarkasQuery> parse_queries(const std::string& text, const Problem& prob, const ParseOptions& opt) {
  const Json j = parse_json_text(text);
  const bool wrapped = j.is_object();
  const Json& list = wrapped ? field(j, "", "queries") : j;
  const std::string base = wrapped ? "queries" : "";
  std::vector<FarkasQuery> out;
  const auto& arr = array(list, base);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(query_from_json(arr[i], at(base, i), prob, opt));
  return out;
}

Json to_json(const FarkasQuery& q) { return {{"L", to_json(q.L)}, {"y", to_json(q.y)}}; }

PointSet parse_point_set(const std::string& text, const ParseOptions& opt) {
  const Json j = parse_json_text(text);
  const bool wrapped = j.is_object();
  const Json& list = wrapped ? field(j, "", "points") : j;
  const std::string base = wrapped ? "points" : "";
  const auto& arr = array(list, base);
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < arr.size(); ++i) pts.push_back(vec_from_json(arr[i], at(base, i), opt));
  std::size_t dim = 0;
  if (wrapped && j.contains("dim")) {
    dim = positive_size(j.at("dim"), "dim");
  } else if (!pts.empty()) {
    dim = pts.front().size();
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].size() != dim) throw ParseError(at(base, i), "expected " + std::to_string(dim) + " entries");
  return PointSet(dim, std::move(pts));
}

Json to_json(const PointSet& m) {
  Json out = Json::array();
  for (const auto& p : m.points) out.push_back(to_json(p));
  return out;
}

Json to_json(const OrderingReport& r) { return {{"pointed", r.pointed}, {"solid", r.solid}}; }

Json to_json(const DomClassification& r) {
  Json out = {{"in_dom", r.in_dom}, {"in_dom_M", r.in_dom_m}};
  if (r.smax_is_zero) out["smax_is_zero"] = *r.smax_is_zero;
  return out;
}

Json to_json(const EpiVerdict& v) {
  Json out = {{"member", v.member}};
  if (v.empty_domain) out["warning"] = "empty effective domain; membership holds vacuously";
  if (v.witness_x) out["witness_x"] = to_json(*v.witness_x);
  if (v.witness_s) out["witness_s"] = to_json(*v.witness_s);
  return out;
}

Json to_json(const RepresentationReport& r) {
  Json out = {{"lhs", r.lhs}, {"via_positive", r.via_positive}, {"via_weak", r.via_weak}, {"consistent", r.consistent()}};
  if (r.positive_witness) out["positive_witness"] = to_json(*r.positive_witness);
  if (r.weak_witness) out["weak_witness"] = to_json(*r.weak_witness);
  return out;
}

Json to_json(const QualificationReport& r) {
  Json out = {{"c1", r.c1 ? to_json(*r.c1) : Json(nullptr)},
              {"c3", {{"lin_dim", r.c3.lin_dim}, {"aff_dim", r.c3.aff_dim}, {"zero_in_ri", r.c3.zero_in_ri}}},
              {"verdict", r.verdict}};
  return out;
}

Json to_json(const CertificateCheck& r) {
  return {{"t_positive", r.t_positive},
          {"y_star_dual", r.y_star_dual},
          {"k0_interior", r.k0_interior},
          {"y_star_k0_positive", r.y_star_k0_positive},
          {"z_star_dual", r.z_star_dual},
          {"lift_identity", r.lift_identity},
          {"epi_member", r.epi_member},
          {"ok", r.ok()}};
}

Json to_json(const AuditReport& r) {
  Json out = {{"qualified", r.qualified},
              {"b1", r.b1},
              {"t_positive", r.t_positive ? to_json(*r.t_positive) : Json(nullptr)},
              {"t_weak", r.t_weak ? to_json(*r.t_weak) : Json(nullptr)},
              {"candidates_checked", r.candidates_checked},
              {"violations", r.violations},
              {"ok", r.ok()}};
  if (!r.qualified) out["mode"] = "one-directional";
  return out;
}

Json to_json(const DualityReport& r) {
  Json out = {{"applicable", r.applicable}};
  if (!r.applicable) {
    out["status"] = "not applicable: no qualification condition holds";
    return out;
  }
  out["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  out["certified_point_feasible"] = r.certified_point_feasible;
  out["samples_requested"] = r.samples_requested;
  out["samples_checked"] = r.samples_checked;
  out["samples_skipped"] = r.samples_skipped;
  out["violations"] = r.violations;
  out["ok"] = r.ok();
  return out;
}

Json to_json(const examples::SuiteReport& r) {
  Json dis = Json::array();
  for (const auto& d : r.disagreements)
    dis.push_back({{"family", d.family},
                   {"tuple", to_json(Vec{d.alpha, d.beta, d.y1, d.y2})},
                   {"computed", d.computed},
                   {"reference", d.reference}});
  return {{"suite", r.which},
          {"tuples", r.tuples},
          {"members", r.members},
          {"comparisons", r.comparisons},
          {"disagreements", dis},
          {"ok", r.ok()}};
}

}  // namespace wvo::io
