#pragma once

#include "wvo/conjugate.hpp"
#include "wvo/examples.hpp"
#include "wvo/farkas.hpp"
#include "wvo/multiplier.hpp"
#include "wvo/optimality.hpp"
#include "wvo/order.hpp"
#include "wvo/problem.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wvo::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input; `path` names the offending field, e.g. "maps.F.matrix[1][0]".
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ParseOptions {
  /// Accept floating-point numbers and decimal strings, converted digit by digit.
  bool approx = false;
};

/// Exact rationals are "p/q" strings or integers; integers are written bare.
Json to_json(const Rational& r);
Json to_json(const Vec& v);
Json to_json(const Matrix& a);
Json to_json(const Cone& c);
Json to_json(const Polyhedron& p);
Json to_json(const VectorAffineMap& f);

Rational rational_from_json(const Json& j, const std::string& path, const ParseOptions& opt = {});
Vec vec_from_json(const Json& j, const std::string& path, const ParseOptions& opt = {});
Matrix matrix_from_json(const Json& j, const std::string& path, std::size_t cols, const ParseOptions& opt = {});
Cone cone_from_json(const Json& j, const std::string& path, const ParseOptions& opt = {});
Polyhedron polyhedron_from_json(const Json& j, const std::string& path, std::size_t dim, const ParseOptions& opt = {});

struct ProblemFile {
  Problem problem;
  Json metadata = Json::object();
};

Json to_json(const Problem& p, const Json& metadata = Json::object());
std::string serialize_problem(const Problem& p, const Json& metadata = Json::object());
/// Parses a problem document. Schema violations raise ParseError; problems that
/// parse but violate the standing assumptions (such as an empty C) raise ProblemError.
ProblemFile parse_problem_file(const std::string& text, const ParseOptions& opt = {});
Problem parse_problem(const std::string& text, const ParseOptions& opt = {});

/// Parses JSON text, reporting syntax errors with line and column.
Json parse_json_text(const std::string& text);

/// "1/2, -3" or "[1/2,-3]" on the command line.
Vec parse_vector_text(const std::string& text, const ParseOptions& opt = {});

struct CertificateFile {
  Certificate certificate;
  /// The (L, y) the certificate was issued for.
  std::optional<FarkasQuery> query;
};

Json to_json(const Certificate& c, const std::optional<FarkasQuery>& query = std::nullopt);
CertificateFile parse_certificate(const std::string& text, const Problem& prob, const ParseOptions& opt = {});

/// A list of {"L": m×n matrix, "y": m-vector}, bare or under "queries".
std::vector<FarkasQuery> parse_queries(const std::string& text, const Problem& prob, const ParseOptions& opt = {});
Json to_json(const FarkasQuery& q);

/// A bare array of vectors or {"dim": d, "points": [...]}.
PointSet parse_point_set(const std::string& text, const ParseOptions& opt = {});
Json to_json(const PointSet& m);

Json to_json(const OrderingReport& r);
Json to_json(const DomClassification& r);
Json to_json(const EpiVerdict& v);
Json to_json(const RepresentationReport& r);
Json to_json(const QualificationReport& r);
Json to_json(const CertificateCheck& r);
Json to_json(const AuditReport& r);
Json to_json(const DualityReport& r);
Json to_json(const examples::SuiteReport& r);

}  // namespace wvo::io
