// Command-line front end: reads problem/certificate/query JSON files and prints JSON reports.
// Exit status: 0 when every check passes, 1 on a failed check or theorem violation,
// 2 on malformed input or a violated precondition.

#include "wvo/batch.hpp"
#include "wvo/conjugate.hpp"
#include "wvo/examples.hpp"
#include "wvo/farkas.hpp"
#include "wvo/io.hpp"
#include "wvo/multiplier.hpp"
#include "wvo/optimality.hpp"
#include "wvo/order.hpp"
#include "wvo/plot.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using wvo::io::Json;
using wvo::operator-;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wvo::Error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw wvo::Error("cannot write " + out_path);
  out << text << '\n';
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("WVO_SEED")) return std::strtoull(env, nullptr, 10);
  return 20240101;
}

wvo::Matrix matrix_arg(const std::string& text, std::size_t rows, std::size_t cols, const wvo::io::ParseOptions& opt,
                       const char* name) {
  auto m = wvo::io::matrix_from_json(wvo::io::parse_json_text(text), name, cols, opt);
  if (m.rows() != rows) throw wvo::io::ParseError(name, "expected " + std::to_string(rows) + " rows");
  return m;
}

struct Common {
  bool approx = false;
  std::string out;
  bool timing = false;
  wvo::io::ParseOptions parse() const { return {approx}; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--approx", c.approx, "Accept floating-point input, converted to rationals digit by digit");
  app->add_option("-o,--out", c.out, "Write the report to this file instead of stdout");
  app->add_flag("--timing", c.timing, "Add elapsed wall-clock time to the report");
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int finish(Json report, bool ok, const Common& c, const Stopwatch& sw) {
  if (c.timing) report["elapsed_ms"] = sw.ms();
  report["status"] = ok ? "pass" : "fail";
  write_output(report.dump(2), c.out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weak vector optimization toolkit for polyhedral ordering cones"};
  app.require_subcommand(1);
  Stopwatch sw;
  std::function<int()> action;

  // validate
  Common validate_c;
  std::string validate_problem;
  auto* validate = app.add_subcommand("validate", "Parse a problem file and report cone and qualification checks");
  validate->add_option("problem", validate_problem, "Problem JSON")->required();
  add_common(validate, validate_c);
  validate->callback([&] {
    action = [&] {
      const auto file = wvo::io::parse_problem_file(read_file(validate_problem), validate_c.parse());
      const auto& p = file.problem;
      Json r = {{"valid", true},
                {"dims", {{"n", p.n()}, {"m", p.m()}, {"p", p.p()}}},
                {"K", wvo::io::to_json(p.K().validate_ordering())},
                {"S", wvo::io::to_json(p.S().validate_ordering())},
                {"qualification", wvo::io::to_json(wvo::qualify(p))}};
      return finish(r, true, validate_c, sw);
    };
  });

  // order
  Common order_c;
  std::string order_op, order_points, order_cone, order_query, order_problem, order_t;
  auto* order = app.add_subcommand("order", "Weak order calculus on finite sets and cone images");
  order->add_option("op", order_op, "wmax | wmin | smax | wsup | winf | dom")
      ->required()
      ->check(CLI::IsMember({"wmax", "wmin", "smax", "wsup", "winf", "dom"}));
  order->add_option("--points", order_points, "Point set JSON (wmax, wmin, smax, wsup, winf)");
  order->add_option("--cone", order_cone, "Ordering cone JSON; defaults to K of --problem");
  order->add_option("--problem", order_problem, "Problem JSON supplying K (and S for dom)");
  order->add_option("--query", order_query, "Query vector for wsup / winf, e.g. \"-1,0\"");
  order->add_option("--T", order_t, "Matrix for dom, as JSON rows, e.g. \"[[1],[-2]]\"");
  add_common(order, order_c);
  order->callback([&] {
    action = [&] {
      const auto opt = order_c.parse();
      std::optional<wvo::Problem> prob;
      if (!order_problem.empty()) prob = wvo::io::parse_problem(read_file(order_problem), opt);
      wvo::Cone k;
      if (!order_cone.empty())
        k = wvo::io::cone_from_json(wvo::io::parse_json_text(read_file(order_cone)), "cone", opt);
      else if (prob)
        k = prob->K();
      else
        throw wvo::io::ParseError("--cone", "an ordering cone is required");
      Json r = {{"op", order_op}};
      if (order_op == "dom") {
        if (!prob) throw wvo::io::ParseError("--problem", "dom needs a problem for S");
        if (order_t.empty()) throw wvo::io::ParseError("--T", "dom needs a matrix");
        const auto t = matrix_arg(order_t, prob->m(), prob->p(), opt, "--T");
        r["result"] = wvo::io::to_json(wvo::classify_dom(t, prob->S(), prob->K()));
        return finish(r, true, order_c, sw);
      }
      if (order_points.empty()) throw wvo::io::ParseError("--points", "a point set is required");
      const auto m = wvo::io::parse_point_set(read_file(order_points), opt);
      if (order_op == "wmax") r["result"] = wvo::io::to_json(wvo::wmax(m, k));
      if (order_op == "wmin") r["result"] = wvo::io::to_json(wvo::wmin(m, k));
      if (order_op == "smax") {
        const auto s = wvo::smax(m, k);
        r["result"] = s ? wvo::io::to_json(*s) : Json(nullptr);
      }
      if (order_op == "wsup" || order_op == "winf") {
        if (order_query.empty()) throw wvo::io::ParseError("--query", "a query vector is required");
        const auto y = wvo::io::parse_vector_text(order_query, opt);
        r["query"] = wvo::io::to_json(y);
        r["result"] = order_op == "wsup" ? wvo::wsup_finite_contains(m, k, y) : wvo::winf_finite_contains(m, k, y);
      }
      return finish(r, true, order_c, sw);
    };
  });

  // epi
  Common epi_c;
  std::string epi_problem, epi_queries, epi_target = "feasible", epi_t;
  std::size_t epi_threads = 0;
  auto* epi = app.add_subcommand("epi", "Conjugate-epigraph membership for a batch of (L, y) queries");
  epi->add_option("problem", epi_problem, "Problem JSON")->required();
  epi->add_option("--queries", epi_queries, "Query batch JSON")->required();
  epi->add_option("--target", epi_target, "feasible: F+I_A | penalized: F+I_C+T∘G | shifted: intersection form")
      ->check(CLI::IsMember({"feasible", "penalized", "shifted"}));
  epi->add_option("--T", epi_t, "Multiplier as JSON rows, for penalized and shifted");
  epi->add_option("--threads", epi_threads, "Worker threads (0 = hardware concurrency)");
  add_common(epi, epi_c);
  epi->callback([&] {
    action = [&] {
      const auto opt = epi_c.parse();
      const auto prob = wvo::io::parse_problem(read_file(epi_problem), opt);
      const auto qs = wvo::io::parse_queries(read_file(epi_queries), prob, opt);
      std::optional<wvo::Matrix> t;
      if (epi_target != "feasible") {
        if (epi_t.empty()) throw wvo::io::ParseError("--T", "the " + epi_target + " target needs a multiplier");
        t = matrix_arg(epi_t, prob.m(), prob.p(), opt, "--T");
      }
      const auto verdicts = wvo::run_batch(
          qs.size(),
          [&](std::size_t i) {
            if (epi_target == "shifted") return wvo::epi_member_shifted(qs[i].L, qs[i].y, *t, prob);
            const auto target = t ? wvo::ConjugateTarget::penalized(*t) : wvo::ConjugateTarget::feasible_indicator();
            return wvo::epi_member(qs[i].L, qs[i].y, target, prob);
          },
          epi_threads);
      Json results = Json::array();
      for (std::size_t i = 0; i < qs.size(); ++i) {
        Json e = wvo::io::to_json(verdicts[i]);
        e["query"] = wvo::io::to_json(qs[i]);
        results.push_back(e);
      }
      return finish({{"target", epi_target}, {"results", results}}, true, epi_c, sw);
    };
  });

  // farkas
  Common farkas_c;
  std::string farkas_problem, farkas_queries, farkas_format = "json";
  bool farkas_grid = false;
  int farkas_den = 4;
  std::string farkas_box = "2";
  std::size_t farkas_threads = 0;
  auto* farkas = app.add_subcommand("farkas", "Audit the Farkas-type equivalences (b1), (b2), (b3)");
  farkas->add_option("problem", farkas_problem, "Problem JSON")->required();
  farkas->add_option("--queries", farkas_queries, "Query batch JSON");
  farkas->add_flag("--grid", farkas_grid, "Audit every (L, y) on a rational grid instead of a query file");
  farkas->add_option("--max-den", farkas_den, "Grid denominator bound")->capture_default_str();
  farkas->add_option("--box", farkas_box, "Grid box half-width")->capture_default_str();
  farkas->add_option("--format", farkas_format, "json | table")->check(CLI::IsMember({"json", "table"}));
  farkas->add_option("--threads", farkas_threads, "Worker threads (0 = hardware concurrency)");
  add_common(farkas, farkas_c);
  farkas->callback([&] {
    action = [&] {
      const auto opt = farkas_c.parse();
      const auto prob = wvo::io::parse_problem(read_file(farkas_problem), opt);
      if (farkas_grid) {
        const wvo::Rational box = wvo::parse_rational(farkas_box);
        const auto s = wvo::grid_audit(prob, {farkas_den, -box, box});
        Json r = {{"queries", s.queries}, {"b1_true", s.b1_true}, {"violations", s.violations},
                  {"messages", s.messages}};
        if (farkas_format == "table") {
          std::ostringstream t;
          t << "queries  b1_true  violations\n"
            << std::setw(7) << s.queries << "  " << std::setw(7) << s.b1_true << "  " << std::setw(10) << s.violations
            << '\n';
          write_output(t.str(), farkas_c.out);
          return s.violations == 0 ? 0 : 1;
        }
        return finish(r, s.violations == 0, farkas_c, sw);
      }
      if (farkas_queries.empty()) throw wvo::io::ParseError("--queries", "give a query file or --grid");
      const auto qs = wvo::io::parse_queries(read_file(farkas_queries), prob, opt);
      const auto candidates = wvo::default_candidates(prob);
      const auto reports = wvo::run_batch(
          qs.size(), [&](std::size_t i) { return wvo::equivalence_audit(qs[i], prob, candidates); }, farkas_threads);
      bool ok = true;
      for (const auto& r : reports) ok = ok && r.ok();
      if (farkas_format == "table") {
        std::ostringstream t;
        t << "#    qualified  b1     L+     L+w    violations\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
          const auto& r = reports[i];
          auto yn = [](bool b) { return b ? "yes" : "no"; };
          t << std::left << std::setw(5) << i << std::setw(11) << yn(r.qualified) << std::setw(7) << yn(r.b1)
            << std::setw(7) << (r.qualified ? yn(r.t_positive.has_value()) : "-") << std::setw(7)
            << (r.qualified ? yn(r.t_weak.has_value()) : "-") << r.violations.size() << '\n';
        }
        write_output(t.str(), farkas_c.out);
        return ok ? 0 : 1;
      }
      Json results = Json::array();
      for (std::size_t i = 0; i < qs.size(); ++i) {
        Json e = wvo::io::to_json(reports[i]);
        e["query"] = wvo::io::to_json(qs[i]);
        results.push_back(e);
      }
      return finish({{"results", results}}, ok, farkas_c, sw);
    };
  });

  // certify
  Common certify_c;
  std::string certify_problem, certify_point, certify_l, certify_y;
  auto* certify = app.add_subcommand("certify", "Build a multiplier certificate for a weak solution or an (L, y) query");
  certify->add_option("problem", certify_problem, "Problem JSON")->required();
  certify->add_option("--point", certify_point, "Candidate weak solution x̄, e.g. \"0\"");
  certify->add_option("--L", certify_l, "L as JSON rows (with --y instead of --point)");
  certify->add_option("--y", certify_y, "y vector (with --L)");
  add_common(certify, certify_c);
  certify->callback([&] {
    action = [&] {
      const auto opt = certify_c.parse();
      const auto prob = wvo::io::parse_problem(read_file(certify_problem), opt);
      wvo::FarkasQuery q;
      wvo::Certificate cert;
      if (!certify_point.empty()) {
        const auto x = wvo::io::parse_vector_text(certify_point, opt);
        cert = wvo::certify_weak_min(x, prob);
        q = {wvo::Matrix(prob.m(), prob.n()), -prob.F()(x)};
      } else {
        if (certify_l.empty() || certify_y.empty())
          throw wvo::io::ParseError("--point", "give --point or both --L and --y");
        q = {matrix_arg(certify_l, prob.m(), prob.n(), opt, "--L"), wvo::io::parse_vector_text(certify_y, opt)};
        cert = wvo::build_certificate(q.L, q.y, prob);
      }
      const auto check = wvo::verify_certificate(cert, q.L, q.y, prob);
      if (!certify_c.out.empty()) {
        write_output(wvo::io::to_json(cert, q).dump(2), certify_c.out);
        certify_c.out.clear();
      }
      return finish({{"certificate", wvo::io::to_json(cert, q)}, {"check", wvo::io::to_json(check)}}, check.ok(),
                    certify_c, sw);
    };
  });

  // verify
  Common verify_c;
  std::string verify_problem, verify_cert, verify_l, verify_y;
  auto* verify = app.add_subcommand("verify", "Re-check a serialized certificate against a problem");
  verify->add_option("problem", verify_problem, "Problem JSON")->required();
  verify->add_option("certificate", verify_cert, "Certificate JSON")->required();
  verify->add_option("--L", verify_l, "Override the certificate's L");
  verify->add_option("--y", verify_y, "Override the certificate's y");
  add_common(verify, verify_c);
  verify->callback([&] {
    action = [&] {
      const auto opt = verify_c.parse();
      const auto prob = wvo::io::parse_problem(read_file(verify_problem), opt);
      const auto file = wvo::io::parse_certificate(read_file(verify_cert), prob, opt);
      wvo::FarkasQuery q{wvo::Matrix(prob.m(), prob.n()), wvo::zeros(prob.m())};
      if (file.query) q = *file.query;
      if (!verify_l.empty()) q.L = matrix_arg(verify_l, prob.m(), prob.n(), opt, "--L");
      if (!verify_y.empty()) q.y = wvo::io::parse_vector_text(verify_y, opt);
      if (!file.query && (verify_l.empty() || verify_y.empty()))
        throw wvo::io::ParseError("query", "certificate has no query; pass --L and --y");
      const auto check = wvo::verify_certificate(file.certificate, q.L, q.y, prob);
      return finish({{"query", wvo::io::to_json(q)}, {"check", wvo::io::to_json(check)}}, check.ok(), verify_c, sw);
    };
  });

  // duality
  Common duality_c;
  std::string duality_problem, duality_point;
  std::size_t duality_samples = 50;
  std::uint64_t duality_seed = default_seed();
  auto* duality = app.add_subcommand("duality", "Sampled strong-duality check at a weak solution");
  duality->add_option("problem", duality_problem, "Problem JSON")->required();
  duality->add_option("--point", duality_point, "Weak solution x̄")->required();
  duality->add_option("--samples", duality_samples, "Dual-feasible samples")->capture_default_str();
  duality->add_option("--seed", duality_seed, "Sampling seed (default: $WVO_SEED)")->capture_default_str();
  add_common(duality, duality_c);
  duality->callback([&] {
    action = [&] {
      const auto opt = duality_c.parse();
      const auto prob = wvo::io::parse_problem(read_file(duality_problem), opt);
      const auto x = wvo::io::parse_vector_text(duality_point, opt);
      std::mt19937_64 rng(duality_seed);
      const auto r = wvo::strong_duality_check(x, prob, duality_samples, rng);
      Json j = wvo::io::to_json(r);
      j["seed"] = duality_seed;
      return finish(j, r.ok(), duality_c, sw);
    };
  });

  // examples
  Common examples_c;
  std::string examples_suite = "all", examples_problem_out;
  auto* ex = app.add_subcommand("examples", "Run the golden example suites against the closed-form classifiers");
  ex->add_option("--suite", examples_suite, "1 | 2 | all")->check(CLI::IsMember({"1", "2", "all"}));
  ex->add_option("--write-problem", examples_problem_out, "Also write the example problem JSON to this file");
  add_common(ex, examples_c);
  ex->callback([&] {
    action = [&] {
      if (!examples_problem_out.empty())
        write_output(wvo::io::serialize_problem(wvo::examples::example_problem(), {{"name", "golden example"}}),
                     examples_problem_out);
      Json suites = Json::array();
      bool ok = true;
      for (int w : {1, 2}) {
        if (examples_suite != "all" && examples_suite != std::to_string(w)) continue;
        const auto r = wvo::examples::run_example_suite(w);
        ok = ok && r.ok();
        suites.push_back(wvo::io::to_json(r));
      }
      return finish({{"suites", suites}}, ok, examples_c, sw);
    };
  });

  // plot
  Common plot_c;
  std::string plot_kind, plot_points, plot_cone, plot_extent = "4", plot_problem, plot_l, plot_target = "feasible";
  int plot_den = 2;
  std::string plot_box = "2";
  auto* plot = app.add_subcommand("plot", "Emit CSV plot data for 2-D results");
  plot->add_option("kind", plot_kind, "wsup | wmax | epi-grid")
      ->required()
      ->check(CLI::IsMember({"wsup", "wmax", "epi-grid"}));
  plot->add_option("--points", plot_points, "Point set JSON (wsup, wmax)");
  plot->add_option("--cone", plot_cone, "Ordering cone JSON (default: first orthant)");
  plot->add_option("--extent", plot_extent, "Length at which unbounded pieces are cut")->capture_default_str();
  plot->add_option("--problem", plot_problem, "Problem JSON (epi-grid)");
  plot->add_option("--L", plot_l, "L as JSON rows (epi-grid)");
  plot->add_option("--target", plot_target, "feasible | penalized0 (epi-grid)")
      ->check(CLI::IsMember({"feasible", "penalized0"}));
  plot->add_option("--max-den", plot_den, "Grid denominator bound (epi-grid)")->capture_default_str();
  plot->add_option("--box", plot_box, "Grid box half-width (epi-grid)")->capture_default_str();
  plot->add_option("-o,--out", plot_c.out, "Write CSV to this file instead of stdout");
  plot->add_flag("--approx", plot_c.approx, "Accept floating-point input");
  plot->callback([&] {
    action = [&] {
      const auto opt = plot_c.parse();
      if (plot_kind == "epi-grid") {
        if (plot_problem.empty() || plot_l.empty()) throw wvo::io::ParseError("--problem", "epi-grid needs --problem and --L");
        const auto prob = wvo::io::parse_problem(read_file(plot_problem), opt);
        const auto l = matrix_arg(plot_l, prob.m(), prob.n(), opt, "--L");
        const wvo::Rational box = wvo::parse_rational(plot_box);
        const auto grid = wvo::rational_grid(plot_den, -box, box);
        std::vector<wvo::Vec> pts;
        for (const auto& a : grid)
          for (const auto& b : grid) pts.push_back({a, b});
        const auto target = plot_target == "feasible" ? wvo::ConjugateTarget::feasible_indicator()
                                                      : wvo::ConjugateTarget::penalized(wvo::Matrix(prob.m(), prob.p()));
        write_output(wvo::plot::membership_grid_csv(
                         pts, [&](const wvo::Vec& y) { return wvo::epi_member(l, y, target, prob).member; }),
                     plot_c.out);
        return 0;
      }
      if (plot_points.empty()) throw wvo::io::ParseError("--points", "a point set is required");
      const auto m = wvo::io::parse_point_set(read_file(plot_points), opt);
      const wvo::Cone k = plot_cone.empty()
                              ? wvo::Cone::orthant(2)
                              : wvo::io::cone_from_json(wvo::io::parse_json_text(read_file(plot_cone)), "cone", opt);
      const std::string csv = plot_kind == "wsup"
                                  ? wvo::plot::wsup_polylines_csv(m, k, wvo::parse_rational(plot_extent))
                                  : wvo::plot::wmax_csv(m, k);
      write_output(csv, plot_c.out);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action();
  } catch (const wvo::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return 1;
  } catch (const wvo::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const wvo::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
