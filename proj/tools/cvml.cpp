// Command-line front end: classify distance matrices, analyze sequence
// convergence and Cauchy behavior, and compute ball/closure/diameter queries.
// Reports are JSON with a stable schema; exit codes separate analysis
// verdicts (always 0) from operational failures (>= 2).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cvml/axioms.hpp"
#include "cvml/json_io.hpp"
#include "cvml/sampling.hpp"
#include "cvml/sequences.hpp"
#include "cvml/topology.hpp"

namespace {

using namespace cvml;

constexpr int kSchemaVersion = 1;

struct Options {
  double eps = 1e-9;
  int horizon = 1024;
  bool horizon_set = false;
  int tail = 128;
  double threshold = 1e-6;
  std::string output = "-";

  std::string space;
  std::string catalog;
  std::string distance;
  std::string points;
  std::string sequence;
  std::string candidates;
  std::string subset;
  std::string classes;
  std::vector<std::string> balls;
  std::string region;
  std::string sampling;
  std::string center;
  std::string radius;

  Tolerance tol() const { return Tolerance{eps}; }
  ConvergenceParams params() const { return ConvergenceParams{tail, threshold}; }

  void validate() const {
    if (eps < 0) throw InvalidInput("eps must be nonnegative");
    if (horizon <= 0 || tail <= 0 || threshold <= 0) {
      throw InvalidInput("horizon, tail and threshold must be positive");
    }
    if (tail >= horizon) throw InvalidInput("tail must be smaller than the horizon");
  }
};

bool looks_inline(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

std::string read_text(const std::string& source) {
  if (looks_inline(source)) return source;
  if (source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(source);
  if (!in) throw InvalidInput("cannot open input file: " + source);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json(const std::string& source) {
  return nlohmann::json::parse(read_text(source));
}

FiniteSpace load_space(const std::string& source, Tolerance tol) {
  if (!looks_inline(source) && source.size() > 4 &&
      source.substr(source.size() - 4) == ".csv") {
    return space_from_csv(read_text(source), tol);
  }
  return space_from_json(parse_json(source), tol);
}

Json labels_json(const FiniteSpace& space, const std::vector<Index>& indices) {
  Json out = Json::array();
  for (const Index i : indices) {
    out.push_back(space.labels[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<Index> subset_from_labels(const FiniteSpace& space,
                                      const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("subset: expected an array of labels");
  std::vector<Index> subset;
  for (const auto& l : j) {
    if (!l.is_string()) throw InvalidInput("subset: labels must be strings");
    subset.push_back(space.index_of(l.get<std::string>()));
  }
  return subset;
}

Json report_header(const char* command, const Options& opt) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["eps"] = opt.eps;
  return j;
}

Json violation_json(const FiniteSpace& space, const Violation& v) {
  Json j;
  j["axiom"] = v.axiom;
  Json witness = Json::array();
  for (const Index i : v.witness) {
    witness.push_back(space.labels[static_cast<std::size_t>(i)]);
  }
  j["witness"] = std::move(witness);
  Json values = Json::array();
  for (const Complex z : v.values) values.push_back(complex_to_json(z));
  j["values"] = std::move(values);
  j["marginal"] = v.marginal;
  return j;
}

Json cmd_classify(const Options& opt) {
  FiniteSpace space;
  Json source;
  if (!opt.space.empty()) {
    space = load_space(opt.space, opt.tol());
    source["kind"] = "space";
  } else if (!opt.catalog.empty() && !opt.points.empty()) {
    const DistanceFn fn = distance_from_json(parse_json(opt.catalog), opt.tol());
    const auto points = points_from_json(parse_json(opt.points));
    space = sample_space(fn, points, opt.tol());
    source["kind"] = "catalog_sample";
    source["distance"] = distance_to_json(fn);
  } else {
    throw InvalidInput("classify needs --space, or --catalog with --points");
  }

  std::vector<AxiomClass> requested;
  if (opt.classes.empty()) {
    requested.assign(std::begin(kAllAxiomClasses), std::end(kAllAxiomClasses));
  } else {
    std::istringstream in(opt.classes);
    std::string name;
    while (std::getline(in, name, ',')) requested.push_back(class_from_name(name));
  }

  Json report = report_header("classify", opt);
  report["source"] = std::move(source);
  report["labels"] = space.labels;

  Json passing = Json::array();
  Json reports = Json::array();
  for (const AxiomClass cls : requested) {
    const AxiomReport r = check_axioms(space, cls, opt.tol());
    if (r.passed) passing.push_back(class_name(cls));
    Json entry;
    entry["class"] = class_name(cls);
    entry["passed"] = r.passed;
    entry["violation_count"] = r.violations.size();
    Json head = Json::array();
    for (std::size_t k = 0; k < r.violations.size() && k < 3; ++k) {
      head.push_back(violation_json(space, r.violations[k]));
    }
    entry["violations"] = std::move(head);
    reports.push_back(std::move(entry));
  }
  report["classes"] = std::move(passing);
  report["reports"] = std::move(reports);
  return report;
}

SequenceSpec load_sequence(const Options& opt) {
  SequenceSpec seq = sequence_from_json(parse_json(opt.sequence));
  if (opt.horizon_set && seq.rule != SequenceSpec::Rule::Explicit) {
    seq.n_max = opt.horizon;
  }
  return seq;
}

Json cmd_converge(const Options& opt) {
  const DistanceFn d = distance_from_json(parse_json(opt.distance), opt.tol());
  const SequenceSpec seq = load_sequence(opt);
  const auto candidates = points_from_json(parse_json(opt.candidates));

  Json report = report_header("converge", opt);
  report["horizon"] = seq.length();
  report["tail"] = opt.tail;
  report["threshold"] = opt.threshold;
  report["distance"] = distance_to_json(d);
  report["sequence"] = sequence_to_json(seq);

  std::vector<Complex> limits;
  Json entries = Json::array();
  for (const Complex c : candidates) {
    const ConvergenceVerdict v =
        check_convergence(d, seq, c, opt.tol(), opt.params());
    if (v.converges) limits.push_back(c);
    Json e;
    e["point"] = complex_to_json(c);
    e["converges"] = v.converges;
    if (v.decision_index.has_value()) {
      e["decision_index"] = *v.decision_index;
    } else {
      e["decision_index"] = nullptr;
    }
    e["residual_tail"] = v.residuals;
    entries.push_back(std::move(e));
  }
  report["candidates"] = std::move(entries);

  Json pairs = Json::array();
  for (std::size_t i = 0; i < limits.size(); ++i) {
    for (std::size_t j = i + 1; j < limits.size(); ++j) {
      pairs.push_back(Json::array(
          {complex_to_json(limits[i]), complex_to_json(limits[j])}));
    }
  }
  report["quasi_equal_pairs"] = std::move(pairs);
  return report;
}

Json cmd_cauchy(const Options& opt) {
  const DistanceFn d = distance_from_json(parse_json(opt.distance), opt.tol());
  const SequenceSpec seq = load_sequence(opt);

  const CauchyVerdict v = check_cauchy(d, seq, opt.tol(), opt.params());
  Json report = report_header("cauchy", opt);
  report["horizon"] = seq.length();
  report["tail"] = opt.tail;
  report["threshold"] = opt.threshold;
  report["distance"] = distance_to_json(d);
  report["sequence"] = sequence_to_json(seq);
  report["is_cauchy"] = v.is_cauchy;
  report["limit_estimate"] = v.limit_estimate.has_value()
                                 ? complex_to_json(*v.limit_estimate)
                                 : Json(nullptr);
  report["max_deviation"] = v.max_deviation;
  return report;
}

Json cmd_topology(const Options& opt) {
  const FiniteSpace space = load_space(opt.space, opt.tol());
  const auto subset = opt.subset.empty()
                          ? std::vector<Index>{}
                          : subset_from_labels(space, parse_json(opt.subset));

  Json report = report_header("topology", opt);
  report["labels"] = space.labels;
  report["subset"] = labels_json(space, subset);
  report["closure"] = labels_json(space, closure(space, subset, opt.tol()));
  report["limit_points"] =
      labels_json(space, limit_points(space, subset, opt.tol()));
  report["is_closed"] = is_closed(space, subset, opt.tol());

  if (!subset.empty()) {
    const DiameterResult diam = diam_c(space, subset, opt.tol());
    Json d;
    d["value"] = complex_to_json(diam.value);
    d["attained"] = diam.attained;
    if (diam.witness.has_value()) {
      const auto [a, b] = *diam.witness;
      d["witness"] = Json::array(
          {space.labels[static_cast<std::size_t>(
               subset[static_cast<std::size_t>(a)])],
           space.labels[static_cast<std::size_t>(
               subset[static_cast<std::size_t>(b)])]});
    } else {
      d["witness"] = nullptr;
    }
    report["diameter"] = std::move(d);
  } else {
    report["diameter"] = nullptr;
  }

  Json balls = Json::array();
  for (const std::string& query : opt.balls) {
    const nlohmann::json q = parse_json(query);
    const Index center = space.index_of(q.at("center").get<std::string>());
    const Complex radius = complex_from_json(q.at("radius"));
    Json members = Json::array();
    for (Index y = 0; y < space.size(); ++y) {
      if (ball_contains(space, center, radius, y, opt.tol())) {
        members.push_back(space.labels[static_cast<std::size_t>(y)]);
      }
    }
    Json b;
    b["center"] = space.labels[static_cast<std::size_t>(center)];
    b["radius"] = complex_to_json(radius);
    b["members"] = std::move(members);
    balls.push_back(std::move(b));
  }
  report["balls"] = std::move(balls);
  return report;
}

Json cmd_ball(const Options& opt) {
  Json report = report_header("ball", opt);
  const Complex radius = complex_from_json(parse_json(opt.radius));
  report["radius"] = complex_to_json(radius);

  if (!opt.space.empty()) {
    const FiniteSpace space = load_space(opt.space, opt.tol());
    const Index center = space.index_of(opt.center);  // verbatim label
    report["center"] = space.labels[static_cast<std::size_t>(center)];
    Json members = Json::array();
    for (Index y = 0; y < space.size(); ++y) {
      if (ball_contains(space, center, radius, y, opt.tol())) {
        members.push_back(space.labels[static_cast<std::size_t>(y)]);
      }
    }
    report["members"] = std::move(members);
    return report;
  }

  const DistanceFn d = distance_from_json(parse_json(opt.distance), opt.tol());
  const BallSpec ball{complex_from_json(parse_json(opt.center)), radius};
  report["center"] = complex_to_json(ball.center);
  report["distance"] = distance_to_json(d);
  Json entries = Json::array();
  for (const Complex p : points_from_json(parse_json(opt.points))) {
    Json e;
    e["point"] = complex_to_json(p);
    e["inside"] = ball_contains(d, ball, p, opt.tol());
    entries.push_back(std::move(e));
  }
  report["points"] = std::move(entries);
  return report;
}

Json cmd_diam(const Options& opt) {
  Json report = report_header("diam", opt);

  if (!opt.space.empty()) {
    const FiniteSpace space = load_space(opt.space, opt.tol());
    const auto subset = opt.subset.empty()
                            ? std::vector<Index>{}
                            : subset_from_labels(space, parse_json(opt.subset));
    std::vector<Index> points = subset;
    if (points.empty()) {
      for (Index i = 0; i < space.size(); ++i) points.push_back(i);
    }
    const DiameterResult r = diam_c(space, points, opt.tol());
    report["source"] = "space";
    report["point_count"] = points.size();
    report["value"] = complex_to_json(r.value);
    report["attained"] = r.attained;
    if (r.witness.has_value()) {
      const auto [a, b] = *r.witness;
      report["witness"] = Json::array(
          {space.labels[static_cast<std::size_t>(
               points[static_cast<std::size_t>(a)])],
           space.labels[static_cast<std::size_t>(
               points[static_cast<std::size_t>(b)])]});
    } else {
      report["witness"] = nullptr;
    }
    return report;
  }

  const DistanceFn d = distance_from_json(parse_json(opt.distance), opt.tol());
  std::vector<Complex> points;
  bool sampled = false;
  if (!opt.points.empty()) {
    points = points_from_json(parse_json(opt.points));
    report["source"] = "points";
  } else if (!opt.region.empty()) {
    const Region region = region_from_json(parse_json(opt.region));
    SamplingSpec sampling;
    if (!opt.sampling.empty()) {
      sampling = sampling_from_json(parse_json(opt.sampling));
    }
    points = sample_region(region, sampling);
    sampled = true;
    report["source"] = "region_sample";
  } else {
    throw InvalidInput("diam needs --space, --points, or --region");
  }

  const DiameterResult r = diam_c(points, d, opt.tol(), sampled);
  report["distance"] = distance_to_json(d);
  report["point_count"] = points.size();
  report["value"] = complex_to_json(r.value);
  report["attained"] = r.attained;
  if (r.witness.has_value()) {
    const auto [a, b] = *r.witness;
    report["witness"] = Json::array(
        {complex_to_json(points[static_cast<std::size_t>(a)]),
         complex_to_json(points[static_cast<std::size_t>(b)])});
  } else {
    report["witness"] = nullptr;
  }
  return report;
}

void emit(const Json& report, const std::string& output) {
  if (output == "-") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::ofstream out(output);
  if (!out) throw InvalidInput("cannot open output file: " + output);
  out << report.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complex valued metric-like space toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--eps", opt.eps, "comparison tolerance per component");
    cmd->add_option("--output", opt.output, "report path, '-' for stdout");
  };
  auto add_run = [&](CLI::App* cmd) {
    cmd->add_option("--horizon", opt.horizon, "sequence evaluation horizon")
        ->each([&](const std::string&) { opt.horizon_set = true; });
    cmd->add_option("--tail", opt.tail, "tail window length");
    cmd->add_option("--threshold", opt.threshold, "residual threshold");
  };

  CLI::App* classify = app.add_subcommand("classify", "validate axiom systems");
  classify->add_option("--space", opt.space, "space file (JSON or CSV) or inline JSON");
  classify->add_option("--catalog", opt.catalog, "catalog distance spec");
  classify->add_option("--points", opt.points, "sample points [[re,im],...]");
  classify->add_option("--classes", opt.classes, "comma-separated class filter");
  add_common(classify);

  CLI::App* converge = app.add_subcommand("converge", "per-candidate convergence");
  converge->add_option("--distance", opt.distance, "distance spec")->required();
  converge->add_option("--sequence", opt.sequence, "sequence spec")->required();
  converge->add_option("--candidates", opt.candidates, "candidate points")->required();
  add_run(converge);
  add_common(converge);

  CLI::App* cauchy = app.add_subcommand("cauchy", "tail-pair stability");
  cauchy->add_option("--distance", opt.distance, "distance spec")->required();
  cauchy->add_option("--sequence", opt.sequence, "sequence spec")->required();
  add_run(cauchy);
  add_common(cauchy);

  CLI::App* topology = app.add_subcommand("topology", "closure, limit points, balls");
  topology->add_option("--space", opt.space, "space file")->required();
  topology->add_option("--subset", opt.subset, "subset labels [\"a\",...]");
  topology->add_option("--ball", opt.balls, "ball query {\"center\":...,\"radius\":...}");
  add_common(topology);

  CLI::App* ball = app.add_subcommand("ball", "open-ball membership");
  ball->add_option("--space", opt.space, "space file (label mode)");
  ball->add_option("--distance", opt.distance, "distance spec (point mode)");
  ball->add_option("--center", opt.center, "center label or [re,im]")->required();
  ball->add_option("--radius", opt.radius, "radius [re,im]")->required();
  ball->add_option("--points", opt.points, "query points [[re,im],...]");
  add_common(ball);

  CLI::App* diam = app.add_subcommand("diam", "complex diameter");
  diam->add_option("--space", opt.space, "space file");
  diam->add_option("--subset", opt.subset, "subset labels");
  diam->add_option("--distance", opt.distance, "distance spec");
  diam->add_option("--points", opt.points, "point list [[re,im],...]");
  diam->add_option("--region", opt.region, "region spec");
  diam->add_option("--sampling", opt.sampling, "sampling spec");
  add_common(diam);

  CLI11_PARSE(app, argc, argv);

  try {
    opt.validate();
    Json report;
    if (app.got_subcommand(classify)) report = cmd_classify(opt);
    else if (app.got_subcommand(converge)) report = cmd_converge(opt);
    else if (app.got_subcommand(cauchy)) report = cmd_cauchy(opt);
    else if (app.got_subcommand(topology)) report = cmd_topology(opt);
    else if (app.got_subcommand(ball)) report = cmd_ball(opt);
    else if (app.got_subcommand(diam)) report = cmd_diam(opt);
    emit(report, opt.output);
    return 0;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: parse failure at byte " << e.byte << ": " << e.what()
              << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << '\n';
    return 2;
  } catch (const UnknownLabel& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const RangeViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
