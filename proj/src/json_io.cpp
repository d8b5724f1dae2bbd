#include "cvml/json_io.hpp"

#include <cctype>
#include <sstream>

#include "cvml/errors.hpp"

namespace cvml {

namespace {

double number_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw InvalidInput("");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput(std::string(what) + ": cannot parse number '" + text + "'");
  }
}

}  // namespace

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidInput("complex value: expected a two-element array [re, im]");
  }
  const Complex z{number_from_json(j[0], "complex value"),
                  number_from_json(j[1], "complex value")};
  require_finite(z, "complex value");
  return z;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::vector<Complex> points_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("points: expected an array");
  std::vector<Complex> points;
  points.reserve(j.size());
  for (const auto& e : j) points.push_back(complex_from_json(e));
  return points;
}

FiniteSpace space_from_json(const nlohmann::json& j, Tolerance tol) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("matrix")) {
    throw InvalidInput("space: expected {\"labels\": [...], \"matrix\": [...]}");
  }
  FiniteSpace space;
  for (const auto& l : j.at("labels")) {
    if (!l.is_string()) throw InvalidInput("space: labels must be strings");
    space.labels.push_back(l.get<std::string>());
  }
  const auto& rows = j.at("matrix");
  if (!rows.is_array()) throw InvalidInput("space: matrix must be an array of rows");
  const Index n = static_cast<Index>(rows.size());
  space.matrix.resize(n, static_cast<Index>(space.labels.size()));
  for (Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != space.matrix.cols()) {
      throw InvalidInput("space: matrix rows must all have length n");
    }
    for (Index k = 0; k < space.matrix.cols(); ++k) {
      space.matrix(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
    }
  }
  validate_space(space, tol);
  return space;
}

Json space_to_json(const FiniteSpace& space) {
  Json j;
  j["labels"] = space.labels;
  Json rows = Json::array();
  for (Index i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < space.size(); ++k) {
      row.push_back(complex_to_json(space.matrix(i, k)));
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

Complex parse_complex_literal(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw InvalidInput("complex literal: empty cell");
  if (text.back() != 'i') return {parse_double(text, "complex literal"), 0.0};

  std::string body = text.substr(0, text.size() - 1);
  if (body.empty() || body == "+") return {0.0, 1.0};
  if (body == "-") return {0.0, -1.0};

  // Split at the last top-level sign; exponents keep their sign glued.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    return {0.0, parse_double(body, "complex literal")};
  }
  const std::string re = body.substr(0, split);
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_double(re, "complex literal"),
          parse_double(im, "complex literal")};
}

FiniteSpace space_from_csv(const std::string& text, Tolerance tol) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(trim(cell));
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw InvalidInput("csv space: missing header row");
  const std::size_t n = rows[0].size();
  if (rows.size() != n + 1) {
    throw InvalidInput("csv space: expected one header row plus n matrix rows");
  }
  FiniteSpace space;
  space.labels = rows[0];
  space.matrix.resize(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i + 1].size() != n) {
      throw InvalidInput("csv space: row " + std::to_string(i + 1) +
                         " does not have n cells");
    }
    for (std::size_t k = 0; k < n; ++k) {
      space.matrix(static_cast<Index>(i), static_cast<Index>(k)) =
          parse_complex_literal(rows[i + 1][k]);
    }
  }
  validate_space(space, tol);
  return space;
}

std::string space_to_csv(const FiniteSpace& space) {
  std::ostringstream out;
  for (Index k = 0; k < space.size(); ++k) {
    out << (k ? "," : "") << space.labels[static_cast<std::size_t>(k)];
  }
  out << '\n';
  for (Index i = 0; i < space.size(); ++i) {
    for (Index k = 0; k < space.size(); ++k) {
      out << (k ? "," : "") << format_complex(space.matrix(i, k));
    }
    out << '\n';
  }
  return out.str();
}

DistanceFn distance_from_json(const nlohmann::json& j, Tolerance tol) {
  if (!j.is_object() || !j.contains("fn")) {
    throw InvalidInput("distance: expected {\"fn\": <name>, ...}");
  }
  const std::string fn = j.at("fn").get<std::string>();
  if (fn == "exp_itheta_sum") {
    return exp_itheta_sum(number_from_json(j.at("theta"), "theta"));
  }
  if (fn == "i_max_mod") return i_max_mod();
  if (fn == "max_shift") {
    return max_shift(number_from_json(j.at("shift"), "shift"));
  }
  if (fn == "max_real") return max_real();
  if (fn == "one_plus_i_sum") return one_plus_i_sum();
  if (fn == "scaled_euclidean") {
    return scaled_euclidean(complex_from_json(j.at("weight")), tol);
  }
  if (fn == "user_matrix") {
    const FiniteSpace space = space_from_json(j.at("space"), tol);
    std::vector<Complex> sites;
    if (j.contains("sites")) {
      sites = points_from_json(j.at("sites"));
    } else {
      // Fall back to labels that read as complex literals.
      for (const std::string& label : space.labels) {
        sites.push_back(parse_complex_literal(label));
      }
    }
    return user_matrix(space, std::move(sites), tol);
  }
  throw InvalidInput("distance: unknown fn '" + fn + "'");
}

Json distance_to_json(const DistanceFn& fn) {
  Json j;
  j["fn"] = kind_name(fn.kind);
  switch (fn.kind) {
    case DistanceKind::ExpIthetaSum: j["theta"] = fn.theta; break;
    case DistanceKind::MaxShift: j["shift"] = fn.shift; break;
    case DistanceKind::ScaledEuclidean: j["weight"] = complex_to_json(fn.weight); break;
    case DistanceKind::UserMatrix: {
      FiniteSpace space;
      space.matrix = fn.table->matrix;
      for (const Complex s : fn.table->sites) {
        space.labels.push_back(format_complex(s));
      }
      j["space"] = space_to_json(space);
      Json sites = Json::array();
      for (const Complex s : fn.table->sites) sites.push_back(complex_to_json(s));
      j["sites"] = std::move(sites);
      break;
    }
    default: break;
  }
  return j;
}

SequenceSpec sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("sequence: expected an object");
  if (j.contains("terms")) {
    return explicit_seq(points_from_json(j.at("terms")));
  }
  if (!j.contains("rule")) {
    throw InvalidInput("sequence: expected \"terms\" or \"rule\"");
  }
  const std::string rule = j.at("rule").get<std::string>();
  const int n_max = j.contains("n_max") ? j.at("n_max").get<int>() : 1024;
  if (rule == "reciprocal_i") return reciprocal_i_seq(n_max);
  if (rule == "constant") {
    return constant_seq(complex_from_json(j.at("value")), n_max);
  }
  if (rule == "alternating") {
    return alternating_seq(complex_from_json(j.at("first")),
                           complex_from_json(j.at("second")), n_max);
  }
  throw InvalidInput("sequence: unknown rule '" + rule + "'");
}

Json sequence_to_json(const SequenceSpec& seq) {
  Json j;
  switch (seq.rule) {
    case SequenceSpec::Rule::Explicit: {
      Json terms = Json::array();
      for (const Complex t : seq.terms) terms.push_back(complex_to_json(t));
      j["terms"] = std::move(terms);
      return j;
    }
    case SequenceSpec::Rule::ReciprocalI:
      j["rule"] = "reciprocal_i";
      break;
    case SequenceSpec::Rule::Constant:
      j["rule"] = "constant";
      j["value"] = complex_to_json(seq.first);
      break;
    case SequenceSpec::Rule::Alternating:
      j["rule"] = "alternating";
      j["first"] = complex_to_json(seq.first);
      j["second"] = complex_to_json(seq.second);
      break;
  }
  j["n_max"] = seq.n_max;
  return j;
}

Region region_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw InvalidInput("region: expected {\"kind\": ...}");
  }
  Region region;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "annulus") {
    region.kind = Region::Kind::Annulus;
    if (j.contains("center")) region.center = complex_from_json(j.at("center"));
    region.inner = number_from_json(j.at("inner"), "inner");
    region.outer = number_from_json(j.at("outer"), "outer");
  } else if (kind == "rect") {
    region.kind = Region::Kind::Rect;
    region.lo = complex_from_json(j.at("min"));
    region.hi = complex_from_json(j.at("max"));
  } else {
    throw InvalidInput("region: unknown kind '" + kind + "'");
  }
  return region;
}

SamplingSpec sampling_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("mode")) {
    throw InvalidInput("sampling: expected {\"mode\": ...}");
  }
  SamplingSpec sampling;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "grid") {
    sampling.mode = SamplingSpec::Mode::Grid;
    sampling.step = number_from_json(j.at("step"), "step");
  } else if (mode == "monte_carlo") {
    sampling.mode = SamplingSpec::Mode::MonteCarlo;
    sampling.count = j.at("count").get<int>();
    if (j.contains("seed")) sampling.seed = j.at("seed").get<std::uint64_t>();
  } else {
    throw InvalidInput("sampling: unknown mode '" + mode + "'");
  }
  return sampling;
}

}  // namespace cvml
