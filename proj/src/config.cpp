#include "casimir/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace casimir {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ConfigError(field + ": " + message);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "must be finite");
  return v;
}

double number_or(const json& obj, const char* key, double fallback, const std::string& prefix) {
  if (!obj.contains(key)) return fallback;
  return number(obj.at(key), prefix + "." + key);
}

Vector3 vector3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) fail(field, "expected an array of 3 numbers");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]"), number(j[2], field + "[2]")};
}

PolarizabilityTensor tensor(const json& atom, const std::string& field) {
  const bool has_full = atom.contains("alpha");
  const bool has_short = atom.contains("alpha_perp") || atom.contains("alpha_z");
  if (has_full && has_short) fail(field, "give either alpha or alpha_perp/alpha_z, not both");
  try {
    if (has_short) {
      if (!atom.contains("alpha_perp") || !atom.contains("alpha_z"))
        fail(field, "alpha_perp and alpha_z must be given together");
      return PolarizabilityTensor::uniaxial(number(atom["alpha_perp"], field + ".alpha_perp"),
                                            number(atom["alpha_z"], field + ".alpha_z"));
    }
    if (!has_full) fail(field + ".alpha", "missing");
    const json& a = atom["alpha"];
    if (a.is_number()) return PolarizabilityTensor::isotropic(number(a, field + ".alpha"));
    if (!a.is_array() || a.size() != 3) fail(field + ".alpha", "expected a number or a 3x3 array");
    Matrix3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string row = field + ".alpha[" + std::to_string(i) + "]";
      if (!a[i].is_array() || a[i].size() != 3) fail(row, "expected an array of 3 numbers");
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = number(a[i][j], row + "[" + std::to_string(j) + "]");
    }
    return PolarizabilityTensor(m);
  } catch (const ValidationError& e) {
    fail(field + ".alpha", e.what());
  }
}

SweepParameter parse_parameter(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  const auto s = j.get<std::string>();
  if (s == "Z_over_a") return SweepParameter::ZOverA;
  if (s == "Gamma") return SweepParameter::Gamma;
  if (s == "gamma") return SweepParameter::GammaEq;
  if (s == "a") return SweepParameter::A;
  fail(field, "unknown sweep parameter '" + s + "' (expected Z_over_a, gamma, Gamma or a)");
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string_view parameter_name(SweepParameter p) {
  switch (p) {
    case SweepParameter::ZOverA:
      return "Z_over_a";
    case SweepParameter::Gamma:
      return "Gamma";
    case SweepParameter::GammaEq:
      return "gamma";
    case SweepParameter::A:
      return "a";
  }
  return "?";
}

double SweepAxis::value_at(int step) const {
  if (step == steps - 1) return max;
  return min + (max - min) * static_cast<double>(step) / static_cast<double>(steps - 1);
}

void validate_sweep(const SweepAxis& axis) {
  if (axis.steps < 2) fail("sweep.steps", "must be >= 2");
  if (!(axis.max >= axis.min)) fail("sweep.max", "must be >= sweep.min");
  switch (axis.parameter) {
    case SweepParameter::ZOverA:
      if (axis.min < 0.0) fail("sweep.min", "Z/a must be >= 0");
      if (!(axis.a > 0.0)) fail("sweep.a", "must be > 0");
      break;
    case SweepParameter::GammaEq:
      if (axis.min < 1.0) fail("sweep.min", "gamma must be >= 1");
      if (!(axis.a > 0.0)) fail("sweep.a", "must be > 0");
      break;
    case SweepParameter::Gamma:
      if (axis.min < 1.0) fail("sweep.min", "Gamma must be >= 1");
      if (!(axis.r > 0.0)) fail("sweep.r", "must be > 0");
      if (!(axis.a_over_r > 0.0) || axis.a_over_r > 1.0) fail("sweep.a_over_r", "must be in (0, 1]");
      break;
    case SweepParameter::A:
      if (axis.min < 0.0) fail("sweep.min", "separation must be >= 0");
      if (!(axis.Z >= 0.0)) fail("sweep.Z", "must be >= 0");
      break;
  }
}

RunConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON at " + line_column(json_text, e.byte) + ": " + e.what());
  }
  if (!root.is_object()) fail("(root)", "expected a JSON object");

  RunConfig cfg;
  if (!root.contains("atoms")) fail("atoms", "missing");
  const json& atoms = root["atoms"];
  if (!atoms.is_array() || atoms.size() != 2) fail("atoms", "expected an array of exactly 2 atoms");

  std::optional<AtomSpec> specs[2];
  for (std::size_t k = 0; k < 2; ++k) {
    const std::string field = "atoms[" + std::to_string(k) + "]";
    const json& atom = atoms[k];
    if (!atom.is_object()) fail(field, "expected an object");
    PolarizabilityTensor alpha = tensor(atom, field);
    (k == 0 ? cfg.alpha1 : cfg.alpha2) = alpha;
    bool contact = false;
    if (atom.contains("contact")) {
      if (!atom["contact"].is_boolean()) fail(field + ".contact", "expected true or false");
      contact = atom["contact"].get<bool>();
    }
    if (atom.contains("position")) specs[k] = AtomSpec{vector3(atom["position"], field + ".position"), alpha, contact};
  }

  if (root.contains("sweep")) {
    const json& s = root["sweep"];
    if (!s.is_object()) fail("sweep", "expected an object");
    SweepAxis axis;
    if (!s.contains("parameter")) fail("sweep.parameter", "missing");
    axis.parameter = parse_parameter(s["parameter"], "sweep.parameter");
    for (const char* key : {"min", "max", "steps"})
      if (!s.contains(key)) fail(std::string("sweep.") + key, "missing");
    axis.min = number(s["min"], "sweep.min");
    axis.max = number(s["max"], "sweep.max");
    if (!s["steps"].is_number_integer()) fail("sweep.steps", "expected an integer");
    axis.steps = s["steps"].get<int>();
    axis.a = number_or(s, "a", axis.a, "sweep");
    axis.r = number_or(s, "r", axis.r, "sweep");
    axis.a_over_r = number_or(s, "a_over_r", axis.a_over_r, "sweep");
    axis.Z = number_or(s, "Z", axis.Z, "sweep");
    validate_sweep(axis);
    cfg.sweep = axis;
  } else {
    for (std::size_t k = 0; k < 2; ++k)
      if (!specs[k]) fail("atoms[" + std::to_string(k) + "].position", "missing");
  }

  if (specs[0] && specs[1]) cfg.system = SystemConfig{*specs[0], *specs[1]};
  if (root.contains("tol")) {
    const double tol = number(root["tol"], "tol");
    if (!(tol > 0.0)) fail("tol", "must be > 0");
    cfg.tolerance = tol;
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace casimir
