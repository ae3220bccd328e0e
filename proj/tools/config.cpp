#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace mevac::cli {

namespace {

using json = nlohmann::json;

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    throw ConfigError(path + ": expected an object");
  }
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(join(path, key) + ": unknown key");
    }
  }
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw ConfigError(path + ": expected a number");
  }
  const double x = j.get<double>();
  if (!std::isfinite(x)) {
    throw ConfigError(path + ": must be finite");
  }
  return x;
}

double number_field(const json& obj, std::string_view key, const std::string& path) {
  if (!obj.contains(key)) {
    throw ConfigError(join(path, key) + ": missing");
  }
  return as_number(obj.at(key), join(path, key));
}

int integer_field(const json& obj, std::string_view key, const std::string& path) {
  const std::string where = join(path, key);
  if (!obj.contains(key)) {
    throw ConfigError(where + ": missing");
  }
  const json& j = obj.at(key);
  if (!j.is_number_integer()) {
    throw ConfigError(where + ": expected an integer");
  }
  return j.get<int>();
}

template <std::size_t N>
std::array<double, N> vector_field(const json& obj, std::string_view key, const std::string& path) {
  const std::string where = join(path, key);
  if (!obj.contains(key)) {
    throw ConfigError(where + ": missing");
  }
  const json& j = obj.at(key);
  if (!j.is_array() || j.size() != N) {
    throw ConfigError(where + ": expected " + std::to_string(N) + " numbers, got " +
                      (j.is_array() ? std::to_string(j.size()) : std::string("a non-array")));
  }
  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = as_number(j[i], where + "[" + std::to_string(i) + "]");
  }
  return out;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("config: syntax error at " + line_column(text, e.byte) + ": " + e.what());
  }
  return config_from_json(doc);
}

RunConfig config_from_json(const json& doc) {
  require_object(doc, "config");
  reject_unknown(doc, "", {"material", "boost", "fields", "vacuum", "sweep"});

  RunConfig cfg;
  if (!doc.contains("material")) {
    throw ConfigError("material: missing");
  }
  {
    const json& mat = doc.at("material");
    require_object(mat, "material");
    reject_unknown(mat, "material", {"epsilon", "mu", "chi", "rho0"});
    cfg.material.epsilon = number_field(mat, "epsilon", "material");
    cfg.material.mu = number_field(mat, "mu", "material");
    if (mat.contains("chi")) {
      cfg.material.chi = vector_field<9>(mat, "chi", "material");
    }
    if (mat.contains("rho0")) {
      cfg.material.rho0 = number_field(mat, "rho0", "material");
    }
  }
  if (doc.contains("boost")) {
    const json& b = doc.at("boost");
    require_object(b, "boost");
    reject_unknown(b, "boost", {"beta"});
    cfg.boost = BoostConfig{number_field(b, "beta", "boost")};
  }
  if (doc.contains("fields")) {
    const json& f = doc.at("fields");
    require_object(f, "fields");
    reject_unknown(f, "fields", {"E", "B"});
    cfg.fields = FieldsConfig{vector_field<3>(f, "E", "fields"), vector_field<3>(f, "B", "fields")};
  }
  if (doc.contains("vacuum")) {
    const json& v = doc.at("vacuum");
    require_object(v, "vacuum");
    reject_unknown(v, "vacuum", {"grid_n", "cutoff", "volume"});
    VacuumConfig vc;
    vc.grid_n = integer_field(v, "grid_n", "vacuum");
    vc.cutoff = number_field(v, "cutoff", "vacuum");
    vc.volume = number_field(v, "volume", "vacuum");
    if (vc.grid_n < 2) {
      throw ConfigError("vacuum.grid_n: must be >= 2");
    }
    if (!(vc.cutoff > 0.0)) {
      throw ConfigError("vacuum.cutoff: must be > 0");
    }
    if (!(vc.volume > 0.0)) {
      throw ConfigError("vacuum.volume: must be > 0");
    }
    cfg.vacuum = vc;
  }
  if (doc.contains("sweep")) {
    const json& s = doc.at("sweep");
    require_object(s, "sweep");
    reject_unknown(s, "sweep", {"parameter", "values"});
    if (!s.contains("parameter") || !s.at("parameter").is_string()) {
      throw ConfigError("sweep.parameter: expected one of beta, cutoff, grid_n");
    }
    SweepConfig sc;
    sc.parameter = s.at("parameter").get<std::string>();
    if (sc.parameter != "beta" && sc.parameter != "cutoff" && sc.parameter != "grid_n") {
      throw ConfigError("sweep.parameter: expected one of beta, cutoff, grid_n, got '" + sc.parameter + "'");
    }
    if (!s.contains("values") || !s.at("values").is_array() || s.at("values").empty()) {
      throw ConfigError("sweep.values: expected a non-empty array of numbers");
    }
    const json& values = s.at("values");
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string where = "sweep.values[" + std::to_string(i) + "]";
      if (sc.parameter == "grid_n" && !values[i].is_number_integer()) {
        throw ConfigError(where + ": grid_n values must be integers");
      }
      sc.values.push_back(as_number(values[i], where));
    }
    cfg.sweep = std::move(sc);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ": cannot open config file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

nlohmann::json to_json(const RunConfig& cfg) {
  json doc;
  doc["material"] = {{"epsilon", cfg.material.epsilon},
                     {"mu", cfg.material.mu},
                     {"chi", cfg.material.chi},
                     {"rho0", cfg.material.rho0}};
  if (cfg.boost) {
    doc["boost"] = {{"beta", cfg.boost->beta}};
  }
  if (cfg.fields) {
    doc["fields"] = {{"E", cfg.fields->E}, {"B", cfg.fields->B}};
  }
  if (cfg.vacuum) {
    doc["vacuum"] = {{"grid_n", cfg.vacuum->grid_n}, {"cutoff", cfg.vacuum->cutoff}, {"volume", cfg.vacuum->volume}};
  }
  if (cfg.sweep) {
    json values = json::array();
    for (const double v : cfg.sweep->values) {
      if (cfg.sweep->parameter == "grid_n") {
        values.push_back(static_cast<long long>(v));
      } else {
        values.push_back(v);
      }
    }
    doc["sweep"] = {{"parameter", cfg.sweep->parameter}, {"values", values}};
  }
  return doc;
}

Materiald make_material(const RunConfig& cfg) {
  const auto& mc = cfg.material;
  Mat3 chi;
  chi << mc.chi[0], mc.chi[1], mc.chi[2], mc.chi[3], mc.chi[4], mc.chi[5], mc.chi[6], mc.chi[7], mc.chi[8];
  try {
    return Materiald(mc.epsilon, mc.mu, chi, mc.rho0);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

FieldStated make_fields(const RunConfig& cfg) {
  if (!cfg.fields) {
    throw ConfigError("fields: missing (required by this command)");
  }
  const auto& fc = *cfg.fields;
  return FieldStated(Vec3(fc.E[0], fc.E[1], fc.E[2]), Vec3(fc.B[0], fc.B[1], fc.B[2]));
}

}  // namespace mevac::cli
