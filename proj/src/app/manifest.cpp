#include "exwit/app/manifest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace exwit::app {

namespace {

// Grid bounds may overshoot pi/2 by a rounded-digit value (1.5708).
constexpr double kGridSlack = 1e-4;

double number(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number()) throw ValidationError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(field, "must be finite");
  return x;
}

int integer(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ValidationError(field, "expected an integer");
  return v.get<int>();
}

std::vector<double> numbers(const nlohmann::json& v, const std::string& field) {
  if (!v.is_array()) throw ValidationError(field, "expected an array of numbers");
  std::vector<double> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string text(const nlohmann::json& v, const std::string& field) {
  if (!v.is_string()) throw ValidationError(field, "expected a string");
  return v.get<std::string>();
}

}  // namespace

EtaGrid EtaGrid::parse(const std::string& spec, const std::string& field) {
  std::stringstream ss(spec);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) || a.empty() || b.empty() ||
      c.empty())
    throw ValidationError(field, "expected start:stop:count, got '" + spec + "'");
  EtaGrid g;
  try {
    size_t pa = 0, pb = 0, pc = 0;
    g.start = std::stod(a, &pa);
    g.stop = std::stod(b, &pb);
    g.count = std::stoi(c, &pc);
    if (pa != a.size() || pb != b.size() || pc != c.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw ValidationError(field, "expected start:stop:count, got '" + spec + "'");
  }
  g.validate(field);
  return g;
}

void EtaGrid::validate(const std::string& field) const {
  if (!std::isfinite(start) || !std::isfinite(stop)) throw ValidationError(field, "bounds must be finite");
  if (start < 0.0 || stop > kHalfPi + kGridSlack || start > kHalfPi + kGridSlack || stop < 0.0)
    throw ValidationError(field, "eta bounds must lie in [0, pi/2]");
  if (stop < start) throw ValidationError(field, "stop is below start");
  if (count < 2) throw ValidationError(field, "count must be >= 2");
  if (count > 1000000) throw ValidationError(field, "count is unreasonably large");
}

std::vector<double> EtaGrid::points() const {
  std::vector<double> out(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<size_t>(i)] = start + (stop - start) * i / (count - 1);
  return out;
}

Environment parse_environment(const std::string& s, const std::string& field) {
  if (s == "markov") return Environment::Markov;
  if (s == "nonmarkov" || s == "non-markov") return Environment::NonMarkov;
  throw ValidationError(field, "expected markov or nonmarkov, got '" + s + "'");
}

Engine parse_engine(const std::string& s, const std::string& field) {
  if (s == "exact") return Engine::Exact;
  if (s == "pert2" || s == "perturbative2") return Engine::Perturbative2;
  if (s == "pert1" || s == "perturbative1") return Engine::Perturbative1;
  throw ValidationError(field, "expected exact, pert2 or pert1, got '" + s + "'");
}

RunManifest default_manifest() {
  RunManifest m;
  m.config = ChainConfig::make(3, 3, 0.1, Environment::NonMarkov);
  return m;
}

RunManifest parse_manifest(const nlohmann::json& doc, const std::string& source) {
  if (!doc.is_object()) throw ValidationError(source, "config must be a JSON object");
  static const std::set<std::string> allowed{"n_monomers", "n_reservoir", "eta",    "t",
                                             "couplings",  "fields",      "environment", "engine",
                                             "collision_order", "grid",   "outputs"};
  for (const auto& [key, _] : doc.items())
    if (!allowed.count(key)) throw ValidationError(key, "unknown field");

  RunManifest m = default_manifest();
  ChainConfig& c = m.config;
  if (doc.contains("n_monomers")) c.n_monomers = integer(doc["n_monomers"], "n_monomers");
  if (doc.contains("n_reservoir")) c.n_reservoir = integer(doc["n_reservoir"], "n_reservoir");
  if (c.n_monomers < 2) throw ValidationError("n_monomers", "must be >= 2");
  if (c.n_reservoir < 1) throw ValidationError("n_reservoir", "must be >= 1");
  if (c.n_monomers > 64) throw ValidationError("n_monomers", "must be <= 64");
  if (doc.contains("eta")) c.eta = number(doc["eta"], "eta");
  if (c.eta < 0.0 || c.eta > kHalfPi + kGridSlack) throw ValidationError("eta", "must lie in [0, pi/2]");
  if (doc.contains("t")) c.t = number(doc["t"], "t");
  if (c.t < 0.0) throw ValidationError("t", "must be >= 0");

  c.spec = XXChainSpec::uniform(c.n_monomers, 1.0, 0.0);
  if (doc.contains("couplings")) {
    c.spec.couplings = numbers(doc["couplings"], "couplings");
    if (static_cast<int>(c.spec.couplings.size()) != c.n_monomers - 1)
      throw ValidationError("couplings", "expected " + std::to_string(c.n_monomers - 1) + " values, got " +
                                             std::to_string(c.spec.couplings.size()));
  }
  if (doc.contains("fields")) {
    c.spec.fields = numbers(doc["fields"], "fields");
    if (static_cast<int>(c.spec.fields.size()) != c.n_monomers)
      throw ValidationError("fields", "expected " + std::to_string(c.n_monomers) + " values, got " +
                                          std::to_string(c.spec.fields.size()));
  }
  if (doc.contains("environment")) c.environment = parse_environment(text(doc["environment"], "environment"), "environment");
  if (doc.contains("engine")) c.engine = parse_engine(text(doc["engine"], "engine"), "engine");
  if (doc.contains("collision_order")) {
    const std::string o = text(doc["collision_order"], "collision_order");
    if (o == "monomer-major") c.order = CollisionOrder::MonomerMajor;
    else if (o == "reservoir-major") c.order = CollisionOrder::ReservoirMajor;
    else throw ValidationError("collision_order", "expected monomer-major or reservoir-major");
  }
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    if (g.is_string()) {
      m.sweep = EtaGrid::parse(g.get<std::string>(), "grid");
    } else if (g.is_object()) {
      EtaGrid e;
      for (const auto& [key, _] : g.items())
        if (key != "start" && key != "stop" && key != "count") throw ValidationError("grid." + key, "unknown field");
      if (g.contains("start")) e.start = number(g["start"], "grid.start");
      if (g.contains("stop")) e.stop = number(g["stop"], "grid.stop");
      if (g.contains("count")) e.count = integer(g["count"], "grid.count");
      e.validate("grid");
      m.sweep = e;
    } else {
      throw ValidationError("grid", "expected \"start:stop:count\" or an object");
    }
  }
  if (doc.contains("outputs")) {
    const auto& o = doc["outputs"];
    if (!o.is_array()) throw ValidationError("outputs", "expected an array of product names");
    for (size_t i = 0; i < o.size(); ++i) {
      const std::string name = text(o[i], "outputs[" + std::to_string(i) + "]");
      const auto& known = known_products();
      if (std::find(known.begin(), known.end(), name) == known.end())
        throw ValidationError("outputs[" + std::to_string(i) + "]", "unknown product '" + name + "'");
      m.outputs.push_back(name);
    }
  }
  try {
    c.validate();
  } catch (const ResourceError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError(source, e.what());
  }
  return m;
}

RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("--config", "cannot open config file '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("--config", "'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_manifest(doc, path.string());
}

}  // namespace exwit::app
