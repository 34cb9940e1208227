#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "exwit/protocol.hpp"

namespace exwit::app {

enum ExitCode : int { kOk = 0, kValidation = 1, kResource = 2, kVerification = 3 };

// Bad user input; `field` names the offending key or flag.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

inline constexpr double kHalfPi = 1.5707963267948966;

struct EtaGrid {
  double start = 0.0;
  double stop = kHalfPi;
  int count = 513;

  static EtaGrid parse(const std::string& spec, const std::string& field = "--grid");
  void validate(const std::string& field = "grid") const;
  std::vector<double> points() const;
};

inline const std::vector<std::string>& known_products() {
  static const std::vector<std::string> p{"table1", "fig4", "fig5", "fig6", "figs7-9", "trace", "witness"};
  return p;
}

struct RunManifest {
  ChainConfig config;
  std::optional<EtaGrid> sweep;
  std::vector<std::string> outputs;
};

Environment parse_environment(const std::string& s, const std::string& field);
Engine parse_engine(const std::string& s, const std::string& field);

RunManifest default_manifest();
RunManifest parse_manifest(const nlohmann::json& doc, const std::string& source);
RunManifest load_manifest(const std::filesystem::path& path);

}  // namespace exwit::app
