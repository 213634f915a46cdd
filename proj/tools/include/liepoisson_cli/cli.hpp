#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace liepoisson::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitSchema = 2;

inline constexpr const char* kVersion = "0.1.0";

struct VerifyOptions {
  std::string spec;
  std::optional<std::string> kind;
  bool json = false;
};

struct SimulateOptions {
  std::string spec;
  std::optional<std::string> sign;
  std::string h;
  std::optional<std::string> s;
  std::optional<std::string> dissipation;  // JSON text or a path to a JSON file
  std::optional<std::string> a;
  std::string z0;
  std::string method = "rk4";
  double dt = 1e-3;
  long steps = 1000;
  long stride = 1;
  std::optional<std::string> out;
  std::optional<std::string> manifest;  // defaults to <out>.manifest.json when out is set
  std::vector<std::string> input_files;  // files that feed the content hash
};

struct MetricOptions {
  std::string spec;
  std::string variant = "ck";
  std::optional<std::string> at;
  std::optional<std::string> sign;
  bool json = false;
};

struct CasimirOptions {
  std::string spec;
  bool json = false;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_metric(const MetricOptions& opt, std::ostream& out, std::ostream& err);
int cmd_casimirs(const CasimirOptions& opt, std::ostream& out, std::ostream& err);
int cmd_catalog(const std::optional<std::string>& name, std::ostream& out, std::ostream& err);

// Full command line, including the program name. Options may also come from --config <json>;
// flags given on the command line take precedence over the file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(const std::string& bytes);

}  // namespace liepoisson::cli
