#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grassline/transitions.hpp"

namespace grassline::tools {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HelpRequested : public std::exception {
 public:
  explicit HelpRequested(std::string text) : text_(std::move(text)) {}
  const std::string& text() const { return text_; }
  const char* what() const noexcept override { return "help requested"; }

 private:
  std::string text_;
};

struct Bounds {
  std::optional<int> split_max_orders;
  std::optional<int> sample_retries;
};

// "split_max_orders=40,sample_retries=64"; unknown keys are usage errors.
Bounds parse_bounds(const std::string& text, Bounds base = {});

struct Request {
  std::string command;
  nlohmann::json payload = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
  Bounds bounds;
  bool timing = false;
};

struct Report {
  bool ok = true;
  nlohmann::json result;
  VerifyReport checks;
  std::optional<double> timing_ms;
  std::optional<std::string> error_code;
  std::optional<std::string> error_message;
  std::vector<std::string> summary;  // human-readable lines, printed to stderr
};

const std::vector<std::string>& command_names();

// env_bounds is the value of GRASSLINE_BOUNDS, if set.
Request parse(const std::vector<std::string>& args, const std::optional<std::string>& env_bounds = std::nullopt);
Request parse_request_json(const nlohmann::json& j, Bounds base = {});
// Decodes every field of the payload without running the computation.
void validate_payload(const Request& req);

Report execute(const Request& req);

// Canonical JSON text with sorted keys and a trailing newline.
std::string emit(const Report& rep);
int exit_code(const Report& rep);

}  // namespace grassline::tools
