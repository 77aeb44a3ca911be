#pragma once

#include <string>
#include <vector>

#include <CLI11.hpp>

namespace citegen::cli {

/// CLI11 config reader for JSON files. Nested objects address subcommands
/// ({"generate": {"nodes": 100}}); top-level scalars apply to `subcommand`,
/// the command being run. Arrays become repeated values.
class JsonConfig : public CLI::Config {
 public:
  explicit JsonConfig(std::string subcommand) : subcommand_(std::move(subcommand)) {}

  std::string to_config(const CLI::App* app, bool default_also, bool write_description,
                        std::string prefix) const override;
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override;

 private:
  std::string subcommand_;
};

}  // namespace citegen::cli
