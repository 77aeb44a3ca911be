#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "citegen/cs_generator.hpp"

namespace citegen {

/// Contents of a CS parameter document:
///   {"k": 3, "p": [...], "m": [...], "rho": [...], "sigma2": [...],
///    "back_edge_ratio": 0.02, "node_count": 2708}
/// The last two keys are optional.
struct CsModel {
  CsParams params;
  std::optional<double> back_edge_ratio;
  std::optional<std::size_t> node_count;
};

std::string to_json(const CsModel& model);
CsModel cs_model_from_json(const std::string& text);

void save_cs_model(const std::filesystem::path& path, const CsModel& model);
CsModel load_cs_model(const std::filesystem::path& path);

}  // namespace citegen
