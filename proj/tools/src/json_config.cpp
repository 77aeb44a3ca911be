#include "json_config.hpp"

#include <json.hpp>

namespace citegen::cli {

namespace {

using nlohmann::json;

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  return value.dump();
}

void collect(const json& node, std::vector<std::string> parents, std::vector<CLI::ConfigItem>& items) {
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      auto nested = parents;
      nested.push_back(key);
      collect(value, nested, items);
      continue;
    }
    CLI::ConfigItem item;
    item.parents = parents;
    item.name = key;
    if (value.is_array()) {
      for (const auto& element : value) item.inputs.push_back(scalar_text(element));
    } else {
      item.inputs.push_back(scalar_text(value));
    }
    items.push_back(std::move(item));
  }
}

json app_values(const CLI::App* app, bool default_also) {
  json out = json::object();
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_lnames().empty() || opt->get_configurable() == false) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help" || name == "config") continue;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      if (opt->get_type_size() == 0) {
        out[name] = true;
      } else if (results.size() == 1) {
        out[name] = results.front();
      } else {
        out[name] = results;
      }
    } else if (default_also && !opt->get_default_str().empty()) {
      out[name] = opt->get_default_str();
    }
  }
  for (const CLI::App* sub : app->get_subcommands({})) {
    json nested = app_values(sub, default_also);
    if (!nested.empty()) out[sub->get_name()] = nested;
  }
  return out;
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool, std::string) const {
  return app_values(app, default_also).dump(2) + "\n";
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  json document;
  try {
    document = json::parse(input);
  } catch (const json::exception& e) {
    throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!document.is_object()) throw CLI::ConversionError("config must be a JSON object");
  std::vector<CLI::ConfigItem> items;
  json flat = json::object(), nested = json::object();
  for (const auto& [key, value] : document.items()) {
    (value.is_object() ? nested : flat)[key] = value;
  }
  std::vector<std::string> parents;
  if (!subcommand_.empty()) parents.push_back(subcommand_);
  collect(flat, parents, items);
  collect(nested, {}, items);
  return items;
}

}  // namespace citegen::cli
