#include "citegen/params_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace citegen {

using nlohmann::json;

std::string to_json(const CsModel& model) {
  json doc;
  doc["k"] = model.params.k();
  doc["p"] = model.params.p;
  doc["m"] = model.params.m;
  doc["rho"] = model.params.rho;
  doc["sigma2"] = model.params.sigma2;
  if (model.back_edge_ratio) doc["back_edge_ratio"] = *model.back_edge_ratio;
  if (model.node_count) doc["node_count"] = *model.node_count;
  return doc.dump(2) + "\n";
}

CsModel cs_model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParamError(std::string("CS parameter document is not valid JSON: ") + e.what());
  }
  CsModel model;
  try {
    model.params.p = doc.at("p").get<std::vector<double>>();
    model.params.m = doc.at("m").get<std::vector<double>>();
    model.params.rho = doc.at("rho").get<std::vector<double>>();
    model.params.sigma2 = doc.at("sigma2").get<std::vector<double>>();
    if (doc.contains("k") && doc.at("k").get<std::size_t>() != model.params.k()) {
      throw ParamError("CS parameter document: k does not match the length of p");
    }
    if (doc.contains("back_edge_ratio")) model.back_edge_ratio = doc.at("back_edge_ratio").get<double>();
    if (doc.contains("node_count")) model.node_count = doc.at("node_count").get<std::size_t>();
  } catch (const json::exception& e) {
    throw ParamError(std::string("CS parameter document: ") + e.what());
  }
  model.params.validate();
  return model;
}

void save_cs_model(const std::filesystem::path& path, const CsModel& model) {
  std::ofstream out(path);
  if (!out) throw ParamError("cannot write " + path.string());
  out << to_json(model);
}

CsModel load_cs_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return cs_model_from_json(buf.str());
}

}  // namespace citegen
