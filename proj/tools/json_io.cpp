#include "json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "dsmt/error.hpp"

namespace dsmt::io {

Framework parse_framework(const std::string& text) {
  if (text == "dst") return Framework::dst;
  if (text == "dsmt") return Framework::dsmt;
  throw InvalidArgument("unknown framework '" + text + "' (dst|dsmt)");
}

std::string to_string(Framework framework) { return framework == Framework::dst ? "dst" : "dsmt"; }

double round12(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round12(value));
  return buf;
}

namespace {

GeneratorSet parse_generator(const Json& item, int n) {
  if (!item.is_string()) throw InvalidArgument("constraint entries must be strings such as \"1\"");
  const std::string s = item.get<std::string>();
  char* end = nullptr;
  const long k = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0' || k < 1 || k > n) {
    throw InvalidArgument("constraint references unknown frame element '" + s + "'");
  }
  return GeneratorSet{1} << (k - 1);
}

}  // namespace

FrameModel parse_model(const Json& json, int n, Framework framework) {
  if (json.is_null()) return framework == Framework::dst ? FrameModel::shafer(n) : FrameModel::free(n);
  if (json.is_string()) {
    const auto s = json.get<std::string>();
    if (s == "free") {
      if (framework == Framework::dst) throw InvalidArgument("the dst framework uses the shafer model");
      return FrameModel::free(n);
    }
    if (s == "shafer") {
      if (framework == Framework::dst) return FrameModel::shafer(n);
      // Exclusive hypotheses inside the hyper-powerset machinery.
      return FrameModel::hybrid(n, FrameModel::shafer(n).forced_empty());
    }
    throw InvalidArgument("unknown model '" + s + "'");
  }
  if (!json.is_array()) throw InvalidArgument("model must be \"free\", \"shafer\" or a constraint list");
  if (framework == Framework::dst) {
    throw InvalidArgument("constraint lists apply to the dsmt framework only");
  }
  std::vector<GeneratorSet> constraints;
  for (const auto& c : json) {
    if (!c.is_array() || c.empty()) throw InvalidArgument("each constraint is a non-empty list of elements");
    GeneratorSet set = 0;
    for (const auto& item : c) set |= parse_generator(item, n);
    constraints.push_back(set);
  }
  return FrameModel::hybrid(n, std::move(constraints));
}

Json model_to_json(const FrameModel& model) {
  switch (model.kind()) {
    case ModelKind::free:
      return "free";
    case ModelKind::shafer:
      return "shafer";
    case ModelKind::hybrid:
      break;
  }
  Json out = Json::array();
  for (GeneratorSet c : model.forced_empty()) {
    Json entry = Json::array();
    for (int k = 0; c >> k; ++k) {
      if ((c >> k) & 1U) entry.push_back(std::to_string(k + 1));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

std::shared_ptr<const Lattice> make_lattice(int n, Framework framework, const FrameModel& model,
                                            bool allow_large) {
  if (framework == Framework::dst) {
    if (model.kind() != ModelKind::shafer) throw InvalidArgument("the dst framework uses the shafer model");
    return std::make_shared<const Lattice>(generate_powerset_bibe(n));
  }
  if (model.kind() == ModelKind::shafer) throw InvalidArgument("the shafer model belongs to the dst framework");
  return std::make_shared<const Lattice>(generate_lattice(model, allow_large));
}

std::size_t element_from_parts(const Json& parts, const Lattice& lattice) {
  if (!parts.is_array()) throw InvalidArgument("\"parts\" must be a list of part codes");
  ElementMask e = lattice.empty();
  for (const auto& p : parts) {
    if (!p.is_string()) throw InvalidArgument("part codes must be strings such as \"12\"");
    const auto pos = lattice.basis().find_code(p.get<std::string>());
    if (!pos) throw InvalidArgument("part <" + p.get<std::string>() + "> is not in the model's basis");
    e.bits |= std::uint64_t{1} << *pos;
  }
  if (auto idx = lattice.index_of(e)) return *idx;
  throw InvalidArgument("parts " + parts.dump() + " do not form an element of the lattice");
}

Json parts_of(const Lattice& lattice, std::size_t index) {
  Json out = Json::array();
  const ElementMask e = lattice.element(index);
  for (const auto& part : lattice.basis().parts()) {
    if (e.test(static_cast<int>(part.position))) out.push_back(part.code());
  }
  return out;
}

MassFile parse_mass_file(const Json& json, const std::string& key, bool validate) {
  try {
    if (!json.is_object()) throw InvalidArgument("mass file must be a JSON object");
    MassFile file;
    file.n = json.at("n").get<int>();
    file.framework = parse_framework(json.value("framework", std::string("dsmt")));
    file.model = parse_model(json.contains("model") ? json.at("model") : Json(), file.n, file.framework);
    auto lattice = make_lattice(file.n, file.framework, file.model);
    file.masses = MassVector::zeros(lattice);
    std::vector<bool> seen(lattice->size(), false);
    for (const auto& entry : json.at(key)) {
      const std::size_t idx = element_from_parts(entry.at("parts"), *lattice);
      if (seen[idx]) throw InvalidArgument("element " + lattice->label(idx) + " listed twice");
      seen[idx] = true;
      file.masses.values[idx] = entry.at("value").get<double>();
    }
    file.masses.allows_empty_mass = file.masses.values[0] != 0.0;
    if (validate) file.masses.validate();
    return file;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed mass file: ") + e.what());
  }
}

MassFile load_mass_file(const std::string& path) {
  try {
    return parse_mass_file(read_json_file(path));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

MassFile rebase(MassFile file, const std::shared_ptr<const Lattice>& lattice) {
  if (same_lattice(*file.masses.lattice, *lattice)) file.masses.lattice = lattice;
  return file;
}

Json mass_file_to_json(int n, Framework framework, const MassVector& masses) {
  const Lattice& lattice = *masses.lattice;
  Json out;
  out["n"] = n;
  out["framework"] = to_string(framework);
  out["model"] = model_to_json(lattice.model());
  Json entries = Json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const double v = round12(masses.values[i]);
    if (v == 0.0) continue;
    Json entry;
    entry["parts"] = parts_of(lattice, i);
    entry["value"] = v;
    entries.push_back(std::move(entry));
  }
  out["masses"] = std::move(entries);
  return out;
}

WeightScheme parse_weight_file(const Json& json, const Lattice& lattice) {
  try {
    WeightScheme scheme{std::vector<double>(lattice.size(), 0.0)};
    for (const auto& entry : json.at("weights")) {
      scheme.weights[element_from_parts(entry.at("parts"), lattice)] += entry.at("value").get<double>();
    }
    scheme.validate(lattice);
    return scheme;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed weight file: ") + e.what());
  }
}

}  // namespace dsmt::io
