#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsmt/combination.hpp"
#include "dsmt/lattice.hpp"
#include "dsmt/mass.hpp"

namespace dsmt::io {

using Json = nlohmann::ordered_json;

enum class Framework { dst, dsmt };

Framework parse_framework(const std::string& text);
std::string to_string(Framework framework);

// Rounds to 12 significant digits so JSON and text output stay short and
// reproducible.
double round12(double value);
std::string format_real(double value);

// Model field: "free", "shafer", or a list of forced-empty intersections such
// as [["1","3"],["2","3"]].
FrameModel parse_model(const Json& json, int n, Framework framework);
Json model_to_json(const FrameModel& model);

Json read_json_file(const std::string& path);

std::shared_ptr<const Lattice> make_lattice(int n, Framework framework, const FrameModel& model,
                                            bool allow_large = false);

// Parts list such as ["1","12"] -> element index. The empty list is the empty set.
std::size_t element_from_parts(const Json& parts, const Lattice& lattice);
Json parts_of(const Lattice& lattice, std::size_t index);

struct MassFile {
  int n = 0;
  Framework framework = Framework::dsmt;
  FrameModel model;
  MassVector masses;
};

// {"n", "framework", "model", "masses": [{"parts": [...], "value": x}, ...]}.
// `key` selects the entry list ("masses" or "beliefs"); belief files are not
// validated as bbas.
MassFile parse_mass_file(const Json& json, const std::string& key = "masses", bool validate = true);
MassFile load_mass_file(const std::string& path);

// Reuses `lattice` when the file describes the same one.
MassFile rebase(MassFile file, const std::shared_ptr<const Lattice>& lattice);

// Same schema as the input; only non-zero entries plus the empty set when it
// carries mass, in lattice index order.
Json mass_file_to_json(int n, Framework framework, const MassVector& masses);

// {"weights": [{"parts": [...], "value": w}, ...]}
WeightScheme parse_weight_file(const Json& json, const Lattice& lattice);

}  // namespace dsmt::io
