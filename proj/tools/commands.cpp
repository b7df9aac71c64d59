#include "commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsmt/belief_matrix.hpp"
#include "dsmt/combination.hpp"
#include "dsmt/error.hpp"
#include "dsmt/lattice.hpp"
#include "dsmt/ordering.hpp"
#include "json_io.hpp"

namespace dsmt::cli {

namespace {

using io::Framework;
using io::Json;

struct CommandConfig {
  int n = -1;
  std::string framework = "dsmt";
  std::string model_path;
  std::string order;
  std::string out_format;
  bool inverse = false;
  bool allow_large = false;
  bool count_only = false;
  std::string rule;
  std::string weights_path;
  std::string convert_to = "bel";
  std::vector<std::string> inputs;
};

bool color_enabled() {
  const char* v = std::getenv("DSMT_COLOR");
  return v != nullptr && (std::string(v) == "1" || std::string(v) == "always");
}

FrameModel load_model(const CommandConfig& cfg, Framework framework) {
  if (cfg.model_path.empty()) return io::parse_model(Json(), cfg.n, framework);
  if (framework == Framework::dst) {
    throw InvalidArgument("--model constraints cannot be combined with --framework dst");
  }
  return io::parse_model(io::read_json_file(cfg.model_path), cfg.n, framework);
}

std::shared_ptr<const Lattice> lattice_for(const CommandConfig& cfg) {
  const Framework framework = io::parse_framework(cfg.framework);
  if (cfg.n < 0) throw InvalidArgument("-n is required");
  return io::make_lattice(cfg.n, framework, load_model(cfg, framework), cfg.allow_large);
}

OrderKind order_for(const CommandConfig& cfg, const Lattice& lattice) {
  if (!cfg.order.empty()) return parse_order_kind(cfg.order);
  // The powerset's generation order is bibe, which already respects inclusion.
  return lattice.source() == LatticeSource::powerset ? OrderKind::iso : OrderKind::strength;
}

Json header(const Lattice& lattice, Framework framework) {
  Json j;
  j["n"] = lattice.n();
  j["framework"] = io::to_string(framework);
  j["model"] = io::model_to_json(lattice.model());
  return j;
}

// --- basis ------------------------------------------------------------------

void cmd_basis(const CommandConfig& cfg, std::ostream& out) {
  const Framework framework = io::parse_framework(cfg.framework);
  const FrameModel model = load_model(cfg, framework);
  const EncodingBasis basis = build_basis(cfg.n, model);
  Json j;
  j["n"] = cfg.n;
  j["model"] = io::model_to_json(model);
  j["dimension"] = basis.dimension();
  Json parts = Json::array();
  for (const auto& p : basis.parts()) {
    parts.push_back({{"position", p.position},
                     {"code", p.code()},
                     {"length", p.length()},
                     {"weight", format_rational(part_weight(p))}});
  }
  j["parts"] = std::move(parts);
  out << j.dump(2) << '\n';
}

// --- generate ---------------------------------------------------------------

void cmd_generate(const CommandConfig& cfg, std::ostream& out) {
  const Framework framework = io::parse_framework(cfg.framework);
  const auto lattice = lattice_for(cfg);
  Json j = header(*lattice, framework);
  j["count"] = lattice->size();
  if (cfg.count_only) {
    out << j.dump(2) << '\n';
    return;
  }
  const OrderKind kind = cfg.order.empty() ? OrderKind::iso : parse_order_kind(cfg.order);
  j["order"] = to_string(kind);
  Json elements = Json::array();
  for (std::size_t i : total_order(*lattice, kind)) {
    elements.push_back({{"index", i}, {"parts", io::parts_of(*lattice, i)}, {"label", lattice->label(i)}});
  }
  j["elements"] = std::move(elements);
  out << j.dump(2) << '\n';
}

// --- order ------------------------------------------------------------------

void cmd_order(const CommandConfig& cfg, std::ostream& out) {
  const Framework framework = io::parse_framework(cfg.framework);
  const auto lattice = lattice_for(cfg);
  const OrderKind kind = parse_order_kind(cfg.order);
  const auto order = total_order(*lattice, kind);

  if (cfg.out_format == "json") {
    Json j = header(*lattice, framework);
    j["order"] = to_string(kind);
    Json rows = Json::array();
    for (std::size_t r = 0; r < order.size(); ++r) {
      const std::size_t i = order[r];
      rows.push_back({{"rank", r},
                      {"index", i},
                      {"parts", io::parts_of(*lattice, i)},
                      {"label", lattice->label(i)},
                      {"expression", lattice->pretty_label(i)},
                      {"cardinality", dsm_cardinality(lattice->element(i))},
                      {"strength", format_rational(strength(lattice->element(i), lattice->basis()))}});
    }
    j["elements"] = std::move(rows);
    out << j.dump(2) << '\n';
    return;
  }

  out << "rank\tindex\tlabel\texpression\tcardinality\tstrength\n";
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t i = order[r];
    out << r << '\t' << i << '\t' << lattice->label(i) << '\t' << lattice->pretty_label(i) << '\t'
        << dsm_cardinality(lattice->element(i)) << '\t'
        << format_rational(strength(lattice->element(i), lattice->basis())) << '\n';
  }
}

// --- bm ---------------------------------------------------------------------

template <typename Matrix>
void print_matrix(const Matrix& m, const std::string& format, const BeliefMatrix& bm, OrderKind kind,
                  Framework framework, bool inverse, std::ostream& out) {
  if (format == "csv") {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        if (c) out << ',';
        out << static_cast<long long>(m(r, c));
      }
      out << '\n';
    }
    return;
  }
  const Lattice& lattice = bm.lattice();
  if (format == "json") {
    Json j = header(lattice, framework);
    j["order"] = to_string(kind);
    j["inverse"] = inverse;
    j["size"] = bm.size();
    Json labels = Json::array();
    for (std::size_t i : bm.order()) labels.push_back(lattice.label(i));
    j["elements"] = std::move(labels);
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(static_cast<long long>(m(r, c)));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    out << j.dump() << '\n';
    return;
  }
  if (format != "pretty") throw InvalidArgument("unknown output format '" + format + "' (csv|json|pretty)");

  // Diagonal entries are bracketed (and red when DSMT_COLOR is set).
  const bool color = color_enabled();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::ostringstream cell;
      if (r == c) {
        cell << '[' << static_cast<long long>(m(r, c)) << ']';
      } else {
        cell << ' ' << static_cast<long long>(m(r, c)) << ' ';
      }
      std::string text = cell.str();
      if (text.size() < 4) text.insert(0, 4 - text.size(), ' ');
      out << (r == c && color ? "\x1b[31m" + text + "\x1b[0m" : text);
    }
    out << "   " << lattice.pretty_label(bm.order()[static_cast<std::size_t>(r)]) << '\n';
  }
}

void cmd_bm(const CommandConfig& cfg, std::ostream& out) {
  const Framework framework = io::parse_framework(cfg.framework);
  const auto lattice = lattice_for(cfg);
  const OrderKind kind = order_for(cfg, *lattice);
  const BeliefMatrix bm = build_bm(lattice, kind, cfg.allow_large);
  const std::string format = cfg.out_format.empty() ? "pretty" : cfg.out_format;
  if (cfg.inverse) {
    print_matrix(bm.inverse(), format, bm, kind, framework, true, out);
  } else {
    print_matrix(bm.entries(), format, bm, kind, framework, false, out);
  }
}

// --- bel --------------------------------------------------------------------

void cmd_bel(const CommandConfig& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw InvalidArgument("bel takes exactly one input file");
  const Json input = io::read_json_file(cfg.inputs[0]);
  const bool to_mass = cfg.convert_to == "mass";
  if (!to_mass && cfg.convert_to != "bel") throw InvalidArgument("--to must be bel or mass");

  io::MassFile file = io::parse_mass_file(input, to_mass ? "beliefs" : "masses", !to_mass);
  const auto& lattice = file.masses.lattice;
  const BeliefMatrix bm = build_bm(lattice, order_for(cfg, *lattice));

  MassVector masses = file.masses;
  if (to_mass) {
    masses = m_from_bel(bm, BeliefVector{lattice, file.masses.values});
    masses.allows_empty_mass = io::round12(masses.values[0]) != 0.0;
  }
  const BeliefVector bel = bel_from_m(bm, masses);

  if (cfg.out_format == "pretty") {
    out << "rank\tlabel\texpression\tm\tBel\tPl\n";
    for (std::size_t r = 0; r < bm.size(); ++r) {
      const std::size_t i = bm.order()[r];
      out << r << '\t' << lattice->label(i) << '\t' << lattice->pretty_label(i) << '\t'
          << io::format_real(masses.values[i]) << '\t' << io::format_real(bel.values[i]) << '\t'
          << io::format_real(plausibility(masses, lattice->element(i))) << '\n';
    }
    return;
  }

  Json j = io::mass_file_to_json(file.n, file.framework, masses);
  j["order"] = to_string(order_for(cfg, *lattice));
  Json beliefs = Json::array();
  Json plaus = Json::array();
  for (std::size_t i : bm.order()) {
    beliefs.push_back({{"parts", io::parts_of(*lattice, i)}, {"value", io::round12(bel.values[i])}});
    plaus.push_back({{"parts", io::parts_of(*lattice, i)},
                     {"value", io::round12(plausibility(masses, lattice->element(i)))}});
  }
  j["beliefs"] = std::move(beliefs);
  j["plausibilities"] = std::move(plaus);
  out << j.dump(2) << '\n';
}

// --- combine ----------------------------------------------------------------

void cmd_combine(const CommandConfig& cfg, std::ostream& out) {
  const Rule rule = parse_rule(cfg.rule);
  if (cfg.inputs.size() < 2) throw InvalidArgument("combine needs at least two mass files");
  if (!cfg.weights_path.empty() && rule != Rule::custom) {
    throw InvalidArgument("--weights is only used with --rule custom");
  }

  std::vector<io::MassFile> files;
  for (const auto& path : cfg.inputs) files.push_back(io::load_mass_file(path));
  const auto lattice = files.front().masses.lattice;
  std::vector<MassVector> sources;
  for (auto& f : files) {
    f = io::rebase(std::move(f), lattice);
    if (f.masses.lattice != lattice || f.framework != files.front().framework) {
      throw InvalidArgument("all mass files must share n, framework and model");
    }
    sources.push_back(f.masses);
  }

  std::optional<WeightScheme> scheme;
  if (rule == Rule::custom) {
    if (cfg.weights_path.empty()) throw InvalidArgument("--rule custom needs --weights FILE");
    scheme = io::parse_weight_file(io::read_json_file(cfg.weights_path), *lattice);
  }

  FusionResult result;
  try {
    result = combine_sources(rule, sources, scheme);
  } catch (const FullContradiction& e) {
    throw Error("full contradiction between the sources (k12 = 1): Dempster's rule is undefined; "
                "use --rule dsm (or yager/smets)");
  }

  Json j = io::mass_file_to_json(files.front().n, files.front().framework, result.masses);
  j["rule"] = to_string(rule);
  j["conflict"] = io::round12(result.conflicts.back());
  Json steps = Json::array();
  for (double k : result.conflicts) steps.push_back(io::round12(k));
  j["conflict_steps"] = std::move(steps);
  out << j.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Belief functions over powersets and hyper-powersets"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto add_frame = [&](CLI::App* sub) {
    sub->add_option("-n", cfg.n, "frame size")->required();
    sub->add_option("--framework", cfg.framework, "dst|dsmt")->check(CLI::IsMember({"dst", "dsmt"}));
    sub->add_option("--model", cfg.model_path, "JSON file listing forced-empty intersections");
    sub->add_flag("--allow-large", cfg.allow_large, "lift the default size caps");
  };

  auto* basis = app.add_subcommand("basis", "dump the Venn part basis and weights");
  add_frame(basis);

  auto* generate = app.add_subcommand("generate", "generate 2^Theta or D^Theta");
  add_frame(generate);
  generate->add_option("--order", cfg.order, "iso|card|strength");
  generate->add_flag("--count-only", cfg.count_only, "print only the element count");

  auto* order = app.add_subcommand("order", "rank elements by iso, cardinality or strength");
  add_frame(order);
  order->add_option("--by", cfg.order, "iso|card|strength")->required();
  order->add_option("--out", cfg.out_format, "pretty|json");

  auto* bm = app.add_subcommand("bm", "print the belief matrix or its inverse");
  add_frame(bm);
  bm->add_option("--order", cfg.order, "strength|card|iso");
  bm->add_flag("--inverse", cfg.inverse, "print BM^-1");
  bm->add_option("--out", cfg.out_format, "csv|json|pretty");

  auto* bel = app.add_subcommand("bel", "convert masses to beliefs (or back with --to mass)");
  bel->add_option("file", cfg.inputs, "mass (or belief) JSON file")->required();
  bel->add_option("--to", cfg.convert_to, "bel|mass");
  bel->add_option("--order", cfg.order, "ordering used for the matrix");
  bel->add_option("--out", cfg.out_format, "json|pretty");

  auto* combine = app.add_subcommand("combine", "fuse two or more sources");
  combine->add_option("--rule", cfg.rule, "dsm|dempster|yager|smets|custom")->required();
  combine->add_option("--weights", cfg.weights_path, "redistribution weights for --rule custom");
  combine->add_option("files", cfg.inputs, "mass JSON files")->required();

  auto* verify = app.add_subcommand("verify", "reproduce the reference tables and matrices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*basis) cmd_basis(cfg, out);
    if (*generate) cmd_generate(cfg, out);
    if (*order) cmd_order(cfg, out);
    if (*bm) cmd_bm(cfg, out);
    if (*bel) cmd_bel(cfg, out);
    if (*combine) cmd_combine(cfg, out);
    if (*verify) return run_verify(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace dsmt::cli
