#include "knotgraph/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "knotgraph/dataset.hpp"
#include "knotgraph/decoder.hpp"
#include "knotgraph/diagram.hpp"
#include "knotgraph/encoder.hpp"
#include "knotgraph/error.hpp"
#include "knotgraph/graph_json.hpp"
#include "knotgraph/invariants.hpp"
#include "knotgraph/reidemeister.hpp"

namespace knotgraph {
namespace {

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw KnotError("cannot open '" + path + "'");
    text << file.rdbuf();
  }
  return text.str();
}

int writhe(const Diagram& d) {
  int w = 0;
  for (const Crossing& x : d.crossings()) w += x.sign();
  return w;
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Knot diagram toolkit: Reidemeister shuffles, graph encoding, invariants, datasets", "knotgraph"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> global_seed;
  bool quiet = false;
  app.add_option("--seed", global_seed, "Default seed for randomized subcommands");
  app.add_flag("--quiet", quiet, "Suppress informational messages");

  std::string input = "-";
  const auto with_input = [&](CLI::App* sub) { sub->add_option("input", input, "Input path, - for stdin"); };

  CLI::App* parse_cmd = app.add_subcommand("parse", "Normalize a PD code and print diagram statistics");
  with_input(parse_cmd);

  CLI::App* shuffle_cmd = app.add_subcommand("shuffle", "Randomly grow a diagram by Reidemeister moves, then simplify");
  with_input(shuffle_cmd);
  int c = 1;
  std::optional<std::uint64_t> shuffle_seed;
  double p_r1 = 0.2;
  shuffle_cmd->add_option("--c", c, "Shuffle complexity")->required()->check(CLI::PositiveNumber);
  shuffle_cmd->add_option("--seed", shuffle_seed, "Shuffle seed");
  shuffle_cmd->add_option("--p-r1", p_r1, "Probability of an R1 move")->check(CLI::Range(0.0, 1.0));

  CLI::App* simplify_cmd = app.add_subcommand("simplify", "Remove monogons and removable bigons");
  with_input(simplify_cmd);

  CLI::App* encode_cmd = app.add_subcommand("encode", "Encode a diagram as a labeled graph JSON object");
  with_input(encode_cmd);
  bool literal = false;
  double d_s = kDefaultDistanceScale;
  encode_cmd->add_flag("--paper-literal-distance", literal, "Use |a+b-(c+d)|/2 mod N as the raw distance");
  encode_cmd->add_option("--d-s", d_s, "Distance scale")->check(CLI::PositiveNumber);

  CLI::App* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild a PD code from labeled graph JSON");
  with_input(reconstruct_cmd);

  CLI::App* invariant_cmd = app.add_subcommand("invariant", "Knot determinant");
  with_input(invariant_cmd);
  std::string which = "goeritz";
  invariant_cmd->add_option("--which", which, "goeritz or bracket")->check(CLI::IsMember({"goeritz", "bracket"}));

  CLI::App* dataset_cmd = app.add_subcommand("dataset", "Build a JSONL corpus from a KnotInfo-style CSV");
  std::string csv_path, config_path, out_dir;
  std::string split_override;
  dataset_cmd->add_option("--csv", csv_path, "Input CSV")->required();
  dataset_cmd->add_option("--config", config_path, "key=value config file");
  dataset_cmd->add_option("--out", out_dir, "Output directory")->required();
  dataset_cmd->add_option("--split", split_override, "random, solved or large");

  CLI::App* roundtrip_cmd = app.add_subcommand("roundtrip", "Check reconstruct(encode(d)) against d");
  with_input(roundtrip_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    if (parse_cmd->parsed()) {
      const Diagram d = parse_pd(slurp(input, in));
      out << render_pd(d) << "\n";
      out << "crossings=" << d.crossing_count() << "\n";
      out << "edges=" << d.edge_count() << "\n";
      out << "faces=" << d.faces().size() << "\n";
      out << "writhe=" << writhe(d) << "\n";
      out << "gauss=" << render_gauss(gauss_code(d)) << "\n";
    } else if (shuffle_cmd->parsed()) {
      const Diagram d = parse_pd(slurp(input, in));
      ShuffleConfig cfg;
      cfg.c = c;
      cfg.p_r1 = p_r1;
      cfg.p_r2 = 1.0 - p_r1;
      cfg.seed = shuffle_seed.value_or(global_seed.value_or(0));
      out << render_pd(shuffle(d, cfg)) << "\n";
    } else if (simplify_cmd->parsed()) {
      const Simplified s = simplify(parse_pd(slurp(input, in)));
      out << render_pd(s.diagram) << "\n";
      if (s.is_trivial && !quiet) err << "note: diagram simplifies to the unknot\n";
    } else if (encode_cmd->parsed()) {
      const Diagram d = parse_pd(slurp(input, in));
      EncodeOptions options;
      options.distance_scale = d_s;
      options.paper_literal_distance = literal;
      const KnotGraph g = encode(d, options);
      SampleMeta meta;
      meta.name = input == "-" ? "stdin" : input;
      meta.base = meta.name;
      meta.seed = global_seed.value_or(0);
      meta.features.assign(kFeatureCount, 0.0);
      meta.target = goeritz_determinant(d).get_d();
      meta.target_name = "determinant";
      out << labeled_graph_json(g, meta).dump() << "\n";
    } else if (reconstruct_cmd->parsed()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(slurp(input, in));
      } catch (const nlohmann::json::parse_error& e) {
        throw KnotError(std::string("graph json: ") + e.what());
      }
      const ReconstructionReport report = reconstruct(graph_from_json(j));
      if (!report.diagram) {
        err << "reconstruct: graph fails validation (quad_faces=" << report.quad_faces_ok
            << ", labels=" << report.label_condition_ok << ")";
        if (!report.diagnostics.empty()) err << ": " << report.diagnostics.front();
        err << "\n";
        return kExitValidation;
      }
      out << render_pd(*report.diagram) << "\n";
    } else if (invariant_cmd->parsed()) {
      const Diagram d = parse_pd(slurp(input, in));
      out << (which == "bracket" ? kauffman_determinant(d) : goeritz_determinant(d)).get_str() << "\n";
    } else if (dataset_cmd->parsed()) {
      KeyValues kv = config_path.empty() ? KeyValues{} : read_key_values(config_path);
      if (global_seed) kv["seed"] = std::to_string(*global_seed);
      if (!split_override.empty()) kv["split"] = split_override;
      const DatasetConfig cfg = DatasetConfig::from_key_values(kv);
      const DatasetResult r = run_dataset(csv_path, cfg, out_dir);
      if (!quiet) {
        for (const SkippedRow& s : r.skipped) {
          err << "skipped line " << s.line << " (" << s.name << "): " << one_line(s.reason) << "\n";
        }
        if (r.excluded_for_target > 0) {
          err << "excluded " << r.excluded_for_target << " records without target '" << cfg.target << "'\n";
        }
      }
      out << r.manifest;
    } else if (roundtrip_cmd->parsed()) {
      const Diagram d = parse_pd(slurp(input, in));
      const ReconstructionReport report = reconstruct(encode(d));
      const bool rebuilt = report.diagram.has_value();
      const bool same_code = rebuilt && same_gauss_class(d, *report.diagram, {true, false});
      const bool same_det = rebuilt && goeritz_determinant(d) == goeritz_determinant(*report.diagram);
      out << "crossings=" << d.crossing_count() << "\n";
      out << "validated=" << (report.quad_faces_ok && report.label_condition_ok ? "yes" : "no") << "\n";
      out << "gauss_match=" << (same_code ? "yes" : "no") << "\n";
      out << "determinant_match=" << (same_det ? "yes" : "no") << "\n";
      out << "result=" << (same_code && same_det ? "pass" : "fail") << "\n";
      return same_code && same_det ? kExitOk : kExitValidation;
    }
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace knotgraph
