#include "gest/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gest/cluster.hpp"
#include "gest/geometry.hpp"
#include "gest/netpbm.hpp"
#include "gest/synth.hpp"

namespace gest::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw error("config: \"" + key + "\" must be a number");
  return j.at(key).get<double>();
}

std::uint8_t channel_bound(const json& j, const std::string& key) {
  const double v = require_number(j, key);
  if (v < 0 || v > 255 || v != static_cast<int>(v))
    throw error("config: \"" + key + "\" must be an integer in [0, 255]");
  return static_cast<std::uint8_t>(v);
}

}  // namespace

TrackerConfig load_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw error("config: invalid JSON: " + std::string(e.what()));
  }
  if (!j.is_object()) throw error("config: expected a JSON object");

  static const std::set<std::string> known = {
      "color_range",         "connectivity",        "stationary_frame_limit",
      "stationary_epsilon",  "vertical_threshold",  "horizontal_threshold",
      "zoom_threshold",      "rotation_min_radius", "rotation_max_radius",
      "alignment_threshold"};
  for (const auto& item : j.items())
    if (!known.contains(item.key()))
      throw error("config: unknown key \"" + item.key() + "\"");

  TrackerConfig config;
  if (j.contains("connectivity")) {
    const double v = require_number(j, "connectivity");
    if (v == 4)
      config.connectivity = Connectivity::four;
    else if (v == 8)
      config.connectivity = Connectivity::eight;
    else
      throw error("config: connectivity must be 4 or 8");
  }
  if (j.contains("stationary_frame_limit"))
    config.stationary_frame_limit =
        static_cast<int>(require_number(j, "stationary_frame_limit"));
  if (j.contains("stationary_epsilon"))
    config.stationary_epsilon = require_number(j, "stationary_epsilon");
  if (j.contains("vertical_threshold"))
    config.vertical_threshold = require_number(j, "vertical_threshold");
  if (j.contains("horizontal_threshold"))
    config.horizontal_threshold = require_number(j, "horizontal_threshold");
  if (j.contains("zoom_threshold"))
    config.zoom_threshold =
        static_cast<std::int64_t>(require_number(j, "zoom_threshold"));
  if (j.contains("rotation_min_radius"))
    config.rotation_min_radius = require_number(j, "rotation_min_radius");
  if (j.contains("rotation_max_radius"))
    config.rotation_max_radius = require_number(j, "rotation_max_radius");
  if (j.contains("alignment_threshold"))
    config.alignment_threshold = require_number(j, "alignment_threshold");
  if (j.contains("color_range")) {
    const json& cr = j.at("color_range");
    if (!cr.is_object()) throw error("config: color_range must be an object");
    ColorRange range;
    range.r_min = channel_bound(cr, "r_min");
    range.r_max = channel_bound(cr, "r_max");
    range.g_min = channel_bound(cr, "g_min");
    range.g_max = channel_bound(cr, "g_max");
    range.b_min = channel_bound(cr, "b_min");
    range.b_max = channel_bound(cr, "b_max");
    config.color_range = range;
  }
  validate(config);
  return config;
}

std::optional<ColorRange> parse_range_spec(const std::string& spec) {
  int bounds[6];
  int consumed = 0;
  if (std::sscanf(spec.c_str(), "%d:%d,%d:%d,%d:%d%n", &bounds[0], &bounds[1],
                  &bounds[2], &bounds[3], &bounds[4], &bounds[5],
                  &consumed) != 6 ||
      static_cast<std::size_t>(consumed) != spec.size())
    return std::nullopt;
  for (int b : bounds)
    if (b < 0 || b > 255) return std::nullopt;
  if (bounds[0] > bounds[1] || bounds[2] > bounds[3] || bounds[4] > bounds[5])
    return std::nullopt;
  ColorRange range;
  range.r_min = static_cast<std::uint8_t>(bounds[0]);
  range.r_max = static_cast<std::uint8_t>(bounds[1]);
  range.g_min = static_cast<std::uint8_t>(bounds[2]);
  range.g_max = static_cast<std::uint8_t>(bounds[3]);
  range.b_min = static_cast<std::uint8_t>(bounds[4]);
  range.b_max = static_cast<std::uint8_t>(bounds[5]);
  return range;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s = buf;
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string event_to_json(const GestureEvent& event) {
  std::string line = "{\"frame\":" + std::to_string(event.frame_index) +
                     ",\"event\":\"" + std::string(to_string(event.kind)) +
                     "\"";
  switch (event.kind) {
    case GestureKind::up:
    case GestureKind::down:
    case GestureKind::left:
    case GestureKind::right:
      line += ",\"speed\":" + format_number(event.speed);
      break;
    case GestureKind::zoom_in:
    case GestureKind::zoom_out:
      line += ",\"magnitude\":" + std::to_string(event.magnitude);
      break;
    case GestureKind::rotate_cw:
    case GestureKind::rotate_ccw:
      line += ",\"center\":{\"x\":" + format_number(event.center.x) +
              ",\"y\":" + format_number(event.center.y) +
              "},\"radius\":" + format_number(event.radius);
      break;
  }
  return line + "}";
}

int cmd_binarize(const std::string& input_path, const std::string& range_spec,
                 const std::string& output_path, std::ostream& err) {
  const auto range = parse_range_spec(range_spec);
  if (!range) {
    err << "binarize: bad range spec \"" << range_spec
        << "\" (want rmin:rmax,gmin:gmax,bmin:bmax with 0-255 bounds)\n";
    return exit_usage;
  }
  try {
    const RgbFrame frame = read_ppm_file(input_path);
    write_pbm_file(output_path, binarize(frame, *range));
  } catch (const error& e) {
    err << "binarize: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_ok;
}

int cmd_clusters(const std::string& input_path, const std::string& connectivity,
                 std::ostream& out, std::ostream& err) {
  Connectivity conn;
  if (connectivity == "4")
    conn = Connectivity::four;
  else if (connectivity == "8")
    conn = Connectivity::eight;
  else {
    err << "clusters: connectivity must be \"4\" or \"8\"\n";
    return exit_usage;
  }
  ClusterSet set;
  try {
    set = extract_clusters(read_pbm_file(input_path), conn);
  } catch (const error& e) {
    err << "clusters: " << e.what() << "\n";
    return exit_usage;
  }
  for (const Cluster& c : set.clusters) {
    const CartesianPoint cart =
        to_cartesian(c.centroid_col, c.centroid_row, set.source_height);
    out << "{\"id\":" << c.id << ",\"pixel_count\":" << c.pixel_count
        << ",\"bbox\":{\"min_col\":" << c.bbox.min_col
        << ",\"min_row\":" << c.bbox.min_row
        << ",\"max_col\":" << c.bbox.max_col
        << ",\"max_row\":" << c.bbox.max_row << "}"
        << ",\"centroid_image\":{\"col\":" << format_number(c.centroid_col)
        << ",\"row\":" << format_number(c.centroid_row) << "}"
        << ",\"centroid_cartesian\":{\"x\":" << format_number(cart.x)
        << ",\"y\":" << format_number(cart.y) << "}}\n";
  }
  out << "{\"cluster_count\":" << set.clusters.size() << "}\n";
  return exit_ok;
}

namespace {

std::vector<fs::path> expand_frame_paths(const std::vector<std::string>& args) {
  std::vector<fs::path> paths;
  for (const std::string& arg : args) {
    const fs::path p(arg);
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".pbm" || ext == ".ppm") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else {
      paths.push_back(p);
    }
  }
  return paths;
}

}  // namespace

int cmd_detect(const std::vector<std::string>& frame_paths,
               const std::string& config_path, std::ostream& out,
               std::ostream& err) {
  TrackerConfig config;
  if (!config_path.empty()) {
    try {
      config = load_config_file(config_path);
    } catch (const error& e) {
      err << "detect: " << e.what() << "\n";
      return exit_usage;
    }
  }

  std::vector<fs::path> paths;
  try {
    paths = expand_frame_paths(frame_paths);
  } catch (const fs::filesystem_error& e) {
    err << "detect: " << e.what() << "\n";
    return exit_usage;
  }
  if (paths.empty()) {
    err << "detect: no input frames\n";
    return exit_usage;
  }

  Tracker tracker(config);
  for (const fs::path& path : paths) {
    BinaryFrame frame;
    try {
      const std::vector<std::uint8_t> bytes = load_bytes(path);
      if (identify_netpbm(bytes) == NetpbmKind::pbm) {
        frame = read_pbm(bytes);
      } else {
        if (!config.color_range) {
          err << "detect: " << path.string()
              << " is RGB but the config has no color_range\n";
          return exit_usage;
        }
        frame = binarize(read_ppm(bytes), *config.color_range);
      }
    } catch (const error& e) {
      err << "detect: " << path.string() << ": " << e.what() << "\n";
      return exit_usage;
    }
    try {
      for (const GestureEvent& event : tracker.push(frame))
        out << event_to_json(event) << "\n";
    } catch (const dimension_error& e) {
      err << "detect: " << path.string() << ": " << e.what() << "\n";
      return exit_data;
    }
  }
  for (const GestureEvent& event : tracker.finish())
    out << event_to_json(event) << "\n";
  return exit_ok;
}

int cmd_synth(const std::string& scenario_path, const std::string& output_dir,
              std::ostream& out, std::ostream& err) {
  Scenario scenario;
  std::vector<BinaryFrame> frames;
  try {
    std::ifstream in(scenario_path);
    if (!in) throw error("cannot open " + scenario_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    scenario = parse_scenario(buffer.str());
    frames = generate(scenario);  // validates before anything is written
  } catch (const error& e) {
    err << "synth: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    fs::create_directories(output_dir);
    for (std::size_t i = 0; i < frames.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "frame_%04zu.pbm", i);
      write_pbm_file(fs::path(output_dir) / name, frames[i]);
    }
  } catch (const std::exception& e) {
    err << "synth: " << e.what() << "\n";
    return exit_usage;
  }

  const std::vector<GestureKind> kinds =
      expected_events(scenario, TrackerConfig{});
  std::string list = "[";
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (i > 0) list += ",";
    list += "\"" + std::string(to_string(kinds[i])) + "\"";
  }
  out << list << "]\n";
  return exit_ok;
}

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"binary-frame gesture pipeline"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string range_spec;
  std::string connectivity = "4";
  std::string config_path;
  std::vector<std::string> frame_args;

  CLI::App* binarize_cmd =
      app.add_subcommand("binarize", "threshold a PPM into a PBM");
  binarize_cmd->add_option("input", input, "input P6 file")->required();
  binarize_cmd
      ->add_option("range", range_spec, "rmin:rmax,gmin:gmax,bmin:bmax")
      ->required();
  binarize_cmd->add_option("output", output, "output P4 file")->required();

  CLI::App* clusters_cmd =
      app.add_subcommand("clusters", "report connected white regions");
  clusters_cmd->add_option("input", input, "input PBM file")->required();
  clusters_cmd->add_option("-c,--connectivity", connectivity,
                           "adjacency: 4 or 8 (default 4)");

  CLI::App* detect_cmd = app.add_subcommand(
      "detect", "stream frames through the gesture detector");
  detect_cmd->add_option("frames", frame_args,
                         "frame files or a directory of them")
      ->required();
  detect_cmd->add_option("--config", config_path, "JSON detector config");

  CLI::App* synth_cmd =
      app.add_subcommand("synth", "generate a labeled synthetic scenario");
  synth_cmd->add_option("scenario", input, "scenario JSON file")->required();
  synth_cmd->add_option("outdir", output, "output directory")->required();

  std::vector<const char*> argv;
  argv.push_back("gest");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  if (binarize_cmd->parsed())
    return cmd_binarize(input, range_spec, output, err);
  if (clusters_cmd->parsed()) return cmd_clusters(input, connectivity, out, err);
  if (detect_cmd->parsed()) return cmd_detect(frame_args, config_path, out, err);
  if (synth_cmd->parsed()) return cmd_synth(input, output, out, err);
  err << app.help();
  return exit_usage;
}

}  // namespace gest::cli
