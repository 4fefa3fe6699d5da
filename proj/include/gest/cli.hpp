#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gest/frame.hpp"
#include "gest/motion.hpp"

namespace gest::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;  // bad flags, malformed files, IO errors
inline constexpr int exit_data = 3;   // inconsistent frame dimensions

// Flat JSON config with keys named after the TrackerConfig fields; every key
// optional, defaults as in TrackerConfig. Throws gest::error on unknown keys
// or bad values.
TrackerConfig load_config_file(const std::filesystem::path& path);

// "rmin:rmax,gmin:gmax,bmin:bmax", each bound 0-255, min <= max.
std::optional<ColorRange> parse_range_spec(const std::string& spec);

// Up to six fractional digits, trailing zeros trimmed.
std::string format_number(double value);

// One JSON object per event, fixed key order, no trailing newline.
std::string event_to_json(const GestureEvent& event);

int cmd_binarize(const std::string& input_path, const std::string& range_spec,
                 const std::string& output_path, std::ostream& err);
int cmd_clusters(const std::string& input_path, const std::string& connectivity,
                 std::ostream& out, std::ostream& err);
int cmd_detect(const std::vector<std::string>& frame_paths,
               const std::string& config_path, std::ostream& out,
               std::ostream& err);
int cmd_synth(const std::string& scenario_path, const std::string& output_dir,
              std::ostream& out, std::ostream& err);

// Dispatch over the subcommands; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace gest::cli
