#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gest/frame.hpp"

namespace gest {

enum class NetpbmKind { ppm, pbm };

// First two bytes decide the container: P6 -> ppm, P1/P4 -> pbm.
NetpbmKind identify_netpbm(std::span<const std::uint8_t> bytes);

// P6 binary, maxval 255 only.
RgbFrame read_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_ppm(const RgbFrame& frame);

// Reads P1 (plain) and P4 (raw); always writes P4. PBM stores 1 = black,
// which is inverted at this boundary so 1 means white everywhere else.
BinaryFrame read_pbm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pbm(const BinaryFrame& frame);

std::vector<std::uint8_t> load_bytes(const std::filesystem::path& path);
void save_bytes(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

RgbFrame read_ppm_file(const std::filesystem::path& path);
void write_ppm_file(const std::filesystem::path& path, const RgbFrame& frame);
BinaryFrame read_pbm_file(const std::filesystem::path& path);
void write_pbm_file(const std::filesystem::path& path, const BinaryFrame& frame);

}  // namespace gest
