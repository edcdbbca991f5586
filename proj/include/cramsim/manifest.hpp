#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cramsim/config.hpp"

namespace cramsim {

// FNV-1a 64-bit hash of a file's bytes; hex form is what manifests record.
uint64_t fnv1a_file(const std::string& path);
std::string fnv1a_hex(uint64_t h);

// Writes <out_dir>/manifest.json: the fully resolved config plus a meta block
// (tool version, design-decision switches, wall clock, per-output checksums).
// Called once before results are produced (empty checksums) and once after.
void write_manifest(const std::string& out_dir, const RunConfig& cfg,
                    const std::string& command, double wall_clock_s,
                    const std::map<std::string, std::string>& checksums);

}  // namespace cramsim
