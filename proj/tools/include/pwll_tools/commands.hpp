#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pwll/config.hpp"

namespace pwll::commands {

// Runs every (acquisition, seed) pair of the config and writes
// <acquisition>_seed<seed>.csv per run plus manifest.json into out_dir.
// With snapshots on, per-point state at a few iterations goes to
// <acquisition>_seed<seed>_iter<n>.csv. Progress lines go to log.
void run(const RunConfig& config, const std::string& out_dir, std::ostream& log);

// Output directory: the flag when given, else $PWLL_OUT_DIR, else "out".
std::string output_directory(const std::string& flag);

}  // namespace pwll::commands
