#pragma once

#include <filesystem>

#include "gcrop/cli/run_config.hpp"

namespace gcrop::cli {

// Subcommand entry points. Each validates nothing beyond what it needs at
// runtime (config validation happens in main before any work), writes its
// machine-readable outputs under config.out_dir, logs progress to stderr
// and returns a process exit code.

int cmd_demo_crops(const RunConfig& config);
int cmd_stats(const RunConfig& config);
int cmd_sweep(const RunConfig& config);
int cmd_pretrain(const RunConfig& config);

// encoder_path empty means "evaluate an untrained encoder" (the
// no-pretraining baseline).
int cmd_linear_eval(const RunConfig& config,
                    const std::filesystem::path& encoder_path);

}  // namespace gcrop::cli
