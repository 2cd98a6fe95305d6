#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gkp {

// Shared CLI flags; overrides win over config-file values.
struct CommandOptions {
    std::string out_override;
    int threads = 1;
    std::optional<std::uint64_t> seed_override;
};

// Exit codes: 0 success, 1 config error, 2 solver failure, 3 verdict
// failure, 4 hypothesis-check failure.
int cmd_solve(const std::string& config_path, const CommandOptions& opts = {});
int cmd_sweep(const std::string& config_path, const CommandOptions& opts = {});
int cmd_check(const std::string& config_path, const CommandOptions& opts = {});
int cmd_export(const std::string& field_path, const std::string& out_dir);

} // namespace gkp
