#pragma once

#include <string>
#include <string_view>

#include "mgnef/io.hpp"

namespace mgnef {

enum class OutputFormat
{
    Json,
    Text,
    Latex,
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/** exit_status is 0 iff every entry of payload["checks"] has pass = true. */
struct CommandResult
{
    std::string command;
    int genus = 0;
    io::json payload;
    std::string rendering;
    int exit_status = kExitOk;

    /** The payload for json, the human rendering otherwise. */
    std::string output(OutputFormat format) const;
};

CommandResult cmd_fcurves(int genus, OutputFormat format, bool raw = false);
CommandResult cmd_table(int genus, OutputFormat format);
CommandResult cmd_check(int genus, std::string_view divisor);
CommandResult cmd_certify(int genus);
CommandResult cmd_rays(int genus, Index max_dimension = DdOptions{}.max_dimension);
CommandResult cmd_pullback(Compactification model, std::string_view divisor, int genus);
CommandResult cmd_bpf(int genus, int m_max, int alpha_max, int beta_max);

/** Usage-level failure (bad genus, parse error, limits): exit 2 with {"error": ...}. */
CommandResult usage_error(std::string command, int genus, const std::string& message);

} // namespace mgnef
