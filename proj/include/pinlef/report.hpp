#pragma once

// Command dispatch behind the pinlef executable. Every report is a pure
// function of the document and the options, so output is byte-stable.

#include <optional>
#include <string>
#include <string_view>

#include "pinlef/document.hpp"

namespace pinlef {

enum class Command { decide, enumerate, oracle, surface_info };
enum class KindSelection { minus, plus, both };
enum class OutputFormat { text, machine };

std::optional<Command> parse_command(std::string_view name);
std::optional<KindSelection> parse_kind(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);

struct RunResult {
    std::string output;
    int exit_code = 0;  // 0 success, 1 negative answer / disagreement, 2 input error
};

/// Exhaustive oracle refuses surfaces above this Z/2 rank.
inline constexpr std::size_t kMaxOracleRank = 20;

RunResult run(Command command, const InputDocument& doc, KindSelection kinds, OutputFormat format);

/// Parses `text` first; parse and validation failures come back with exit code 2.
RunResult run_text(Command command, std::string_view text, KindSelection kinds, OutputFormat format);

}  // namespace pinlef
