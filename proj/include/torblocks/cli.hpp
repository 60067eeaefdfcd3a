#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torblocks/json_io.hpp"

namespace torblocks::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;

/// Names accepted as the first positional argument.
const std::vector<std::string>& command_names();

/// Runs one command on an already parsed input document. The result is the
/// bare result object, with a "diagnostics" array added only when non-empty.
/// `positional` is the optional second positional argument (a Lie type for
/// gamma and j0). Throws ValidationError / InternalError.
json_io::Json execute(const std::string& command, const std::optional<std::string>& positional,
                      const json_io::Json& input, unsigned threads);

/// Human-readable rendering of a result document.
std::string render_text(const json_io::Json& doc, bool color);

/// Full command-line entry point. `args` excludes the program name. Input is
/// read from `in` unless --input is given; output goes to `out` unless
/// --output is given. Errors are written to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        bool out_is_terminal = false);

/// The schema description printed by the `schemas` command.
const json_io::Json& schemas();

}  // namespace torblocks::cli
