#pragma once

#include "cubinv/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace cubinv {

inline constexpr const char* kToolName = "cubinv";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Command { Catalog, Reduce, Verify, Union };
enum class OutputFormat { Text, Json, Latex };

const char* to_string(Command c);
const char* to_string(OutputFormat f);
std::optional<OutputFormat> parse_format(std::string_view text);

struct RunConfig {
    Command command = Command::Reduce;
    /// "theta", "alpha-prime", "gamma" or "custom:PATH". Verify treats an
    /// empty value as all three fibers.
    std::string fiber;
    SelectionPolicy policy = SelectionPolicy::Paper;
    Bounds bounds;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    bool all_bidegrees = false;
    /// Published relations file; the built-in copy when empty.
    std::string relations_file;
};

/// A fiber argument resolved to its substitution and keep list.
struct ResolvedFiber {
    Substitution substitution;
    std::optional<Fiber> builtin;
    std::optional<std::vector<std::string>> keep;
};

/// Throws UsageError for an unknown fiber or an unreadable custom file.
ResolvedFiber resolve_fiber(const std::string& spec);

/// Exit status: 0 success, 1 verification failure, 2 usage error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The JSON report `reduce --format json` prints.
std::string reduce_json(const RunConfig& config);

}  // namespace cubinv
