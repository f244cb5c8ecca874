#pragma once

// Command-line front end. run() does the work and never touches std::cout,
// so tests can capture output; main_entry() adds argument parsing.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace minorlab {

enum class Command { seq, build, minors, equimodular, factorcheck, identify, solve, verify_paper };
enum class OutputFormat { csv, json };
/// auto picks a structural engine (closed form, Hessenberg) when the spec
/// allows and falls back to single-pass elimination.
enum class EngineChoice { oracle, automatic };

struct RunConfig {
    Command command = Command::verify_paper;
    /// --spec, --specs or --values-from.
    std::vector<std::filesystem::path> inputs;
    /// Count of terms/minors (seq, minors, solve) or the largest index
    /// (equimodular --upto, factorcheck --n). Defaults per command when unset.
    std::optional<std::size_t> bound;
    OutputFormat format = OutputFormat::csv;
    EngineChoice engine = EngineChoice::oracle;
    /// Radicand for the scalar flags below.
    std::int64_t d = 0;
    std::string a = "0", b = "1", r = "1", s = "1", c = "0";
    std::optional<std::string> suite;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failed = 1;
inline constexpr int error = 2;
} // namespace exit_code

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and calls run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace minorlab
