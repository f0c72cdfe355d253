#ifndef NBRW_CLI_HPP
#define NBRW_CLI_HPP

#include "nbrw/cogrowth.hpp"
#include "nbrw/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace nbrw {

enum class Command { analyze, limits, spectral, cogrowth, simulate, amenability, check };
enum class OutputFormat { json, csv };
enum class WalkKind { nbrw, srw };

std::string to_string(Command c);
Command parse_command(const std::string& text);

struct RunConfig {
    Command command = Command::analyze;
    /// Edge-list file, "-" for stdin. Exactly one of graph_file / builtin.
    std::optional<std::string> graph_file;
    std::optional<std::string> builtin;
    NumericMode numeric_mode = NumericMode::floating;
    std::optional<std::string> from;
    std::optional<std::string> to;
    int nmax = 20;
    int rmax = 10;
    int k = 8;
    std::int64_t trials = 0;
    std::optional<std::uint64_t> seed;
    std::optional<OutputFormat> format; // per-command default when unset
    std::optional<std::string> output;
    CogrowthMode cogrowth_mode = CogrowthMode::ordinary;
    bool check_functional_equation = false;
    WalkKind walk = WalkKind::nbrw;
    /// Subset enumeration cap (NBRW_BUDGET).
    std::uint64_t budget = 50'000'000;
    /// Largest ball materialised from a source in rational mode.
    std::size_t exact_ball_cap = 200'000;
};

std::string library_version();

/// Runs one command and writes its report to out. Exit codes: 0 ok,
/// 1 invariant violation, 2 input error, 3 budget exceeded.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace nbrw

#endif // NBRW_CLI_HPP
