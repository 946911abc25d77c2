#ifndef QMF_CLI_HPP
#define QMF_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace qmf::cli
{

enum class Format { text, json };

struct CliConfig
{
    std::string command;
    std::optional<int> n, i, j, k, g, d;
    std::optional<std::uint64_t> p;
    std::optional<unsigned> s;
    int order = 30;
    std::optional<int> n_max;
    std::optional<int> x_trunc;
    std::string method = "partition";
    Format format = Format::text;
};

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_computation_error = 1;
inline constexpr int exit_validation_error = 2;

// Thrown by validate(); the message names the offending flag.
struct ValidationError
{
    std::string flag;
    std::string message;
};

// Checks every parameter the command needs before anything is computed.
void validate(const CliConfig &config);

// Runs a validated config, writing the report to `out` and diagnostics to
// `err`. Returns an exit status.
int run(const CliConfig &config, std::ostream &out, std::ostream &err);

// Parses argv, validates and runs.
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qmf::cli

#endif
