#pragma once

// Minimal popen wrapper for driving the CLI binary from tests.

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace tctp::testsupport {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

inline CliResult run_command(const std::string& command) {
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed for: " + command);
    CliResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline CliResult run_cli(const std::string& args, bool merge_stderr = true) {
    const std::string redirect = merge_stderr ? " 2>&1" : " 2>/dev/null";
    return run_command(std::string(TCTP_CLI_PATH) + " " + args + redirect);
}

} // namespace tctp::testsupport
