#pragma once

// Helpers for driving the installed CLI binary from tests: run a command
// line, capture stdout/stderr/exit code, and stage temporary input files.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace procutil {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline const std::filesystem::path& scratch_dir() {
    static const std::filesystem::path dir = [] {
        std::string pattern =
            (std::filesystem::temp_directory_path() / "torsupp-test-XXXXXX").string();
        if (!::mkdtemp(pattern.data()))
            throw std::runtime_error("cannot create scratch directory");
        return std::filesystem::path(pattern);
    }();
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::filesystem::path stage_file(const std::string& name,
                                        const std::string& content) {
    const std::filesystem::path path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    return path;
}

inline std::string shell_quote(const std::string& text) {
    std::string quoted = "'";
    for (const char c : text) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

inline CliResult run_cli(const std::vector<std::string>& args) {
    static int counter = 0;
    const std::filesystem::path out_path =
        scratch_dir() / ("out-" + std::to_string(++counter) + ".txt");
    const std::filesystem::path err_path =
        scratch_dir() / ("err-" + std::to_string(counter) + ".txt");

    std::string command = shell_quote(TORSUPP_CLI_PATH);
    for (const std::string& arg : args)
        command += " " + shell_quote(arg);
    command += " > " + shell_quote(out_path.string());
    command += " 2> " + shell_quote(err_path.string());

    const int status = std::system(command.c_str());
    CliResult result;
    if (status == -1)
        throw std::runtime_error("failed to launch CLI");
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

} // namespace procutil
