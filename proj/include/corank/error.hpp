#pragma once

#include <stdexcept>
#include <string>

namespace corank {

/// A file could not be opened or read.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Malformed input text (edge lists, manifests, config files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a whole file; throws IoError.
std::string read_file(const std::string& path);

} // namespace corank
