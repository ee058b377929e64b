#pragma once

#include <stdexcept>
#include <string>

namespace jointgraph {

/// Malformed file content (bad header, bad row, bad value). Carries the
/// source path and 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, long line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what),
          path_(path),
          line_(line) {}

    const std::string& path() const noexcept { return path_; }
    long line() const noexcept { return line_; }

private:
    std::string path_;
    long line_;
};

/// Filesystem-level failure: file missing, unreadable, or unwritable.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jointgraph
