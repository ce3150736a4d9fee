#pragma once

#include <stdexcept>
#include <string>

namespace eis {

/// Malformed graph, labeling, or cache text. `line()` is 1-based, 0 when the
/// problem is not tied to a single line (e.g. a missing edge).
class FormatError : public std::runtime_error {
public:
    FormatError(int line, std::string message, std::string source = {})
        : std::runtime_error(format(line, message, source)),
          line_(line), message_(std::move(message)), source_(std::move(source)) {}

    int line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& source() const noexcept { return source_; }

private:
    static std::string format(int line, const std::string& message, const std::string& source)
    {
        std::string out;
        if (!source.empty())
            out = source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": ";
        else if (line > 0)
            out = "line " + std::to_string(line) + ": ";
        return out + message;
    }

    int line_;
    std::string message_;
    std::string source_;
};

/// A construction produced a labeling that failed verification.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace eis
