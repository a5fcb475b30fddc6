#pragma once

// Line-oriented instance files:
//
//   dpgraph 1
//   params i=<int> j=<int>
//   vertices <n>
//   cap <v> <c1> <c2>        (optional, default (i, j))
//   edge <u> <v> [P|T]       (signs all-or-none)
//
// '#' starts a comment; blank lines are ignored.

#include <dpcolor/model.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dpc {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

struct ParsedInstance {
    WeightedInstance instance;
    std::optional<CoverSigning> signing;
};

ParsedInstance parse_instance(std::string_view text);

/// Canonical form: sorted edges, every capacity explicit. parse_instance of
/// the result reproduces the input.
std::string serialize_instance(const WeightedInstance &instance,
                               const std::optional<CoverSigning> &signing = std::nullopt);

ParsedInstance read_instance_file(const std::string &path);
void write_instance_file(const std::string &path, const WeightedInstance &instance,
                         const std::optional<CoverSigning> &signing = std::nullopt);

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string instance_digest(const WeightedInstance &instance,
                            const std::optional<CoverSigning> &signing = std::nullopt);

} // namespace dpc
