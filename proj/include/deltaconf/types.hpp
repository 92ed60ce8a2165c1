#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace deltaconf {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;
using Instant = std::int64_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

enum class PathType { Shortest, Fastest, Foremost };

const char* to_string(PathType t);
PathType path_type_from_string(const std::string& s);

enum class ErrorCategory { Usage, Io, Parse, Domain, Limit };

const char* to_string(ErrorCategory c);

/// Library-wide error type; `category()` maps to the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}
    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

/// Undirected time-stamped contact. Endpoints are stored normalized (u < v).
struct Event {
    Instant t;
    NodeId u;
    NodeId v;

    friend bool operator==(const Event&, const Event&) = default;
    friend auto operator<=>(const Event& a, const Event& b) {
        if (auto c = a.t <=> b.t; c != 0) return c;
        if (auto c = a.u <=> b.u; c != 0) return c;
        return a.v <=> b.v;
    }
};

}  // namespace deltaconf
