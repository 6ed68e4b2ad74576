#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diskgeo {

enum class ErrorKind {
    invalid_input,
    not_geodesic_ready,
    non_manifold_at_bone,
    too_large,
    lookup,
    parse,
    internal,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid_input";
        case ErrorKind::not_geodesic_ready: return "not_geodesic_ready";
        case ErrorKind::non_manifold_at_bone: return "non_manifold_at_bone";
        case ErrorKind::too_large: return "too_large";
        case ErrorKind::lookup: return "lookup";
        case ErrorKind::parse: return "parse";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

/// Domain error carried through every module; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace diskgeo
