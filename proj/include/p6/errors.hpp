#pragma once

#include <stdexcept>
#include <string>

namespace p6 {

// Every failure the library raises derives from Error and carries a stable
// kebab-case kind, which the CLI prints verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define P6_ERROR(Name, tag)                                                    \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(tag, what) {}           \
    };

P6_ERROR(UnknownGenerator, "unknown-generator")
P6_ERROR(HomographyPole, "pole-of-homography")
P6_ERROR(DepthLimit, "depth-limit")
P6_ERROR(SingularConfiguration, "singular-configuration")
P6_ERROR(DegenerateMap, "degenerate-map")
P6_ERROR(VanishingDenominator, "vanishing-denominator")
P6_ERROR(MalformedDocument, "malformed-document")
P6_ERROR(VersionMismatch, "version-mismatch")
P6_ERROR(ParseError, "parse-error")

#undef P6_ERROR

class DirectionUnavailable : public Error {
public:
    DirectionUnavailable(const std::string& token, const std::string& suggestion)
        : Error("direction-unavailable",
                "no direct pushforward for '" + token + "'; use the word " + suggestion),
          token_(token), suggestion_(suggestion) {}
    const std::string& token() const noexcept { return token_; }
    const std::string& suggestion() const noexcept { return suggestion_; }

private:
    std::string token_;
    std::string suggestion_;
};

}  // namespace p6

namespace p6 {

// Re-raises `e` as the same typed error with `prefix` prepended to its message.
[[noreturn]] void rethrow_with_context(const Error& e, const std::string& prefix);

}  // namespace p6
