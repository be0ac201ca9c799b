#include "p6/errors.hpp"

namespace p6 {

[[noreturn]] void rethrow_with_context(const Error& e, const std::string& prefix) {
    const std::string msg = prefix + e.what();
    const std::string& k = e.kind();
    if (k == "unknown-generator") throw UnknownGenerator(msg);
    if (k == "pole-of-homography") throw HomographyPole(msg);
    if (k == "depth-limit") throw DepthLimit(msg);
    if (k == "singular-configuration") throw SingularConfiguration(msg);
    if (k == "degenerate-map") throw DegenerateMap(msg);
    if (k == "vanishing-denominator") throw VanishingDenominator(msg);
    if (k == "malformed-document") throw MalformedDocument(msg);
    if (k == "version-mismatch") throw VersionMismatch(msg);
    if (k == "parse-error") throw ParseError(msg);
    throw Error(k, msg);
}

}  // namespace p6
