#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ruled/enumerate.hpp"
#include "ruled/formvec.hpp"

namespace ruled::cli {

enum ExitCode : int { Ok = 0, DomainRejection = 1, UsageOrIo = 2, InternalInconsistency = 3 };

/// Parses "lf,lb;d1,...,dk" (also "lf,lb;" and "lf,lb" for k = 0). Scalars
/// may be integers, fractions p/q or finite decimals, all read exactly.
/// Throws std::invalid_argument.
BlowupVector parse_vector_literal(std::string_view text, BundleType bundle = BundleType::Trivial, int genus = 1);

BundleType parse_bundle(std::string_view text);

nlohmann::ordered_json report_to_json(const CountReport& r);

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ruled::cli
