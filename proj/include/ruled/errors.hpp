#pragma once

#include <stdexcept>
#include <string>

namespace ruled {

/// An operation was called outside its stated domain (e.g. defect with k < 2).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The vector does not lie in the standard symplectic cone, so it encodes no
/// blowup form. Callers that surface domain rejections catch this one.
class NotBlowupForm : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

}  // namespace ruled
