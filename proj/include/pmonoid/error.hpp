#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pmonoid {

enum class error_kind {
  invalid_input,
  undefined_valuation,
  not_cofinite,
  not_a_member,
  family_precondition,
  unsupported_ambient,
  would_go_negative,
  enumeration_limit,
};

inline std::string_view to_string(error_kind k) {
  switch (k) {
    case error_kind::invalid_input: return "invalid-input";
    case error_kind::undefined_valuation: return "undefined-valuation";
    case error_kind::not_cofinite: return "not-cofinite";
    case error_kind::not_a_member: return "not-a-member";
    case error_kind::family_precondition: return "family-precondition";
    case error_kind::unsupported_ambient: return "unsupported-ambient";
    case error_kind::would_go_negative: return "would-go-negative";
    case error_kind::enumeration_limit: return "enumeration-limit";
  }
  return "unknown";
}

/// Every domain failure in the library is reported through this type; the
/// kind is what callers (and the CLI exit-code mapping) switch on.
class monoid_error : public std::runtime_error {
 public:
  monoid_error(error_kind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

}  // namespace pmonoid
