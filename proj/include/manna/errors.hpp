#pragma once

#include <stdexcept>
#include <string>

namespace manna {

// Failure categories surfaced by the library. The CLI maps these onto its
// exit-code contract; everything else is an ordinary std::exception.
enum class Errc {
  Parse,
  Overflow,
  AllAgentsInactive,
  NotionInapplicable,
  PreconditionViolated,
  NoApplicableAlgorithm,
  GuaranteeViolated,
  BudgetExceeded,
  NotACycle,
  SearchExhausted,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Parse: return "PARSE_ERROR";
    case Errc::Overflow: return "OVERFLOW";
    case Errc::AllAgentsInactive: return "ALL_AGENTS_INACTIVE";
    case Errc::NotionInapplicable: return "NOTION_INAPPLICABLE";
    case Errc::PreconditionViolated: return "PRECONDITION_VIOLATED";
    case Errc::NoApplicableAlgorithm: return "NO_APPLICABLE_ALGORITHM";
    case Errc::GuaranteeViolated: return "GUARANTEE_VIOLATED";
    case Errc::BudgetExceeded: return "BUDGET_EXCEEDED";
    case Errc::NotACycle: return "NOT_A_CYCLE";
    case Errc::SearchExhausted: return "SEARCH_EXHAUSTED";
    case Errc::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace manna
