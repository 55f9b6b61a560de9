#ifndef HYPERLAM_ERROR_HPP
#define HYPERLAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperlam {

enum class ErrorCode {
    RankMismatch,
    UnknownEdge,
    UnknownNode,
    BothRanked,
    ArityMismatch,
    InvalidContext,
    InvalidType,
    InvalidArgument,
    ParseError,
    UnknownLabel,
    BudgetExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace hyperlam

#endif // HYPERLAM_ERROR_HPP
