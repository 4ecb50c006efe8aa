#pragma once

#include <stdexcept>
#include <string>

namespace tsecon {

// Error category. The CLI maps categories onto exit codes:
// Config -> 2, Data -> 3, Numeric -> 4.
enum class ErrorKind { Config, Data, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define TSECON_ERROR(Name, Kind)                                                        \
    class Name : public Error {                                                         \
    public:                                                                             \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}        \
    }

// Data / input problems.
TSECON_ERROR(DomainError, Data);
TSECON_ERROR(LengthError, Data);
TSECON_ERROR(ShapeError, Data);
TSECON_ERROR(AlignmentError, Data);
TSECON_ERROR(DuplicateNameError, Data);
TSECON_ERROR(IndexError, Data);
TSECON_ERROR(RangeError, Data);
TSECON_ERROR(InvalidSpecError, Data);
TSECON_ERROR(ParseError, Data);
TSECON_ERROR(GapError, Data);
TSECON_ERROR(MissingColumnError, Data);

// Numerical failures.
TSECON_ERROR(RankDeficientError, Numeric);
TSECON_ERROR(NotPositiveDefiniteError, Numeric);
TSECON_ERROR(ConvergenceError, Numeric);
TSECON_ERROR(DegenerateSeriesError, Numeric);
TSECON_ERROR(SingularCovarianceError, Numeric);

// Configuration / environment.
TSECON_ERROR(ConfigError, Config);
TSECON_ERROR(IoError, Config);

#undef TSECON_ERROR

}  // namespace tsecon
