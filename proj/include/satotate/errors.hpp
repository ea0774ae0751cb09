#ifndef SATOTATE_ERRORS_HPP
#define SATOTATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace satotate {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SATOTATE_DEFINE_ERROR(Name)                                           \
    struct Name : Error {                                                      \
        using Error::Error;                                                    \
    }

// generic parameter/regime violations
SATOTATE_DEFINE_ERROR(DomainError);
SATOTATE_DEFINE_ERROR(RangeError);
SATOTATE_DEFINE_ERROR(RangeExceeded);
SATOTATE_DEFINE_ERROR(ModeRangeError);
SATOTATE_DEFINE_ERROR(EmptyRange);
SATOTATE_DEFINE_ERROR(DegreeOutOfRange);
SATOTATE_DEFINE_ERROR(HypothesisError);

// form / conductor gating
SATOTATE_DEFINE_ERROR(FormGateError);
SATOTATE_DEFINE_ERROR(UnsupportedForm);
SATOTATE_DEFINE_ERROR(InvalidReduction);

// angle generation
SATOTATE_DEFINE_ERROR(WeilViolation);
SATOTATE_DEFINE_ERROR(BadReduction);
SATOTATE_DEFINE_ERROR(AmbiguousOrder);
SATOTATE_DEFINE_ERROR(NonMonotonePrimes);
SATOTATE_DEFINE_ERROR(MissingCoefficient);
SATOTATE_DEFINE_ERROR(RamifiedUnsupported);

// extremal polynomials
SATOTATE_DEFINE_ERROR(ConstructionFailure);

#undef SATOTATE_DEFINE_ERROR

// Input parse failure that knows which line it came from.
struct ParseError : Error {
    long line = 0;
    ParseError(const std::string& what_, long line_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    explicit ParseError(const std::string& what_) : Error(what_) {}
};

} // namespace satotate

#endif
