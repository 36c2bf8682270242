#ifndef FBSHARE_ERRORS_HPP
#define FBSHARE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fbshare {

// Base for all domain errors. name() is the stable identifier the CLI
// prints on stderr; what() is "<name>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define FBSHARE_DEFINE_ERROR(Type)                                      \
    class Type : public Error {                                         \
    public:                                                             \
        explicit Type(const std::string& detail) : Error(#Type, detail) {} \
    }

FBSHARE_DEFINE_ERROR(NonUnitCoefficient);
FBSHARE_DEFINE_ERROR(RaggedBank);
FBSHARE_DEFINE_ERROR(EmptyBank);
FBSHARE_DEFINE_ERROR(TooManyFiltersInGroup);
FBSHARE_DEFINE_ERROR(BadFilterIndex);
FBSHARE_DEFINE_ERROR(BadGroupCount);
FBSHARE_DEFINE_ERROR(PlanMismatch);
FBSHARE_DEFINE_ERROR(AccumulatorOverflowRisk);
FBSHARE_DEFINE_ERROR(ShapeMismatch);
FBSHARE_DEFINE_ERROR(Overflow);
FBSHARE_DEFINE_ERROR(BadFactor);
FBSHARE_DEFINE_ERROR(BadThreshold);
FBSHARE_DEFINE_ERROR(BadRatio);
FBSHARE_DEFINE_ERROR(WriteFailure);
FBSHARE_DEFINE_ERROR(ParseError);
FBSHARE_DEFINE_ERROR(InvalidArgument);

#undef FBSHARE_DEFINE_ERROR

} // namespace fbshare

#endif
