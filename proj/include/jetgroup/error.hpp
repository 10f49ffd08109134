#pragma once

#include <stdexcept>
#include <string>

namespace jetgroup {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define JETGROUP_ERROR_CLASS(Name, code_str)                          \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what) : Error(code_str, what) {} \
    }

JETGROUP_ERROR_CLASS(DivisionByNonUnit, "division_by_non_unit");
JETGROUP_ERROR_CLASS(DimensionMismatch, "dimension_mismatch");
JETGROUP_ERROR_CLASS(DomainMismatch, "domain_mismatch");
JETGROUP_ERROR_CLASS(DegreeOutOfRange, "degree_out_of_range");
JETGROUP_ERROR_CLASS(SingularMatrix, "singular_matrix");
JETGROUP_ERROR_CLASS(PreconditionFailed, "precondition_failed");
JETGROUP_ERROR_CLASS(BadSeedDegree, "bad_seed_degree");
JETGROUP_ERROR_CLASS(NotPeriodicInput, "not_periodic_input");
JETGROUP_ERROR_CLASS(NonIntegerCoefficient, "non_integer_coefficient");
JETGROUP_ERROR_CLASS(ParseError, "parse_error");
JETGROUP_ERROR_CLASS(InternalError, "internal_error");

#undef JETGROUP_ERROR_CLASS

inline void self_check(bool ok, const std::string& what) {
    if (!ok) throw InternalError(what);
}

}  // namespace jetgroup
