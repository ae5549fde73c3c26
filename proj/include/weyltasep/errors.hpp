#ifndef WEYLTASEP_ERRORS_HPP
#define WEYLTASEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wt {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define WT_DECLARE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    };

WT_DECLARE_ERROR(InvalidKind)
WT_DECLARE_ERROR(NotSignedPerm)
WT_DECLARE_ERROR(GeneratorOutOfRange)
WT_DECLARE_ERROR(NotIrreducible)
WT_DECLARE_ERROR(NotStochastic)
WT_DECLARE_ERROR(InvalidMap)
WT_DECLARE_ERROR(InvalidCounts)
WT_DECLARE_ERROR(InvalidParameter)
WT_DECLARE_ERROR(InvalidConfig)
WT_DECLARE_ERROR(ZeroParameter)
WT_DECLARE_ERROR(RangeError)
WT_DECLARE_ERROR(NotImplemented)
WT_DECLARE_ERROR(NonGenericPoint)
WT_DECLARE_ERROR(UnsupportedRange)

#undef WT_DECLARE_ERROR

} // namespace wt

#endif
