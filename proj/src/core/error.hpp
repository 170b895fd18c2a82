#ifndef SPINOSC_CORE_ERROR_HPP
#define SPINOSC_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spinosc {

// Mirrors the spinosc_status codes in the public C header.
enum class Errc : int {
    Ok = 0,
    InvalidArgument = 1,
    NonUnitHiddenQuaternion = 2,
    NotNormalized = 3,
    DegenerateSpinor = 4,
    OutOfDomain = 5,
    StepTooLarge = 6,
    NonFinite = 7,
    SingularModeBasis = 8,
    TooShort = 9,
    BadAxis = 10,
    DegenerateGeometry = 11,
    ConfigInvalid = 12,
    IoError = 13,
    Internal = 14,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace spinosc

#endif
