#pragma once

#include <stdexcept>
#include <string>

namespace quasiord {

// Base class for all structured errors raised by the library. `code()` is a
// stable machine-readable tag mirrored into the CLI's JSON "error" field.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define QUASIORD_ERROR(Name)                                              \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(#Name, what) {}    \
    }

QUASIORD_ERROR(NotWeierstrass);
QUASIORD_ERROR(SignatureMismatch);
QUASIORD_ERROR(ZeroPolynomial);
QUASIORD_ERROR(NotAVertex);
QUASIORD_ERROR(EmptyInput);
QUASIORD_ERROR(AmbiguousWeight);
QUASIORD_ERROR(IrrationalRoots);
QUASIORD_ERROR(NotBinomialForm);
QUASIORD_ERROR(DegenerateLattice);
QUASIORD_ERROR(ZeroWeight);
QUASIORD_ERROR(ZeroDivisorInExtension);
QUASIORD_ERROR(NoDominantTerm);
QUASIORD_ERROR(BoundTooSmall);
QUASIORD_ERROR(NotQuasiOrdinaryState);
QUASIORD_ERROR(SyntaxError);
QUASIORD_ERROR(UnknownVariable);

#undef QUASIORD_ERROR

}  // namespace quasiord
