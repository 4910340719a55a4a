#ifndef QZ_ERRORS_HPP
#define QZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qz {

struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error("NonExactDivision: " + what) {}
};

struct PoleAtPoint : std::runtime_error {
    explicit PoleAtPoint(const std::string& what) : std::runtime_error("PoleAtPoint: " + what) {}
};

struct NegativeExponent : std::runtime_error {
    explicit NegativeExponent(const std::string& what) : std::runtime_error("NegativeExponent: " + what) {}
};

struct NonUnitSeries : std::runtime_error {
    explicit NonUnitSeries(const std::string& what) : std::runtime_error("NonUnitSeries: " + what) {}
};

struct DivergentSpec : std::runtime_error {
    explicit DivergentSpec(const std::string& what) : std::runtime_error("DivergentSpec: " + what) {}
};

struct InvalidComposition : std::runtime_error {
    explicit InvalidComposition(const std::string& what) : std::runtime_error("InvalidComposition: " + what) {}
};

struct NotInRectangle : std::runtime_error {
    explicit NotInRectangle(const std::string& what) : std::runtime_error("NotInRectangle: " + what) {}
};

struct FormMismatch : std::runtime_error {
    explicit FormMismatch(const std::string& what) : std::runtime_error("FormMismatch: " + what) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error("TooLarge: " + what) {}
};

struct UnsupportedField : std::runtime_error {
    explicit UnsupportedField(const std::string& what) : std::runtime_error("UnsupportedField: " + what) {}
};

struct NotTInvariant : std::runtime_error {
    explicit NotTInvariant(const std::string& what) : std::runtime_error("NotTInvariant: " + what) {}
};

struct UnknownIdentity : std::runtime_error {
    explicit UnknownIdentity(const std::string& what) : std::runtime_error("UnknownIdentity: " + what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("ConfigError: " + what) {}
};

} // namespace qz

#endif
