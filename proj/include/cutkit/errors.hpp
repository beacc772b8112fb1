#pragma once

#include <stdexcept>
#include <string>

namespace cutkit {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two expressions live on different models or have incompatible base dimension.
struct ModelMismatch : Error {
    explicit ModelMismatch(const std::string& what) : Error("model mismatch: " + what) {}
};

// Exterior differentiation hit a half-power that would leave the function class
// (d of s^{1/2} produces s^{-1/2}).
struct SingularDifferential : Error {
    explicit SingularDifferential(const std::string& term)
        : Error("singular differential at term " + term) {}
};

// A form fed to the cutting machinery is not basic on the boundary / invariant.
struct NotBasicInvariant : Error {
    explicit NotBasicInvariant(const std::string& witness)
        : Error("form is not basic-invariant: " + witness) {}
};

// A coefficient of a would-be cut form does not descend to the disc model.
struct NonDescendingCoefficient : Error {
    explicit NonDescendingCoefficient(const std::string& term)
        : Error("coefficient does not descend: " + term) {}
};

// Pullback along the blow-down left a negative half-power after cancellation,
// i.e. the input is not the image of a smooth form.
struct ResidualNegativePower : Error {
    explicit ResidualNegativePower(const std::string& term)
        : Error("residual negative power after pullback: " + term) {}
};

// The Hadamard factor A (resp. A~) is singular along the zero section.
struct DegenerateA : Error {
    explicit DegenerateA(const std::string& where)
        : Error("Hadamard factor degenerate: " + where) {}
};

// A distribution frame wedge vanishes at a sample point.
struct DegenerateFrame : Error {
    explicit DegenerateFrame(const std::string& where)
        : Error("distribution frame degenerate: " + where) {}
};

// Radial-squared lift input depends on the fibre variable other than through
// its norm-squared.
struct NonInvariantInput : Error {
    explicit NonInvariantInput(const std::string& what)
        : Error("input is not invariant: " + what) {}
};

// Numeric evaluation requested outside the model domain.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("domain error: " + what) {}
};

struct UnknownProperty : Error {
    explicit UnknownProperty(const std::string& name) : Error("unknown property: " + name) {}
};

// Scenario file fails schema validation.
struct SchemaError : Error {
    explicit SchemaError(const std::string& what) : Error("schema error: " + what) {}
};

}  // namespace cutkit
