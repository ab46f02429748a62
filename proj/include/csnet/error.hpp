#pragma once

#include <stdexcept>
#include <string>

namespace csnet {

enum class ErrorKind {
    // family / parameter problems
    UnknownFamily,
    SchemaError,
    NonNonnegativeParameter,
    MissingWitness,
    SequenceExhausted,
    NegativeWeight,
    RequiresUnitGamma,
    // shape and index problems
    IndexError,
    ShapeError,
    OutOfRange,
    NotAPermutation,
    CapExceeded,
    SizeCapExceeded,
};

const char* to_string(ErrorKind kind) noexcept;

/// True for errors caused by the parameter family rather than by the request.
bool is_family_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace csnet
