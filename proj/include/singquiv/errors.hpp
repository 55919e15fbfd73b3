#pragma once

#include <stdexcept>
#include <string>

namespace singquiv {

/// Raised for malformed or inconsistent input: unknown ids, non-composable
/// relations, syntax errors, infinite-dimensional quotients.
class InputError : public std::runtime_error {
public:
    enum class Kind { Unknown, Syntax, UnknownIdentifier, Duplicate, NotComposable, InfiniteDimensional, Mismatch };

    InputError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace singquiv
