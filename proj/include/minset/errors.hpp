#pragma once

#include <stdexcept>
#include <string>

namespace minset {

/// Raised when input data (dataset files, tables, value sets) violates a
/// structural contract. The CLI maps this to its data-validation exit code.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace minset
