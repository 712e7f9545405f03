#ifndef VILAB_ERRORS_HPP
#define VILAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vilab {

// Malformed input: parse errors, dimension violations, characteristic
// mismatches. Maps to CLI exit code 3.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit. Results derived from a capped
// computation are indeterminate, never wrong. Maps to CLI exit code 2.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vilab

#endif
