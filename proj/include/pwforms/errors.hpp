#pragma once

#include <stdexcept>
#include <string>

namespace pwf {

// Bad user input (malformed file, mismatched dimensions, invalid cover).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural invariant the library guarantees was found broken (d.d != 0,
// image not expressible in a basis that must span it).
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Mathematically well-formed input failing a mathematical validation
// (e.g. structure constants violating the Jacobi identity).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pwf
