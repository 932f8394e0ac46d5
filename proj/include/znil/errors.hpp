#pragma once

#include <stdexcept>
#include <string>

namespace znil {

// An enumeration or brute-force scan would exceed the configured bound.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The brute-force cohomology found im(f_{p^n}) not contained in
// ker(f_{p^{n+1}}): the pair of maps is not part of a cochain complex at
// that position. Signals an indexing bug in the caller.
class ComplexViolationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A set that must be a subgroup failed the closure check.
class StructuralViolationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace znil
