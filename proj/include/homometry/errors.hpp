#pragma once

#include <stdexcept>
#include <string>

namespace homometry {

// Base class for all validation and budget failures raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Two objects built over different ring sizes were combined.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// Two partitions (or forms) with different block counts were combined.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

class EmptySetError : public Error {
public:
    using Error::Error;
};

class OverlapError : public Error {
public:
    using Error::Error;
};

class CoverageError : public Error {
public:
    using Error::Error;
};

class EmptyBlockError : public Error {
public:
    using Error::Error;
};

// An enumeration or verification request exceeds its documented size bound.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Sampling without replacement asked for more items than the population holds.
class CountExceedsPopulation : public Error {
public:
    using Error::Error;
};

}  // namespace homometry
