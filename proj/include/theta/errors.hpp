#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace theta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidTypeError : public Error {
public:
    using Error::Error;
};

class RootNotFoundError : public Error {
public:
    using Error::Error;
};

class CapExceededError : public Error {
public:
    CapExceededError(std::string what, std::uint64_t predicted, std::uint64_t cap)
        : Error(std::move(what)), predicted_(predicted), cap_(cap) {}
    std::uint64_t predicted_order() const { return predicted_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t predicted_;
    std::uint64_t cap_;
};

// Raised when a lattice quotient is not finite.
class InfiniteQuotientError : public Error {
public:
    InfiniteQuotientError(std::string what, int free_rank)
        : Error(std::move(what)), free_rank_(free_rank) {}
    int free_rank() const { return free_rank_; }

private:
    int free_rank_;
};

class LatticeError : public Error {
public:
    using Error::Error;
};

class UnknownLabelError : public Error {
public:
    UnknownLabelError(std::string what, std::vector<std::string> available)
        : Error(std::move(what)), available_(std::move(available)) {}
    const std::vector<std::string>& available() const { return available_; }

private:
    std::vector<std::string> available_;
};

class CatalogFormatError : public Error {
public:
    using Error::Error;
};

class InvalidInvolutionError : public Error {
public:
    using Error::Error;
};

class UnclassifiedTypeError : public Error {
public:
    using Error::Error;
};

class LiftNotFoundError : public Error {
public:
    using Error::Error;
};

class UnsolvableCocharacterError : public Error {
public:
    using Error::Error;
};

class NotSimplyConnectedError : public Error {
public:
    using Error::Error;
};

class UncoveredClassError : public Error {
public:
    using Error::Error;
};

class BadPrimeError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

class ReportFormatError : public Error {
public:
    using Error::Error;
};

}  // namespace theta
