#pragma once

#include <stdexcept>
#include <string>

namespace lnde {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: bad sizes, out-of-range ids, non-bit values.
class InvalidInput : public Error {
   public:
    using Error::Error;
};

/// A party tried something the bus or the protocol forbids.
class ProtocolViolation : public Error {
   public:
    using Error::Error;
};

/// Work or memory would exceed a configured cap. `log2_required` is the
/// base-2 logarithm of the requested size (counts here are powers of two).
class ResourceLimit : public Error {
   public:
    ResourceLimit(const std::string &what, unsigned log2_required)
        : Error(what), log2_required_(log2_required) {
    }

    unsigned log2_required() const noexcept {
        return log2_required_;
    }

   private:
    unsigned log2_required_;
};

/// The simulator detected a state that the protocol algebra rules out.
class InternalConsistency : public Error {
   public:
    using Error::Error;
};

}  // namespace lnde
