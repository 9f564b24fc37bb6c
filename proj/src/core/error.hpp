#pragma once

#include <stdexcept>
#include <string>

namespace dominor {

// Error codes shared with the C ABI (see include/dominor.h).
enum class Errc : int {
  kOk = 0,
  kNonSquare = 1,
  kDivisionByZero = 2,
  kDisjointDiamonds = 3,
  kAnchorMismatch = 4,
  kInvalidParams = 5,
  kGenericityViolation = 6,
  kCapExceeded = 7,
  kBadPair = 8,
  kBadSpec = 9,
  kUnnormalizableSpec = 10,
  kBadOrder = 11,
  kBadShape = 12,
  kBadCyclicOrder = 13,
  kBadBipartition = 14,
  kSingularInterior = 15,
  kSizeCapExceeded = 16,
  kParseError = 17,
  kInternal = 18,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dominor
