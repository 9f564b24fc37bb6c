#pragma once

#include <string>

#include "core/error.hpp"

namespace dominor {

// Integer offset carrying a 0+/0- flavor when the value is zero.
struct SignedOffset {
  enum class ZeroSign { kNA, kPlus, kMinus };

  int value = 0;
  ZeroSign zero_sign = ZeroSign::kNA;

  static SignedOffset of(int v) { return {v, ZeroSign::kNA}; }
  static SignedOffset zero_plus() { return {0, ZeroSign::kPlus}; }
  static SignedOffset zero_minus() { return {0, ZeroSign::kMinus}; }

  // h >= 0+ means h = 0+ or h >= 1; h <= 0- means h = 0- or h <= -1.
  bool nonneg() const { return value > 0 || (value == 0 && zero_sign == ZeroSign::kPlus); }
  bool nonpos() const { return value < 0 || (value == 0 && zero_sign == ZeroSign::kMinus); }

  std::string str() const {
    if (value == 0 && zero_sign == ZeroSign::kPlus) return "0+";
    if (value == 0 && zero_sign == ZeroSign::kMinus) return "0-";
    return std::to_string(value);
  }

  static SignedOffset parse(const std::string& s) {
    if (s == "0+") return zero_plus();
    if (s == "0-") return zero_minus();
    try {
      int v = std::stoi(s);
      if (v == 0) fail(Errc::kInvalidParams, "offset 0 needs a 0+/0- flavor");
      return of(v);
    } catch (const Error&) {
      throw;
    } catch (...) {
      fail(Errc::kParseError, "bad offset literal: " + s);
    }
  }
};

}  // namespace dominor
