#pragma once

#include <stdexcept>
#include <string>

namespace quasi {

enum class Errc {
  invalid_argument,
  size_limit,
  parse,
  not_homomorphism,
  non_commuting,
  virtual_character,
  non_central,
  not_realizable,
  division_by_zero,
  table_mismatch,
  io,
  internal,
};

const char* errc_name(Errc code) noexcept;

// Every failure inside the engine is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace quasi
