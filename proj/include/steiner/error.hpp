#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

enum class Errc {
  not_admissible,
  bad_triple,
  pair_missing,
  pair_duplicated,
  same_point,
  size_mismatch,
  not_steiner,
  not_a_pasch,
  unknown_name,
  length_mismatch,
  dimension_mismatch,
  not_an_automorphism,
  search_budget_exceeded,
  unsupported,
  bad_argument,
  io_error,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace steiner
