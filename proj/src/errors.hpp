#pragma once

#include <stdexcept>
#include <string>

namespace lebmesh {

enum class errc {
  invalid_argument,
  numerical_failure,
  rank_deficient,
  nonconvergence,
  quality_failure,
  io_error,
};

/// Library error: every failure carries a category and a human-readable message.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace lebmesh
