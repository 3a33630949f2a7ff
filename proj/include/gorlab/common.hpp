#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gorlab {

inline constexpr const char* kSchemaVersion = "gorlab/1";

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file or monomial/element string.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line = 0, std::size_t col = 0)
      : error(format(what, line, col)), line_(line), col_(col) {}
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t col) {
    if (line == 0) return what;
    std::string s = "line " + std::to_string(line);
    if (col != 0) s += ", col " + std::to_string(col);
    return s + ": " + what;
  }
  std::size_t line_, col_;
};

/// An enumeration or search exceeded its configured cap.  Callers must
/// surface this loudly; it is never converted into a silent "unknown".
class capacity_error : public error {
 public:
  capacity_error(const std::string& stage, unsigned long long size, unsigned long long cap)
      : error("capacity exceeded in " + stage + ": size " + std::to_string(size) +
              " > cap " + std::to_string(cap)),
        stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Requested operation is outside the supported range (e.g. type >= 3).
class unsupported_error : public error {
 public:
  using error::error;
};

/// A mathematical invariant that must hold was violated; always a bug.
class internal_error : public error {
 public:
  using error::error;
};

#define GORLAB_CHECK(cond, msg)                       \
  do {                                                \
    if (!(cond)) throw ::gorlab::internal_error(msg); \
  } while (0)

/// splitmix64 step; used to derive independent sub-seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ mix64(tag));
}

}  // namespace gorlab
