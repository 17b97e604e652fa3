#ifndef QPP_COMMON_HPP
#define QPP_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpp {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

// Largest supported modulus. Residues stay below 2^32, so any product of two
// reduced values fits in a u64 and chained products go through mulmod.
inline constexpr u64 max_modulus = (u64{1} << 32) - 1;

enum class errc {
  invalid_input,
  no_inverse,       // arithmetic inverse does not exist; detail() carries the gcd
  no_solution,      // linear congruence unsolvable; detail() carries gcd(a, N)
  not_permutation,
  no_quadratic_pp,  // prime modulus != 2 admits no quadratic permutation polynomial
  resource_limit,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid-input";
    case errc::no_inverse: return "no-inverse";
    case errc::no_solution: return "no-solution";
    case errc::not_permutation: return "not-a-pp";
    case errc::no_quadratic_pp: return "no-quadratic-pp";
    case errc::resource_limit: return "resource-limit";
    case errc::io_error: return "io-error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg, u64 detail = 0)
      : std::runtime_error(msg), code_(code), detail_(detail) {}

  errc code() const { return code_; }
  u64 detail() const { return detail_; }

 private:
  errc code_;
  u64 detail_;
};

}  // namespace qpp

#endif  // QPP_COMMON_HPP
