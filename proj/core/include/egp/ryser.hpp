#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "egp/matrix.hpp"
#include "egp/modarith.hpp"

namespace egp {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown when a computation would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, std::size_t limit, std::size_t requested)
      : std::runtime_error(cap + " exceeded: limit " + std::to_string(limit) + ", requested " +
                           std::to_string(requested)),
        cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

inline constexpr std::size_t kExactPermanentCap = 30;
inline constexpr std::size_t kDefaultRyserCap = 28;

/// Dimension cap for perm_mod; EGP_RYSER_CAP overrides the default of 28.
std::size_t ryser_cap();

/// Exact permanent by Ryser's formula with Gray-code subset order.
BigInt perm_exact(const IntMatrix& m);

/// Permanent modulo m (any modulus in [2, 2^31)).
Residue perm_mod(const IntMatrix& m, std::uint64_t modulus);

}  // namespace egp
