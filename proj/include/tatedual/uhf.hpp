#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tatedual/bigint.hpp"
#include "tatedual/padic.hpp"
#include "tatedual/supernatural.hpp"

namespace tatedual {

/// Dimension data k_1, k_2, ... of a UHF inductive limit. A nonempty tail
/// repeats forever, so only eventually periodic sequences are representable.
struct UHFDescriptor {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> tail;

  /// `sizes=2,4,8`, `sizes=;tail=2`, `tail=(2,3)`.
  static UHFDescriptor parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const UHFDescriptor&, const UHFDescriptor&) = default;
};

SupernaturalNumber supernatural_from_sizes(const UHFDescriptor& m);

/// The n with K_0(M_k) = Q(n).
SupernaturalNumber k0_of(const UHFDescriptor& m);

struct TateDualUHF {
  UHFDescriptor descriptor;
  SupernaturalNumber k0;
  BigInt scale;
  std::optional<std::string> label;
};

/// The UHF algebra whose K_0 group is Gamma_q: tail (p), invariant p^inf.
/// The prime-to-p scale is reported but does not change the stable
/// isomorphism class. p = 2 is labelled "CAR".
TateDualUHF uhf_from_tate(const PAdicInt& q);

}  // namespace tatedual
