#pragma once

#include <cstdint>
#include <vector>

#include "mdssd/families.hpp"

namespace mdssd::detail {

std::uint64_t ipow(std::uint64_t base, std::uint64_t e);

/// r with q = r^2; throws InvalidArgument when m is odd.
std::uint32_t square_root_order(const Field& F);

/// Wraps points into a claim, checking the size against the length convention.
Claim make_claim(const FieldPtr& F, std::uint32_t n, SigmaKind kind, Family family, FamilyParams params,
                 std::vector<Element> points);

}  // namespace mdssd::detail
