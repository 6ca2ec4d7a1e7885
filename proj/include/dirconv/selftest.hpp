#pragma once

// Built-in identity suite shared by the CLI and the python bindings.
// Deterministic: fixed seeds, fixed item order.

#include <cstdint>
#include <string>
#include <vector>

#include "dirconv/monoid.hpp"
#include "dirconv/rings.hpp"

namespace dirconv {

struct SelftestItem {
    std::string name;
    bool pass;
};

// The monoid, ring, and bound parameterize the convolution-ring items;
// the series and analytic items run on their natural fixed domains.
std::vector<SelftestItem> run_selftest(const MonoidSpec& spec, const Ring& ring,
                                       std::uint64_t bound);

}  // namespace dirconv
