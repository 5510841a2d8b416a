#pragma once

#include <iosfwd>

namespace homsys {

// Quick built-in cross-check of the exact engines against brute-force
// oracles at tiny scale. Returns 0 on success, 1 on any failure.
int run_selftest(std::ostream& out);

}  // namespace homsys
