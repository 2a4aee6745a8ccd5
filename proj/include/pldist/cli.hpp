#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pldist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The uniform stream behind `sample --seed S`: a 64-bit LCG
///   state <- 6364136223846793005 * state + 1442695040888963407 (mod 2^64),
/// starting from state = S, emitting (state >> 11) * 2^-53 after each step.
std::vector<double> seeded_uniforms(std::uint64_t seed, std::size_t count);

}  // namespace pldist::cli
