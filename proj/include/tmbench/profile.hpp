#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tmbench/cost.hpp"
#include "tmbench/machine.hpp"

namespace tmbench {

enum class InputFamily { All, Zeros, Ones, Random };

InputFamily parse_input_family(std::string_view text);
std::string_view to_string(InputFamily f) noexcept;

// Exhaustive profiling runs |Σ|^ℓ inputs per length and is capped here.
inline constexpr std::size_t kMaxExhaustiveLength = 16;

struct ProfileOptions {
  std::size_t min_length = 1;
  std::size_t max_length = 8;
  InputFamily family = InputFamily::Zeros;
  std::size_t random_count = 16;
  std::uint64_t seed = 1;
  std::uint64_t fuel = 1'000'000;
};

struct ProfileRow {
  std::size_t length = 0;
  std::uint64_t max_counted_steps = 0;
  // First input (in generation order) reaching the maximum.
  std::string argmax_input;
  bool fuel_exhausted = false;

  friend bool operator==(const ProfileRow&, const ProfileRow&) = default;
};

// Worst-case counted steps per input length over the chosen family.
std::vector<ProfileRow> profile(const Machine& m, const CostModel& cost, const ProfileOptions& options);

// "# family=... cost=... [seed=...]" then length,max_counted_steps,argmax_input.
std::string profile_csv(const std::vector<ProfileRow>& rows, const ProfileOptions& options, const CostModel& cost);

}  // namespace tmbench
