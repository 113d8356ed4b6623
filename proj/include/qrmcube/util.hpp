// Copyright qrmcube contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace qrmcube {

/// Heavy enumeration kernels come in two flavors: a plain serial
/// reference and an OpenMP version. Results are bit-identical; tests
/// compare them and the benchmark times them.
enum class Exec { serial, parallel };

struct ExecPolicy {
  Exec mode = Exec::parallel;
  int threads = 0;  // 0 = OpenMP default
};

inline constexpr ExecPolicy serial_policy{Exec::serial, 0};
inline constexpr ExecPolicy parallel_policy{Exec::parallel, 0};

/// SplitMix64 step: advances the state and returns one 64-bit block.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Counter-based stream: stream `index` under `seed` is the SplitMix64
/// sequence started from seed XOR (index+1)*golden-ratio, so any stream
/// can be opened independently of the others (sharding does not change
/// the draws).
inline std::uint64_t counter_stream_state(std::uint64_t seed,
                                          std::uint64_t index) {
  std::uint64_t s = seed ^ ((index + 1) * 0x9E3779B97F4A7C15ull);
  (void)splitmix64_next(s);
  return s;
}

/// Uniform double in [0,1) from one 64-bit block (53 mantissa bits).
inline double u64_to_unit(std::uint64_t x) {
  return double(x >> 11) * 0x1.0p-53;
}

/// C(n,k) in unsigned 64-bit arithmetic; saturates at cap (returns cap
/// when the true value would be at least cap).
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

}  // namespace qrmcube
