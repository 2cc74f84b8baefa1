#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mcsim {

/// Global simulation time in picoseconds. A 1 ps tick lets 3.8 GHz CPU,
/// 1.2 GHz accelerator and 1.3 GHz memory-controller clocks coexist without
/// accumulating rational-arithmetic drift.
using SimTime = std::uint64_t;

constexpr SimTime kPicosPerSecond = 1'000'000'000'000ull;

struct ClockDomain {
  std::uint64_t frequency_hz = 0;
  std::string name;

  ClockDomain() = default;
  ClockDomain(std::uint64_t hz, std::string n) : frequency_hz(hz), name(std::move(n)) {
    if (hz == 0) throw std::invalid_argument("ClockDomain: frequency must be > 0");
  }
};

/// floor(cycles * 1e12 / frequency). Exact at integer multiples of the clock
/// period; overflow past 64 bits is a hard error.
inline SimTime cycles_to_time(std::uint64_t cycles, const ClockDomain& domain) {
  if (domain.frequency_hz == 0) throw std::invalid_argument("cycles_to_time: zero frequency");
  unsigned __int128 ps = static_cast<unsigned __int128>(cycles) * kPicosPerSecond;
  ps /= domain.frequency_hz;
  if (ps > static_cast<unsigned __int128>(~0ull))
    throw std::overflow_error("cycles_to_time: result exceeds 64-bit picoseconds");
  return static_cast<SimTime>(ps);
}

/// floor(t * frequency / 1e12): number of whole cycles elapsed at time t.
inline std::uint64_t time_to_cycles(SimTime t, const ClockDomain& domain) {
  unsigned __int128 c = static_cast<unsigned __int128>(t) * domain.frequency_hz;
  return static_cast<std::uint64_t>(c / kPicosPerSecond);
}

}  // namespace mcsim
