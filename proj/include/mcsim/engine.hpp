#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mcsim/sim_time.hpp"

namespace mcsim {

class Engine;

/// Anything that can receive scheduled events. `tag` and `arg` are
/// component-defined; the engine never interprets them.
class Component {
 public:
  virtual ~Component() = default;
  virtual void on_event(std::uint32_t tag, std::uint64_t arg) = 0;
};

struct Event {
  SimTime fire_time = 0;
  std::uint64_t sequence = 0;  // insertion order, breaks equal-time ties
  Component* target = nullptr;
  std::uint32_t tag = 0;
  std::uint64_t arg = 0;
};

struct SimStats {
  std::uint64_t events_fired = 0;
  SimTime final_time = 0;
};

using EventHandle = std::uint64_t;

/// Seeded deterministic stream: splitmix64 over (seed, component name).
/// Components derive their own streams so adding one component never
/// reshuffles another's randomness.
class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Single-threaded discrete-event engine on the shared picosecond timeline.
/// Equal-time events dequeue in strict insertion order.
class Engine {
 public:
  explicit Engine(std::uint64_t seed = 1) : seed_(seed) {}

  SimTime now() const { return now_; }
  std::uint64_t seed() const { return seed_; }

  EventHandle schedule(SimTime fire_time, Component* target, std::uint32_t tag = 0,
                       std::uint64_t arg = 0) {
    if (fire_time < now_)
      throw std::logic_error("Engine::schedule: event in the past (t=" +
                             std::to_string(fire_time) + " < now=" + std::to_string(now_) + ")");
    Event ev{fire_time, next_seq_++, target, tag, arg};
    queue_.push(ev);
    return ev.sequence;
  }

  void cancel(EventHandle h) { cancelled_.insert(h); }

  /// Process every event with fire_time <= deadline. Returns early on an
  /// empty queue. Current time advances to the last event processed.
  SimStats run_until(SimTime deadline) {
    std::uint64_t fired = 0;
    while (!queue_.empty() && queue_.top().fire_time <= deadline) {
      Event ev = queue_.top();
      queue_.pop();
      if (!cancelled_.empty()) {
        auto it = cancelled_.find(ev.sequence);
        if (it != cancelled_.end()) {
          cancelled_.erase(it);
          continue;
        }
      }
      now_ = ev.fire_time;  // monotone: heap order guarantees it
      ++fired;
      ev.target->on_event(ev.tag, ev.arg);
    }
    if (queue_.empty() && now_ < deadline) {
      // nothing left before the deadline; time stays at the last event
    }
    total_fired_ += fired;
    return SimStats{fired, now_};
  }

  /// Drain the queue completely (quiesce).
  SimStats run_all() { return run_until(~0ull); }

  bool empty() const { return queue_.empty(); }
  std::uint64_t total_fired() const { return total_fired_; }

  /// Deterministic per-component random stream.
  Rng stream(std::string_view component_name) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : component_name) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return Rng(seed_ ^ h);
  }

 private:
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
      return a.sequence > b.sequence;
    }
  };

  SimTime now_ = 0;
  std::uint64_t seed_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t total_fired_ = 0;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::unordered_set<EventHandle> cancelled_;
};

}  // namespace mcsim
