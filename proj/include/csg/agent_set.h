// Copyright 2026 The csg Authors
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

#ifndef CSG_AGENT_SET_H_
#define CSG_AGENT_SET_H_

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <vector>

namespace csg {

using Agent = int;

// Agent sets are single machine words; every algorithm here is exponential in
// the agent count long before this limit matters.
inline constexpr int kMaxAgents = 63;

// A subset of {0..n-1}, stored as a bitmask. Coalitions, search grounds and
// exclusion masks all use this one type.
class AgentSet {
 public:
  using Mask = std::uint64_t;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Agent;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Agent;

    constexpr Iterator() = default;
    constexpr explicit Iterator(Mask rest) : rest_(rest) {}

    constexpr Agent operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr AgentSet() = default;
  constexpr explicit AgentSet(Mask bits) : bits_(bits) {}

  static constexpr AgentSet single(Agent a) {
    assert(a >= 0 && a < kMaxAgents);
    return AgentSet(Mask{1} << a);
  }
  // {0..n-1}
  static constexpr AgentSet first(int n) {
    assert(n >= 0 && n <= kMaxAgents);
    return AgentSet((Mask{1} << n) - 1);
  }
  static AgentSet of(std::initializer_list<Agent> agents) {
    AgentSet s;
    for (Agent a : agents) s = s.with(a);
    return s;
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Agent a) const { return (bits_ >> a) & 1U; }
  constexpr bool contains(AgentSet other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  constexpr bool intersects(AgentSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr bool subset_of(AgentSet other) const {
    return other.contains(*this);
  }
  // Lowest agent index; the set must be nonempty.
  constexpr Agent lowest() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  constexpr AgentSet with(Agent a) const { return *this | single(a); }
  constexpr AgentSet without(Agent a) const { return *this - single(a); }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Agent> agents() const { return {begin(), end()}; }

  friend constexpr AgentSet operator|(AgentSet a, AgentSet b) {
    return AgentSet(a.bits_ | b.bits_);
  }
  friend constexpr AgentSet operator&(AgentSet a, AgentSet b) {
    return AgentSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr AgentSet operator-(AgentSet a, AgentSet b) {
    return AgentSet(a.bits_ & ~b.bits_);
  }
  constexpr AgentSet& operator|=(AgentSet o) { return *this = *this | o; }
  constexpr AgentSet& operator&=(AgentSet o) { return *this = *this & o; }
  constexpr AgentSet& operator-=(AgentSet o) { return *this = *this - o; }

  friend constexpr bool operator==(AgentSet, AgentSet) = default;
  friend constexpr auto operator<=>(AgentSet a, AgentSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
};

// Prints as {0,2,5}.
std::ostream& operator<<(std::ostream& os, AgentSet s);

}  // namespace csg

template <>
struct std::hash<csg::AgentSet> {
  std::size_t operator()(csg::AgentSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // CSG_AGENT_SET_H_
