#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace alliance {

using Vertex = int;

/**
 * A subset of the vertex ids 0..universe-1 of some graph, stored as a packed
 * bitset. Iteration yields members in increasing id order.
 */
class VertexSet
{
public:
  using Word = std::uint64_t;
  static constexpr int word_bits = 64;

  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0)
  {
  }

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe)
  {
    for (auto v : members)
      insert(v);
  }

  template <typename Range>
  static auto from_range(std::size_t universe, const Range & members) -> VertexSet
  {
    VertexSet s(universe);
    for (auto v : members)
      s.insert(static_cast<Vertex>(v));
    return s;
  }

  static auto full(std::size_t universe) -> VertexSet
  {
    VertexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
      s.insert(static_cast<Vertex>(i));
    return s;
  }

  auto universe() const -> std::size_t { return universe_; }

  auto contains(Vertex v) const -> bool
  {
    check(v);
    return (words_[v / word_bits] >> (v % word_bits)) & 1u;
  }

  auto insert(Vertex v) -> void
  {
    check(v);
    words_[v / word_bits] |= Word{1} << (v % word_bits);
  }

  auto erase(Vertex v) -> void
  {
    check(v);
    words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
  }

  auto clear() -> void { std::fill(words_.begin(), words_.end(), 0); }

  auto size() const -> int
  {
    int c = 0;
    for (auto w : words_)
      c += std::popcount(w);
    return c;
  }

  auto empty() const -> bool
  {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Lowest member, or -1 when empty.
  auto first() const -> Vertex
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i])
        return static_cast<Vertex>(i * word_bits + std::countr_zero(words_[i]));
    return -1;
  }

  /// Lowest member strictly greater than v, or -1.
  auto next(Vertex v) const -> Vertex
  {
    auto pos = static_cast<std::size_t>(v) + 1;
    if (pos >= universe_)
      return -1;
    auto i = pos / word_bits;
    auto w = words_[i] & (~Word{0} << (pos % word_bits));
    while (true) {
      if (w)
        return static_cast<Vertex>(i * word_bits + std::countr_zero(w));
      if (++i == words_.size())
        return -1;
      w = words_[i];
    }
  }

  auto intersection_size(const VertexSet & other) const -> int
  {
    same_universe(other);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & other.words_[i]);
    return c;
  }

  auto intersects(const VertexSet & other) const -> bool
  {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i])
        return true;
    return false;
  }

  auto is_subset_of(const VertexSet & other) const -> bool
  {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  auto operator&=(const VertexSet & other) -> VertexSet &
  {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= other.words_[i];
    return *this;
  }

  auto operator|=(const VertexSet & other) -> VertexSet &
  {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= other.words_[i];
    return *this;
  }

  /// Set difference.
  auto operator-=(const VertexSet & other) -> VertexSet &
  {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= ~other.words_[i];
    return *this;
  }

  friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
  friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
  friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

  friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool = default;

  auto complement() const -> VertexSet { return full(universe_) - *this; }

  auto to_vector() const -> std::vector<Vertex>
  {
    std::vector<Vertex> out;
    for (auto v : *this)
      out.push_back(v);
    return out;
  }

  class const_iterator
  {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex *;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet * set, Vertex at) : set_(set), at_(at) {}

    auto operator*() const -> Vertex { return at_; }
    auto operator++() -> const_iterator &
    {
      at_ = set_->next(at_);
      return *this;
    }
    auto operator++(int) -> const_iterator
    {
      auto old = *this;
      ++*this;
      return old;
    }
    friend auto operator==(const const_iterator & a, const const_iterator & b) -> bool
    {
      return a.at_ == b.at_;
    }

  private:
    const VertexSet * set_ = nullptr;
    Vertex at_ = -1;
  };

  auto begin() const -> const_iterator { return {this, first()}; }
  auto end() const -> const_iterator { return {this, -1}; }

private:
  auto check(Vertex v) const -> void
  {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
      throw std::out_of_range("vertex id " + std::to_string(v) + " outside 0.." +
                              std::to_string(universe_) + ")");
  }

  auto same_universe(const VertexSet & other) const -> void
  {
    if (other.universe_ != universe_)
      throw std::invalid_argument("vertex sets over different universes");
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/**
 * Order on vertex sets by their sorted member sequences (shorter prefix first).
 * For sets of equal size this is decided by the lowest element of the
 * symmetric difference: the set containing it is smaller.
 */
inline auto lex_less(const VertexSet & a, const VertexSet & b) -> bool
{
  return std::ranges::lexicographical_compare(a, b);
}

} // namespace alliance
