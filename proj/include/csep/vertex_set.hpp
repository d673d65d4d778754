#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace csep {

/**
 * A subset of the vertices {0, ..., universe-1} of some graph, stored as a
 * fixed-width bitset. Ordering is lexicographic on the sorted member list,
 * which is the canonical order used for serialization and deduplication.
 */
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    int operator*() const { return current_; }
    const_iterator& operator++() {
      current_ = owner_->next(current_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return current_ == other.current_; }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* owner, int current) : owner_(owner), current_(current) {}
    const VertexSet* owner_ = nullptr;
    int current_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[word(v)] >> bit(v)) & 1U) != 0;
  }
  void insert(int v);
  void erase(int v);

  int size() const;
  bool empty() const;

  /// Smallest member, or -1.
  int first() const { return next(-1); }
  /// Smallest member strictly greater than `after`, or -1.
  int next(int after) const;

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  std::vector<int> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Members of the universe not in this set.
  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  bool operator==(const VertexSet& other) const = default;
  std::strong_ordering operator<=>(const VertexSet& other) const;

  std::size_t hash() const;
  /// "{0,3,5}"
  std::string to_string() const;

 private:
  static constexpr int word(int v) { return v >> 6; }
  static constexpr int bit(int v) { return v & 63; }
  void check_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace csep
