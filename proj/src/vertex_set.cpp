#include "csep/vertex_set.hpp"

#include <bit>

#include "csep/errors.hpp"

namespace csep {

namespace {

std::size_t word_count(int universe) { return static_cast<std::size_t>((universe + 63) / 64); }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw InputError("vertex set universe must be non-negative");
  words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(universe_) + ")");
  }
  words_[word(v)] |= std::uint64_t{1} << bit(v);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[word(v)] &= ~(std::uint64_t{1} << bit(v));
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

int VertexSet::next(int after) const {
  int v = after + 1;
  if (v >= universe_) return -1;
  std::size_t wi = static_cast<std::size_t>(word(v));
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << bit(v));
  while (true) {
    if (w != 0) return static_cast<int>(wi * 64) + std::countr_zero(w);
    if (++wi >= words_.size()) return -1;
    w = words_[wi];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw InputError("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                     std::to_string(other.universe_) + ")");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  for (; a != end() && b != other.end(); ++a, ++b) {
    if (*a != *b) return *a <=> *b;
  }
  if (a == end() && b == other.end()) return universe_ <=> other.universe_;
  return a == end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t VertexSet::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(universe_);
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) out += ',';
    out += std::to_string(v);
    first_member = false;
  }
  out += '}';
  return out;
}

}  // namespace csep
