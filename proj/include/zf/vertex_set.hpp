#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace zf {

using Vertex = std::size_t;

/// Dense bit-indexed subset of [0, universe).
///
/// All binary operations require both operands to share a universe; mixing
/// universes throws `Error{InvalidVertex}`.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Universe must be at most 64; bit i of `mask` is vertex i.
  static VertexSet from_mask(std::size_t universe, Word mask);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept { return count() == universe_; }

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Members in increasing order.
  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (Word bits = words_[w]; bits != 0; bits &= bits - 1) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }
  /// Universe must be at most 64.
  Word to_mask() const;

private:
  void check_vertex(Vertex v) const;
  void check_universe(const VertexSet& other) const;
  void clear_tail() noexcept;

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

} // namespace zf
