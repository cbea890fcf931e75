#include "zf/vertex_set.hpp"

#include "zf/error.hpp"

#include <string>

namespace zf {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidEdge: return "InvalidEdge";
  case ErrorCode::SelfLoop: return "SelfLoop";
  case ErrorCode::InvalidVertex: return "InvalidVertex";
  case ErrorCode::EmptyGraph: return "EmptyGraph";
  case ErrorCode::DuplicateVertex: return "DuplicateVertex";
  case ErrorCode::InvalidParams: return "InvalidParams";
  case ErrorCode::InvalidForceAtStep: return "InvalidForceAtStep";
  case ErrorCode::DuplicateTarget: return "DuplicateTarget";
  case ErrorCode::IncompleteChronology: return "IncompleteChronology";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

InvalidForceAtStep::InvalidForceAtStep(std::size_t step, std::size_t source,
                                       std::size_t target,
                                       const std::string& reason)
    : Error(ErrorCode::InvalidForceAtStep,
            "invalid force " + std::to_string(source) + "->" +
                std::to_string(target) + " at step " + std::to_string(step) +
                ": " + reason),
      step_(step), source_(source), target_(target) {}

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  s.clear_tail();
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, Word mask) {
  if (universe > kWordBits) {
    throw Error(ErrorCode::TooLarge, "from_mask requires universe <= 64");
  }
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.clear_tail();
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool VertexSet::contains(Vertex v) const {
  check_vertex(v);
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  check_vertex(v);
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check_vertex(v);
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s(*this);
  for (auto& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet::Word VertexSet::to_mask() const {
  if (universe_ > kWordBits) {
    throw Error(ErrorCode::TooLarge, "to_mask requires universe <= 64");
  }
  return words_.empty() ? 0 : words_[0];
}

void VertexSet::check_vertex(Vertex v) const {
  if (v >= universe_) {
    throw Error(ErrorCode::InvalidVertex,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(universe_));
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw Error(ErrorCode::InvalidVertex, "vertex sets over different universes");
  }
}

void VertexSet::clear_tail() noexcept {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

} // namespace zf
