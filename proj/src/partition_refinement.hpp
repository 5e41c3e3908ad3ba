#pragma once

// Linear-time LBFS partition refinement over an ordered sequence of vertex
// classes. Each class is a doubly linked list kept in ascending vertex order,
// so the lowest id of the first class is available in O(1).

#include <cstdint>
#include <span>
#include <vector>

#include "meccount/graph.hpp"

namespace meccount::detail {

class LbfsRefiner {
 public:
  static constexpr std::int32_t none = -1;

  /// `initial` lists the starting classes in sequence order; every vertex of
  /// the graph must appear in exactly one of them. Empty classes are skipped.
  LbfsRefiner(const UndirectedGraph& g, std::span<const VertexSet> initial)
      : g_(g),
        cls_(g.vertex_count(), none),
        prev_(g.vertex_count(), none),
        next_(g.vertex_count(), none),
        visited_(g.vertex_count(), 0) {
    for (const auto& members : initial) {
      if (members.empty()) continue;
      const std::int32_t c = new_class_at_end();
      for (VertexId v : members) append(c, v);
    }
  }

  bool done() const noexcept { return first_ == none; }

  /// First nonempty class in the sequence.
  std::int32_t front() const noexcept { return first_; }

  /// Lowest vertex of the front class, the next one visit_front() takes.
  VertexId front_min() const noexcept {
    return static_cast<VertexId>(classes_[first_].head);
  }

  /// Members of a class in ascending order.
  template <typename F>
  void for_each_member(std::int32_t c, F&& f) const {
    for (std::int32_t v = classes_[c].head; v != none; v = next_[v]) {
      f(static_cast<VertexId>(v));
    }
  }

  /// Removes and returns the lowest vertex of the front class, then splits
  /// every class into (neighbours, non-neighbours) of that vertex.
  VertexId visit_front() {
    const std::int32_t c = first_;
    const auto v = static_cast<VertexId>(classes_[c].head);
    unlink_vertex(v);
    visited_[v] = 1;
    if (classes_[c].size == 0) unlink_class(c);
    refine(v);
    return v;
  }

  bool visited(VertexId v) const { return visited_[v] != 0; }

 private:
  struct ClassRec {
    std::int32_t head = none;
    std::int32_t tail = none;
    std::int32_t size = 0;
    std::int32_t prev = none;
    std::int32_t next = none;
    std::uint32_t stamp = 0;
    std::int32_t split = none;
  };

  std::int32_t new_class_at_end() {
    const auto c = static_cast<std::int32_t>(classes_.size());
    classes_.emplace_back();
    classes_[c].prev = last_;
    if (last_ != none) {
      classes_[last_].next = c;
    } else {
      first_ = c;
    }
    last_ = c;
    return c;
  }

  std::int32_t new_class_before(std::int32_t at) {
    const auto c = static_cast<std::int32_t>(classes_.size());
    classes_.emplace_back();
    const std::int32_t p = classes_[at].prev;
    classes_[c].prev = p;
    classes_[c].next = at;
    classes_[at].prev = c;
    if (p != none) {
      classes_[p].next = c;
    } else {
      first_ = c;
    }
    return c;
  }

  void append(std::int32_t c, VertexId v) {
    auto& rec = classes_[c];
    cls_[v] = c;
    prev_[v] = rec.tail;
    next_[v] = none;
    if (rec.tail != none) {
      next_[rec.tail] = static_cast<std::int32_t>(v);
    } else {
      rec.head = static_cast<std::int32_t>(v);
    }
    rec.tail = static_cast<std::int32_t>(v);
    ++rec.size;
  }

  void unlink_vertex(VertexId v) {
    auto& rec = classes_[cls_[v]];
    if (prev_[v] != none) {
      next_[prev_[v]] = next_[v];
    } else {
      rec.head = next_[v];
    }
    if (next_[v] != none) {
      prev_[next_[v]] = prev_[v];
    } else {
      rec.tail = prev_[v];
    }
    --rec.size;
    prev_[v] = next_[v] = none;
  }

  void unlink_class(std::int32_t c) {
    auto& rec = classes_[c];
    if (rec.prev != none) {
      classes_[rec.prev].next = rec.next;
    } else {
      first_ = rec.next;
    }
    if (rec.next != none) {
      classes_[rec.next].prev = rec.prev;
    } else {
      last_ = rec.prev;
    }
    rec.prev = rec.next = none;
  }

  void refine(VertexId v) {
    ++stamp_;
    touched_.clear();
    for (VertexId w : g_.neighbors(v)) {
      if (visited_[w]) continue;
      const std::int32_t c = cls_[w];
      if (classes_[c].stamp != stamp_) {
        classes_[c].stamp = stamp_;
        classes_[c].split = new_class_before(c);
        classes_[classes_[c].split].stamp = stamp_;
        touched_.push_back(c);
      }
      unlink_vertex(w);
      append(classes_[c].split, w);
    }
    for (std::int32_t c : touched_) {
      if (classes_[c].size == 0) unlink_class(c);
    }
  }

  const UndirectedGraph& g_;
  std::vector<ClassRec> classes_;
  std::vector<std::int32_t> cls_;
  std::vector<std::int32_t> prev_;
  std::vector<std::int32_t> next_;
  std::vector<char> visited_;
  std::vector<std::int32_t> touched_;
  std::int32_t first_ = none;
  std::int32_t last_ = none;
  std::uint32_t stamp_ = 0;
};

}  // namespace meccount::detail
