#pragma once

#include <cstddef>
#include <deque>

#include "bkit/sc/state.hpp"

namespace bkit::sc {

/// Ordered, freely editable list of pending state instances.
///
/// The head is the next instance the controller will activate. Only Pending
/// instances may be stored, each instance object at most once; all edits keep
/// the relative order of untouched entries. The controller alone pops from
/// the head when it transitions.
class StateQueue {
public:
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const StatePtr& at(std::size_t index) const {
    check_index(index, entries_.size());
    return entries_[index];
  }
  const StatePtr& front() const { return at(0); }

  void push_back(StatePtr inst) {
    check_insertable(inst);
    entries_.push_back(std::move(inst));
  }

  void push_front(StatePtr inst) {
    check_insertable(inst);
    entries_.push_front(std::move(inst));
  }

  /// Inserts so that the instance ends up at position index (0 = head,
  /// size() = tail).
  void insert_at(std::size_t index, StatePtr inst) {
    check_index(index, entries_.size() + 1);
    check_insertable(inst);
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(index), std::move(inst));
  }

  /// Removes and returns the instance at index; it stays Pending and may be
  /// re-enqueued.
  StatePtr remove_at(std::size_t index) {
    check_index(index, entries_.size());
    StatePtr out = std::move(entries_[index]);
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
  }

  /// Moves the entry at from to position to, shifting the others.
  void move_entry(std::size_t from, std::size_t to) {
    check_index(from, entries_.size());
    check_index(to, entries_.size());
    if (from == to) return;
    StatePtr inst = std::move(entries_[from]);
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(from));
    entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(to), std::move(inst));
  }

  /// Empties the queue. Removed instances remain Pending and reusable.
  std::size_t clear() {
    const std::size_t n = entries_.size();
    entries_.clear();
    return n;
  }

  bool contains(const State& inst) const {
    for (const auto& e : entries_)
      if (e.get() == &inst) return true;
    return false;
  }

private:
  friend class StateController;

  StatePtr pop_front() {
    StatePtr out = std::move(entries_.front());
    entries_.pop_front();
    return out;
  }

  void check_insertable(const StatePtr& inst) const {
    if (!inst) throw Error(Errc::EnqueueCompleted, "null state instance");
    if (inst->lifecycle() != Lifecycle::Pending)
      throw Error(Errc::EnqueueCompleted, "instance of state '" + inst->kind() + "' is " +
                                              std::string(to_string(inst->lifecycle())) +
                                              "; only Pending instances can be enqueued");
    if (contains(*inst))
      throw Error(Errc::DuplicateInstance, "instance of state '" + inst->kind() + "' is already queued");
  }

  static void check_index(std::size_t index, std::size_t limit) {
    if (index >= limit)
      throw Error(Errc::IndexOutOfRange,
                  "index " + std::to_string(index) + " out of range (limit " + std::to_string(limit) + ")");
  }

  std::deque<StatePtr> entries_;
};

} // namespace bkit::sc
