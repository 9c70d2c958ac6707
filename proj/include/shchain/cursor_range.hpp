#pragma once

#include <cstddef>
#include <iterator>
#include <type_traits>
#include <utility>

namespace shchain {

/// Adapts a cursor (valid() / get() / next()) to a single-pass range so that
/// streams can be consumed with range-for.
template <class Cursor>
class CursorRange {
 public:
  using value_type = std::remove_cvref_t<decltype(std::declval<const Cursor&>().get())>;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = CursorRange::value_type;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;

    iterator() = default;
    explicit iterator(Cursor* c) : cursor_(c) {}

    reference operator*() const { return cursor_->get(); }
    pointer operator->() const { return &cursor_->get(); }
    iterator& operator++() {
      cursor_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.cursor_->valid();
    }

   private:
    Cursor* cursor_ = nullptr;
  };

  explicit CursorRange(Cursor cursor) : cursor_(std::move(cursor)) {}

  iterator begin() { return iterator(&cursor_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Cursor cursor_;
};

}  // namespace shchain
