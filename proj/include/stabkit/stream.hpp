#pragma once

#include <cstddef>
#include <iterator>
#include <optional>
#include <vector>

namespace stabkit {

template <class Source>
class StreamIterator {
 public:
  using value_type = typename Source::value_type;
  using difference_type = std::ptrdiff_t;
  using iterator_concept = std::input_iterator_tag;

  StreamIterator() = default;
  explicit StreamIterator(Source* source) : source_(source) { current_ = source_->next(); }

  const value_type& operator*() const { return *current_; }
  const value_type* operator->() const { return &*current_; }
  StreamIterator& operator++() {
    current_ = source_->next();
    return *this;
  }
  void operator++(int) { ++*this; }

  friend bool operator==(const StreamIterator& it, std::default_sentinel_t) { return !it.current_; }

 private:
  Source* source_ = nullptr;
  std::optional<value_type> current_;
};

/// Gives a pull-style source (`std::optional<T> next()`) range-for support.
template <class Derived, class T>
class Stream {
 public:
  using value_type = T;

  StreamIterator<Derived> begin() { return StreamIterator<Derived>(static_cast<Derived*>(this)); }
  std::default_sentinel_t end() { return {}; }

  std::vector<T> collect() {
    std::vector<T> out;
    while (auto item = static_cast<Derived*>(this)->next()) out.push_back(std::move(*item));
    return out;
  }
};

}  // namespace stabkit
