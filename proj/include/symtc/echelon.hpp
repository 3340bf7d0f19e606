#pragma once

#include <map>
#include <optional>

#include "symtc/coefficient.hpp"

namespace symtc {

template <class Key>
using SparseVector = std::map<Key, Coefficient>;

/// v += k * w, dropping cancelled entries.
template <class Key>
void axpy(SparseVector<Key>& v, const Coefficient& k, const SparseVector<Key>& w) {
  if (k.is_zero()) return;
  for (const auto& [key, c] : w) {
    auto [it, inserted] = v.try_emplace(key, c * k);
    if (!inserted) {
      it->second += c * k;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

/// Incremental exact row echelon form over Q or Z2, with pivots at the smallest key of each row.
///
/// Every inserted vector may carry a `Tag` vector that undergoes the same row operations. When
/// an insertion reduces to zero, the accumulated tags record the linear dependency, which is how
/// kernels are computed.
template <class Key, class Tag = int>
class Echelon {
 public:
  struct Row {
    SparseVector<Key> data;
    SparseVector<Tag> tags;
  };

  explicit Echelon(Field field) : field_(field) {}

  Field field() const { return field_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  const std::map<Key, Row>& rows() const { return rows_; }

  /// Adds `v` to the row space. Returns true when it was independent; otherwise returns false and
  /// leaves the dependency tags in last_dependency().
  bool insert(SparseVector<Key> v, SparseVector<Tag> tags = {}) {
    reduce_leading(v, tags);
    if (v.empty()) {
      dependency_ = std::move(tags);
      return false;
    }
    const Coefficient lead = v.begin()->second;
    if (!lead.is_one()) {
      const Coefficient inv = Coefficient::one(field_) / lead;
      for (auto& [k, c] : v) c *= inv;
      for (auto& [k, c] : tags) c *= inv;
    }
    const Key pivot = v.begin()->first;
    rows_.emplace(pivot, Row{std::move(v), std::move(tags)});
    return true;
  }

  bool is_independent(SparseVector<Key> v) const {
    SparseVector<Tag> none;
    reduce_leading(v, none);
    return !v.empty();
  }

  /// Fully reduces `v`: the result has no entry at any pivot key.
  SparseVector<Key> reduce_full(SparseVector<Key> v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const Coefficient c = -it->second;
      axpy(v, c, row->second.data);
      // Row entries other than the pivot are all larger than `key`.
      it = v.upper_bound(key);
    }
    return v;
  }

  const SparseVector<Tag>& last_dependency() const { return dependency_; }

 private:
  void reduce_leading(SparseVector<Key>& v, SparseVector<Tag>& tags) const {
    while (!v.empty()) {
      auto row = rows_.find(v.begin()->first);
      if (row == rows_.end()) return;
      const Coefficient c = -v.begin()->second;
      axpy(v, c, row->second.data);
      axpy(tags, c, row->second.tags);
    }
  }

  Field field_;
  std::map<Key, Row> rows_;
  SparseVector<Tag> dependency_;
};

}  // namespace symtc
