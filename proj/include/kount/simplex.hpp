#pragma once

// Simplex: a finite nonempty set of positive integer vertex labels, stored
// sorted.  The ordering used everywhere (and by the matrix constructors) is
// ascending cardinality, then lexicographic on the sorted label lists.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kount {

class Simplex {
 public:
  Simplex() = delete;

  // Accepts labels in any order, deduplicates (set semantics).
  explicit Simplex(std::vector<int> labels) : v_(std::move(labels)) {
    if (v_.empty()) throw std::invalid_argument("simplex must be nonempty");
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    if (v_.front() < 1) throw std::invalid_argument("vertex labels must be positive integers");
  }

  Simplex(std::initializer_list<int> labels) : Simplex(std::vector<int>(labels)) {}

  std::size_t card() const { return v_.size(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  const std::vector<int>& vertices() const { return v_; }
  int max_label() const { return v_.back(); }

  bool contains_vertex(int u) const { return std::binary_search(v_.begin(), v_.end(), u); }

  // x.subset_of(y)  <=>  x ⊆ y
  bool subset_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }

  std::size_t intersection_size(const Simplex& other) const {
    std::size_t count = 0;
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++count;
        ++a;
        ++b;
      }
    }
    return count;
  }

  Simplex union_with(const Simplex& other) const {
    std::vector<int> merged;
    merged.reserve(v_.size() + other.v_.size());
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                   std::back_inserter(merged));
    return Simplex(std::move(merged));
  }

  Simplex shifted(int offset) const {
    std::vector<int> moved(v_);
    for (int& u : moved) u += offset;
    return Simplex(std::move(moved));
  }

  bool operator==(const Simplex& other) const { return v_ == other.v_; }

  // Canonical order: cardinality first, then numeric lexicographic.
  std::strong_ordering operator<=>(const Simplex& other) const {
    if (auto c = v_.size() <=> other.v_.size(); c != 0) return c;
    return v_ <=> other.v_;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v_[i]);
    }
    out += "}";
    return out;
  }

 private:
  std::vector<int> v_;
};

}  // namespace kount
