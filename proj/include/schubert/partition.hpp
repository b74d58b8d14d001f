#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Indexes Schubert classes; |lambda| is the codimension.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// lambda_i with zero-based i; zero past the last part.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  int size() const noexcept;

  /// Componentwise containment: mu is inside *this.
  bool contains(const Partition& mu) const noexcept;

  /// Comma-separated parts; the empty partition prints as "0".
  std::string to_string() const;

  /// Accepts "4,3,1", the compact digit-per-part form "431", "0" and "".
  /// A single part of 10 or more needs a trailing comma ("12,").
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// The k x (n-k) box that bounds Schubert indices on Gr(k, n).
struct Rectangle {
  int rows;
  int cols;

  Rectangle(int rows, int cols);
  int area() const noexcept { return rows * cols; }
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

inline int size(const Partition& lambda) noexcept { return lambda.size(); }

bool fits(const Partition& lambda, const Rectangle& rect) noexcept;

/// mu_i = cols - lambda_{rows+1-i}. Throws std::invalid_argument if lambda
/// does not fit.
Partition complement(const Partition& lambda, const Rectangle& rect);

/// All partitions inside rect, optionally restricted to one size. Ordered
/// by size, then lexicographically descending.
std::vector<Partition> partitions_in(const Rectangle& rect, std::optional<int> of_size = std::nullopt);

/// Descending lexicographic order within a degree, degrees ascending.
bool report_order(const Partition& a, const Partition& b) noexcept;

}  // namespace schubert

template <>
struct std::hash<schubert::Partition> {
  std::size_t operator()(const schubert::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int part : p.parts()) {
      h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
