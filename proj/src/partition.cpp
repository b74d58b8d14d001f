#include "schubert/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition has a negative part");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& mu) const noexcept {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  const bool has_comma = text.find(',') != std::string_view::npos;

  if (!has_comma) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unexpected character '") + c + "' in partition", i);
      }
      parts.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i <= text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      const std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000) throw ParseError("partition part too large", start);
        ++i;
      }
      const bool have_digits = i > start;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i == text.size()) {
        // Trailing comma allowed: "12," is the single part 12.
        if (have_digits) parts.push_back(static_cast<int>(value));
        break;
      }
      if (text[i] != ',') {
        throw ParseError(std::string("unexpected character '") + text[i] + "' in partition", i);
      }
      if (!have_digits) throw ParseError("empty part in partition", i);
      parts.push_back(static_cast<int>(value));
      ++i;
    }
  }

  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1]) {
      throw ParseError("partition parts must be weakly decreasing: " + std::string(text), 0);
    }
  }
  return Partition(std::move(parts));
}

Rectangle::Rectangle(int r, int c) : rows(r), cols(c) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("rectangle sides must be positive");
}

bool fits(const Partition& lambda, const Rectangle& rect) noexcept {
  return lambda.length() <= static_cast<std::size_t>(rect.rows) && lambda[0] <= rect.cols;
}

Partition complement(const Partition& lambda, const Rectangle& rect) {
  if (!fits(lambda, rect)) {
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the " +
                                std::to_string(rect.rows) + "x" + std::to_string(rect.cols) +
                                " rectangle");
  }
  std::vector<int> mu(rect.rows);
  for (int i = 0; i < rect.rows; ++i) {
    mu[i] = rect.cols - lambda[static_cast<std::size_t>(rect.rows - 1 - i)];
  }
  return Partition(std::move(mu));
}

namespace {

void enumerate(const Rectangle& rect, std::vector<int>& prefix, int remaining_rows, int max_part,
               std::vector<Partition>& out) {
  if (remaining_rows == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = max_part; part >= 0; --part) {
    prefix.push_back(part);
    enumerate(rect, prefix, remaining_rows - 1, part, out);
    prefix.pop_back();
  }
}

}  // namespace

bool report_order(const Partition& a, const Partition& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return b < a;
}

std::vector<Partition> partitions_in(const Rectangle& rect, std::optional<int> of_size) {
  std::vector<Partition> all;
  std::vector<int> prefix;
  enumerate(rect, prefix, rect.rows, rect.cols, all);
  if (of_size) {
    std::erase_if(all, [&](const Partition& p) { return p.size() != *of_size; });
  }
  std::sort(all.begin(), all.end(), report_order);
  return all;
}

}  // namespace schubert
