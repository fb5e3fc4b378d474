#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "worldset.hpp"

namespace ibr {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(s.front())) return false;
  for (char c : s.substr(1))
    if (!tail(c)) return false;
  return true;
}

// Words the formula grammar claims for the constants.
inline bool is_reserved_word(std::string_view s) {
  return s == "T" || s == "F" || s == "true" || s == "false";
}

// An ordered list of distinct atom names a_0..a_{n-1}, n between 1 and 6.
// The order fixes the world-index convention used everywhere else: atom j is
// true in world i iff bit j of i is set.
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty() || atoms_.size() > kMaxAtoms)
      throw std::invalid_argument("Vocabulary: need between 1 and 6 atoms");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const std::string& a = atoms_[i];
      if (!is_identifier(a))
        throw std::invalid_argument("Vocabulary: '" + a + "' is not a valid atom name");
      if (is_reserved_word(a))
        throw std::invalid_argument("Vocabulary: '" + a + "' is a reserved constant token");
      for (std::size_t j = 0; j < i; ++j)
        if (atoms_[j] == a)
          throw std::invalid_argument("Vocabulary: duplicate atom '" + a + "'");
    }
  }

  // Parses the CLI encoding, e.g. "p,q". Surrounding blanks are ignored.
  static Vocabulary from_csv(std::string_view csv) {
    std::vector<std::string> atoms;
    std::size_t start = 0;
    while (start <= csv.size()) {
      std::size_t comma = csv.find(',', start);
      if (comma == std::string_view::npos) comma = csv.size();
      std::string_view item = csv.substr(start, comma - start);
      while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
      while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
      atoms.emplace_back(item);
      if (comma == csv.size()) break;
      start = comma + 1;
    }
    return Vocabulary(std::move(atoms));
  }

  unsigned size() const { return static_cast<unsigned>(atoms_.size()); }
  unsigned world_count() const { return ibr::world_count(size()); }
  const std::string& name(unsigned index) const { return atoms_.at(index); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  std::optional<unsigned> index_of(std::string_view name) const {
    for (unsigned i = 0; i < atoms_.size(); ++i)
      if (atoms_[i] == name) return i;
    return std::nullopt;
  }

 private:
  std::vector<std::string> atoms_;
};

}  // namespace ibr
