#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clmd/conllu.hpp"

namespace clmd {

enum class Direction { Up, Down };

// Sequence of relation labels along a tree path. Each edge is labelled with
// the relation of its child token. `directions` is either empty (direction
// not tracked) or parallel to `labels`.
struct PathType {
  std::vector<std::string> labels;
  std::vector<Direction> directions;

  std::size_t length() const { return labels.size(); }
  bool single_edge() const { return labels.size() == 1; }
  bool has_directions() const { return !directions.empty(); }

  // "acl:relcl+nsubj"; with directions every label carries an arrow suffix.
  std::string str() const;
  PathType stripped() const;
  PathType reversed() const;

  auto operator<=>(const PathType &) const = default;
};

class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Path from `from` to `to` through their lowest common ancestor. The
// artificial root is never traversed, so endpoints in different head-0
// fragments raise NoPathError.
PathType dependency_path(const DepTree &tree, TokenId from, TokenId to, bool with_direction = false);

// Human-readable form of a rendered path, cut after `max_edges` labels.
std::string display_path(std::string_view rendered, std::size_t max_edges = 8);

}  // namespace clmd
