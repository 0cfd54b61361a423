#include "clmd/path.hpp"

#include <algorithm>

namespace clmd {

namespace {

constexpr std::string_view kUpArrow = "↑";
constexpr std::string_view kDownArrow = "↓";

}  // namespace

std::string PathType::str() const {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += '+';
    out += labels[i];
    if (has_directions()) out += directions[i] == Direction::Up ? kUpArrow : kDownArrow;
  }
  return out;
}

PathType PathType::stripped() const {
  PathType out = *this;
  for (auto &l : out.labels) l = strip_subtype(l);
  return out;
}

PathType PathType::reversed() const {
  PathType out = *this;
  std::reverse(out.labels.begin(), out.labels.end());
  std::reverse(out.directions.begin(), out.directions.end());
  for (auto &d : out.directions) d = d == Direction::Up ? Direction::Down : Direction::Up;
  return out;
}

PathType dependency_path(const DepTree &tree, TokenId from, TokenId to, bool with_direction) {
  if (!tree.contains(from) || !tree.contains(to)) throw std::out_of_range("path endpoint outside the sentence");
  if (from == to) throw std::invalid_argument("path endpoints must differ");
  if (tree.fragment_root(from) != tree.fragment_root(to)) {
    throw NoPathError("tokens " + std::to_string(from) + " and " + std::to_string(to) +
                      " are in different root fragments");
  }

  // Climb the deeper endpoint first, then both together until they meet.
  std::vector<TokenId> up_side;    // nodes left while climbing from `from`
  std::vector<TokenId> down_side;  // nodes left while climbing from `to`
  TokenId a = from;
  TokenId b = to;
  while (tree.depth(a) > tree.depth(b)) {
    up_side.push_back(a);
    a = tree.parent(a);
  }
  while (tree.depth(b) > tree.depth(a)) {
    down_side.push_back(b);
    b = tree.parent(b);
  }
  while (a != b) {
    up_side.push_back(a);
    down_side.push_back(b);
    a = tree.parent(a);
    b = tree.parent(b);
  }

  PathType path;
  for (const auto id : up_side) {
    path.labels.push_back(tree.token(id).deprel);
    if (with_direction) path.directions.push_back(Direction::Up);
  }
  for (auto it = down_side.rbegin(); it != down_side.rend(); ++it) {
    path.labels.push_back(tree.token(*it).deprel);
    if (with_direction) path.directions.push_back(Direction::Down);
  }
  return path;
}

std::string display_path(std::string_view rendered, std::size_t max_edges) {
  std::size_t pos = 0;
  for (std::size_t seen = 0; seen < max_edges; ++seen) {
    pos = rendered.find('+', pos);
    if (pos == std::string_view::npos) return std::string(rendered);
    ++pos;
  }
  const auto extra = static_cast<std::size_t>(std::count(rendered.begin() + static_cast<std::ptrdiff_t>(pos),
                                                         rendered.end(), '+')) + 1;
  return std::string(rendered.substr(0, pos)) + "...(" + std::to_string(extra) + " more)";
}

}  // namespace clmd
