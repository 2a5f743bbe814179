#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "aspecthier/discourse.hpp"
#include "aspecthier/tagger.hpp"

namespace aspecthier {

// Rule-based EDU segmenter used when no pre-parsed trees are available.
// Boundaries are placed after sentence terminators (. ! ?) and before a
// discourse connective, provided the connective does not open the current
// segment and is followed by at least two tokens. EDUs partition the text:
// no characters are dropped except the whitespace between EDUs.
class Segmenter {
 public:
  Segmenter();
  Segmenter(Tagger tagger, std::set<std::string> connectives);

  // One lowercase connective per line; blank lines ignored.
  static std::set<std::string> connectives_from_file(const std::string& path);
  static const std::set<std::string>& default_connectives();

  // Throws std::invalid_argument on blank input. EDU ids start at 1.
  std::vector<Edu> segment(std::string_view text) const;

  const Tagger& tagger() const { return tagger_; }

 private:
  Tagger tagger_;
  std::set<std::string> connectives_;
};

// Right-branching fallback tree: each internal node is an Elaboration with
// the left child as nucleus and the remainder as satellite. Throws
// std::invalid_argument on an empty EDU sequence.
DiscourseTree build_naive_tree(std::vector<Edu> edus);

}  // namespace aspecthier
