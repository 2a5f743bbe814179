#include "aspecthier/segmentation.hpp"

#include <fstream>
#include <stdexcept>

#include "aspecthier/errors.hpp"
#include "aspecthier/util.hpp"

namespace aspecthier {

Segmenter::Segmenter() : tagger_(), connectives_(default_connectives()) {}

Segmenter::Segmenter(Tagger tagger, std::set<std::string> connectives)
    : tagger_(std::move(tagger)), connectives_(std::move(connectives)) {}

std::set<std::string> Segmenter::connectives_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open connective list " + path);
  std::set<std::string> connectives;
  std::string line;
  while (std::getline(in, line)) {
    auto word = trim(line);
    if (!word.empty()) connectives.insert(to_lower_ascii(word));
  }
  return connectives;
}

const std::set<std::string>& Segmenter::default_connectives() {
  static const std::set<std::string> connectives = {
      "but", "because", "although", "while", "since", "so", "however"};
  return connectives;
}

namespace {

bool is_sentence_terminator(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?";
}

}  // namespace

std::vector<Edu> Segmenter::segment(std::string_view text) const {
  if (is_blank(text)) throw std::invalid_argument("cannot segment empty text");

  const auto spans = tokenize_spans(text);
  const std::size_t n = spans.size();

  // Boundary before token i opens a new EDU at i.
  std::vector<std::size_t> starts;
  starts.push_back(0);
  std::size_t i = 0;
  while (i < n) {
    std::string_view surface = text.substr(spans[i].begin, spans[i].end - spans[i].begin);
    if (is_sentence_terminator(surface)) {
      std::size_t j = i;
      while (j + 1 < n) {
        std::string_view next =
            text.substr(spans[j + 1].begin, spans[j + 1].end - spans[j + 1].begin);
        if (!is_sentence_terminator(next)) break;
        ++j;
      }
      if (j + 1 < n) starts.push_back(j + 1);
      i = j + 1;
      continue;
    }
    if (i != starts.back() && n - 1 - i >= 2 &&
        connectives_.count(to_lower_ascii(surface)) > 0) {
      starts.push_back(i);
    }
    ++i;
  }

  std::vector<Edu> edus;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    std::size_t first = starts[s];
    std::size_t last = (s + 1 < starts.size() ? starts[s + 1] : n) - 1;
    Edu edu;
    edu.id = static_cast<int>(s) + 1;
    edu.text = std::string(
        text.substr(spans[first].begin, spans[last].end - spans[first].begin));
    int index = 0;
    for (std::size_t t = first; t <= last; ++t) {
      std::string surface(text.substr(spans[t].begin, spans[t].end - spans[t].begin));
      PosTag pos = tagger_.tag_word(surface);
      edu.tokens.push_back({std::move(surface), pos, index++});
    }
    edus.push_back(std::move(edu));
  }
  return edus;
}

DiscourseTree build_naive_tree(std::vector<Edu> edus) {
  if (edus.empty())
    throw std::invalid_argument("cannot build a tree from zero EDUs");

  // Fold from the right: Elaboration(N: edu_i, S: rest).
  DtNodePtr node = make_leaf(std::move(edus.back()));
  for (std::size_t i = edus.size() - 1; i-- > 0;) {
    std::vector<DtChild> children;
    children.push_back({Nuclearity::Nucleus, make_leaf(std::move(edus[i]))});
    children.push_back({Nuclearity::Satellite, std::move(node)});
    node = make_internal("Elaboration", std::move(children));
  }
  return DiscourseTree{std::move(node)};
}

}  // namespace aspecthier
