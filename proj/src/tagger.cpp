#include "aspecthier/tagger.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

#include "aspecthier/errors.hpp"
#include "aspecthier/util.hpp"

namespace aspecthier {

namespace {

bool is_ascii_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && std::ispunct(u);
}

bool is_space(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && std::isspace(u);
}

bool all_punct(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_ascii_punct(c)) return false;
  return true;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::vector<TokenSpan> tokenize_spans(std::string_view text) {
  std::vector<TokenSpan> spans;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !is_space(text[j])) ++j;
    // run [i, j): peel leading punctuation
    std::size_t k = i;
    while (k < j && is_ascii_punct(text[k])) {
      spans.push_back({k, k + 1});
      ++k;
    }
    // peel trailing punctuation
    std::size_t t = j;
    while (t > k && is_ascii_punct(text[t - 1])) --t;
    if (k < t) spans.push_back({k, t});
    for (std::size_t p = t; p < j; ++p) spans.push_back({p, p + 1});
    i = j;
  }
  return spans;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& s : tokenize_spans(text))
    out.emplace_back(text.substr(s.begin, s.end - s.begin));
  return out;
}

Tagger::Tagger() : lexicon_(default_lexicon()) {}

Tagger::Tagger(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

Tagger Tagger::from_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open lexicon " + path);
  Lexicon lex;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw InputError("line " + std::to_string(lineno) +
                       ": expected surface<TAB>TAG");
    auto tag = pos_from_string(trim(fields[1]));
    if (!tag)
      throw InputError("line " + std::to_string(lineno) + ": unknown tag " +
                       std::string(trim(fields[1])));
    lex[to_lower_ascii(trim(fields[0]))] = *tag;
  }
  return Tagger(std::move(lex));
}

PosTag Tagger::tag_word(std::string_view surface) const {
  if (all_punct(surface)) return PosTag::Punct;
  const std::string key = to_lower_ascii(surface);
  auto it = lexicon_.find(key);
  if (it != lexicon_.end()) return it->second;
  if (ends_with(key, "ness") || ends_with(key, "ment") || ends_with(key, "er"))
    return PosTag::Noun;
  if (ends_with(key, "ly")) return PosTag::Other;
  return PosTag::Other;
}

std::vector<Token> Tagger::tag(std::string_view text) const {
  if (is_blank(text)) throw std::invalid_argument("cannot tag empty text");
  std::vector<Token> tokens;
  int index = 0;
  for (const auto& span : tokenize_spans(text)) {
    std::string surface(text.substr(span.begin, span.end - span.begin));
    PosTag pos = tag_word(surface);
    tokens.push_back({std::move(surface), pos, index++});
  }
  return tokens;
}

const Tagger::Lexicon& Tagger::default_lexicon() {
  static const Lexicon lexicon = {
      // determiners
      {"the", PosTag::Det}, {"a", PosTag::Det}, {"an", PosTag::Det},
      {"this", PosTag::Det}, {"that", PosTag::Det}, {"these", PosTag::Det},
      {"those", PosTag::Det}, {"my", PosTag::Det}, {"your", PosTag::Det},
      {"his", PosTag::Det}, {"her", PosTag::Det}, {"its", PosTag::Det},
      {"our", PosTag::Det}, {"their", PosTag::Det}, {"some", PosTag::Det},
      {"any", PosTag::Det}, {"no", PosTag::Det}, {"every", PosTag::Det},
      {"each", PosTag::Det}, {"another", PosTag::Det},
      // adpositions
      {"of", PosTag::Adp}, {"in", PosTag::Adp}, {"on", PosTag::Adp},
      {"at", PosTag::Adp}, {"by", PosTag::Adp}, {"with", PosTag::Adp},
      {"for", PosTag::Adp}, {"to", PosTag::Adp}, {"from", PosTag::Adp},
      {"about", PosTag::Adp}, {"after", PosTag::Adp}, {"before", PosTag::Adp},
      {"over", PosTag::Adp}, {"under", PosTag::Adp}, {"into", PosTag::Adp},
      {"through", PosTag::Adp}, {"during", PosTag::Adp},
      {"without", PosTag::Adp}, {"between", PosTag::Adp},
      // verbs
      {"is", PosTag::Verb}, {"are", PosTag::Verb}, {"was", PosTag::Verb},
      {"were", PosTag::Verb}, {"be", PosTag::Verb}, {"been", PosTag::Verb},
      {"being", PosTag::Verb}, {"am", PosTag::Verb}, {"do", PosTag::Verb},
      {"does", PosTag::Verb}, {"did", PosTag::Verb}, {"have", PosTag::Verb},
      {"has", PosTag::Verb}, {"had", PosTag::Verb}, {"will", PosTag::Verb},
      {"would", PosTag::Verb}, {"can", PosTag::Verb}, {"could", PosTag::Verb},
      {"should", PosTag::Verb}, {"may", PosTag::Verb}, {"might", PosTag::Verb},
      {"must", PosTag::Verb}, {"works", PosTag::Verb}, {"work", PosTag::Verb},
      {"worked", PosTag::Verb}, {"working", PosTag::Verb},
      {"broke", PosTag::Verb}, {"break", PosTag::Verb},
      {"breaks", PosTag::Verb}, {"broken", PosTag::Verb},
      {"like", PosTag::Verb}, {"likes", PosTag::Verb}, {"liked", PosTag::Verb},
      {"love", PosTag::Verb}, {"loves", PosTag::Verb}, {"loved", PosTag::Verb},
      {"hate", PosTag::Verb}, {"hates", PosTag::Verb},
      {"bought", PosTag::Verb}, {"buy", PosTag::Verb}, {"buys", PosTag::Verb},
      {"get", PosTag::Verb}, {"got", PosTag::Verb}, {"gets", PosTag::Verb},
      {"use", PosTag::Verb}, {"used", PosTag::Verb}, {"uses", PosTag::Verb},
      {"using", PosTag::Verb}, {"last", PosTag::Verb}, {"lasts", PosTag::Verb},
      {"lasted", PosTag::Verb}, {"charges", PosTag::Verb},
      {"charged", PosTag::Verb}, {"died", PosTag::Verb}, {"dies", PosTag::Verb},
      {"die", PosTag::Verb}, {"arrived", PosTag::Verb},
      {"arrive", PosTag::Verb}, {"looks", PosTag::Verb}, {"look", PosTag::Verb},
      {"feels", PosTag::Verb}, {"feel", PosTag::Verb}, {"fits", PosTag::Verb},
      {"fit", PosTag::Verb}, {"seems", PosTag::Verb}, {"seem", PosTag::Verb},
      {"came", PosTag::Verb}, {"come", PosTag::Verb},
      {"stopped", PosTag::Verb}, {"stop", PosTag::Verb},
      {"returned", PosTag::Verb}, {"return", PosTag::Verb},
      {"dropped", PosTag::Verb}, {"drop", PosTag::Verb},
      {"keeps", PosTag::Verb}, {"keep", PosTag::Verb}, {"holds", PosTag::Verb},
      {"hold", PosTag::Verb}, {"says", PosTag::Verb}, {"said", PosTag::Verb},
      {"recommend", PosTag::Verb}, {"recommends", PosTag::Verb},
      {"cracked", PosTag::Verb}, {"takes", PosTag::Verb},
      {"sounds", PosTag::Verb}, {"scratches", PosTag::Verb},
      // adjectives
      {"great", PosTag::Adj}, {"good", PosTag::Adj}, {"bad", PosTag::Adj},
      {"nice", PosTag::Adj}, {"cheap", PosTag::Adj},
      {"expensive", PosTag::Adj}, {"new", PosTag::Adj}, {"old", PosTag::Adj},
      {"long", PosTag::Adj}, {"short", PosTag::Adj}, {"big", PosTag::Adj},
      {"small", PosTag::Adj}, {"solid", PosTag::Adj}, {"sturdy", PosTag::Adj},
      {"flimsy", PosTag::Adj}, {"sharp", PosTag::Adj}, {"clear", PosTag::Adj},
      {"loud", PosTag::Adj}, {"quiet", PosTag::Adj}, {"fast", PosTag::Adj},
      {"slow", PosTag::Adj}, {"easy", PosTag::Adj}, {"hard", PosTag::Adj},
      {"happy", PosTag::Adj}, {"poor", PosTag::Adj},
      {"excellent", PosTag::Adj}, {"terrible", PosTag::Adj},
      {"awesome", PosTag::Adj}, {"perfect", PosTag::Adj},
      {"defective", PosTag::Adj}, {"sleek", PosTag::Adj},
      {"bright", PosTag::Adj}, {"low", PosTag::Adj}, {"high", PosTag::Adj},
      {"fine", PosTag::Adj}, {"fair", PosTag::Adj}, {"dead", PosTag::Adj},
      // nouns (phone domain plus common review vocabulary)
      {"phone", PosTag::Noun}, {"phones", PosTag::Noun},
      {"telephone", PosTag::Noun}, {"smartphone", PosTag::Noun},
      {"case", PosTag::Noun}, {"cases", PosTag::Noun},
      {"battery", PosTag::Noun}, {"batteries", PosTag::Noun},
      {"charger", PosTag::Noun}, {"chargers", PosTag::Noun},
      {"charge", PosTag::Noun}, {"charging", PosTag::Noun},
      {"screen", PosTag::Noun}, {"display", PosTag::Noun},
      {"headset", PosTag::Noun}, {"headsets", PosTag::Noun},
      {"bluetooth", PosTag::Noun}, {"price", PosTag::Noun},
      {"prices", PosTag::Noun}, {"life", PosTag::Noun}, {"wall", PosTag::Noun},
      {"car", PosTag::Noun}, {"camera", PosTag::Noun},
      {"quality", PosTag::Noun}, {"sound", PosTag::Noun},
      {"button", PosTag::Noun}, {"buttons", PosTag::Noun},
      {"keyboard", PosTag::Noun}, {"keypad", PosTag::Noun},
      {"cable", PosTag::Noun}, {"cables", PosTag::Noun}, {"usb", PosTag::Noun},
      {"speaker", PosTag::Noun}, {"speakers", PosTag::Noun},
      {"signal", PosTag::Noun}, {"reception", PosTag::Noun},
      {"volume", PosTag::Noun}, {"protector", PosTag::Noun},
      {"cover", PosTag::Noun}, {"color", PosTag::Noun},
      {"product", PosTag::Noun}, {"device", PosTag::Noun},
      {"item", PosTag::Noun}, {"money", PosTag::Noun}, {"deal", PosTag::Noun},
      {"shipping", PosTag::Noun}, {"seller", PosTag::Noun},
      {"antenna", PosTag::Noun}, {"receiver", PosTag::Noun},
      {"microphone", PosTag::Noun}, {"earbud", PosTag::Noun},
      {"earbuds", PosTag::Noun}, {"port", PosTag::Noun}, {"plug", PosTag::Noun},
      {"adapter", PosTag::Noun}, {"holster", PosTag::Noun},
      {"clip", PosTag::Noun}, {"belt", PosTag::Noun}, {"glass", PosTag::Noun},
      {"plastic", PosTag::Noun}, {"metal", PosTag::Noun},
      {"rubber", PosTag::Noun}, {"leather", PosTag::Noun},
      {"design", PosTag::Noun}, {"size", PosTag::Noun},
      {"weight", PosTag::Noun}, {"feature", PosTag::Noun},
      {"features", PosTag::Noun}, {"problem", PosTag::Noun},
      {"problems", PosTag::Noun}, {"issue", PosTag::Noun},
      {"issues", PosTag::Noun}, {"model", PosTag::Noun},
      {"brand", PosTag::Noun}, {"warranty", PosTag::Noun},
      {"box", PosTag::Noun}, {"value", PosTag::Noun},
      {"delivery", PosTag::Noun}, {"service", PosTag::Noun},
      {"customer", PosTag::Noun}, {"star", PosTag::Noun},
      {"stars", PosTag::Noun}, {"review", PosTag::Noun},
      // proper nouns
      {"samsung", PosTag::Propn}, {"apple", PosTag::Propn},
      {"iphone", PosTag::Propn}, {"motorola", PosTag::Propn},
      {"nokia", PosTag::Propn}, {"android", PosTag::Propn},
      {"amazon", PosTag::Propn}, {"verizon", PosTag::Propn},
      // function words that must never look like nouns
      {"not", PosTag::Other}, {"very", PosTag::Other}, {"too", PosTag::Other},
      {"so", PosTag::Other}, {"well", PosTag::Other}, {"really", PosTag::Other},
      {"just", PosTag::Other}, {"still", PosTag::Other},
      {"only", PosTag::Other}, {"also", PosTag::Other},
      {"however", PosTag::Other}, {"but", PosTag::Other},
      {"because", PosTag::Other}, {"although", PosTag::Other},
      {"while", PosTag::Other}, {"since", PosTag::Other},
      {"and", PosTag::Other}, {"or", PosTag::Other}, {"if", PosTag::Other},
      {"when", PosTag::Other}, {"then", PosTag::Other}, {"than", PosTag::Other},
      {"as", PosTag::Other}, {"it", PosTag::Other}, {"i", PosTag::Other},
      {"you", PosTag::Other}, {"he", PosTag::Other}, {"she", PosTag::Other},
      {"we", PosTag::Other}, {"they", PosTag::Other}, {"them", PosTag::Other},
      {"him", PosTag::Other}, {"me", PosTag::Other}, {"us", PosTag::Other},
      {"there", PosTag::Other}, {"here", PosTag::Other}, {"now", PosTag::Other},
      {"never", PosTag::Other}, {"always", PosTag::Other},
      {"often", PosTag::Other}, {"again", PosTag::Other},
      {"once", PosTag::Other}, {"even", PosTag::Other}, {"much", PosTag::Other},
      {"many", PosTag::Other}, {"more", PosTag::Other}, {"most", PosTag::Other},
      {"less", PosTag::Other}, {"few", PosTag::Other}, {"quite", PosTag::Other},
      {"pretty", PosTag::Other}, {"one", PosTag::Other}, {"two", PosTag::Other},
      {"twice", PosTag::Other}, {"yes", PosTag::Other}, {"yet", PosTag::Other},
      {"almost", PosTag::Other},
  };
  return lexicon;
}

}  // namespace aspecthier
