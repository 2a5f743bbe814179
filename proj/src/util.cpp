#include "aspecthier/util.hpp"

#include <unicode/unorm2.h>
#include <unicode/ustring.h>
#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <stdexcept>

#include "aspecthier/errors.hpp"

namespace aspecthier {

std::string to_lower_ascii(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    out.push_back(c);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

std::string collapse_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : trim(s)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
    } else {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::string nfc(std::string_view utf8) {
  if (utf8.empty()) return {};

  UErrorCode ec = U_ZERO_ERROR;
  const UNormalizer2* norm = unorm2_getNFCInstance(&ec);
  if (U_FAILURE(ec) || norm == nullptr)
    throw std::runtime_error("ICU NFC normalizer unavailable");

  // UTF-8 -> UTF-16, preflight for size.
  int32_t ulen = 0;
  ec = U_ZERO_ERROR;
  u_strFromUTF8(nullptr, 0, &ulen, utf8.data(), static_cast<int32_t>(utf8.size()), &ec);
  if (ec != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(ec))
    throw InputError("text is not valid UTF-8");
  std::u16string u16(static_cast<std::size_t>(ulen), u'\0');
  ec = U_ZERO_ERROR;
  u_strFromUTF8(reinterpret_cast<UChar*>(u16.data()), ulen, nullptr, utf8.data(),
                static_cast<int32_t>(utf8.size()), &ec);
  if (U_FAILURE(ec)) throw InputError("text is not valid UTF-8");

  int32_t nlen = 0;
  ec = U_ZERO_ERROR;
  nlen = unorm2_normalize(norm, reinterpret_cast<const UChar*>(u16.data()), ulen,
                          nullptr, 0, &ec);
  if (ec != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(ec))
    throw std::runtime_error("NFC normalization failed");
  std::u16string out16(static_cast<std::size_t>(nlen), u'\0');
  ec = U_ZERO_ERROR;
  unorm2_normalize(norm, reinterpret_cast<const UChar*>(u16.data()), ulen,
                   reinterpret_cast<UChar*>(out16.data()), nlen, &ec);
  if (U_FAILURE(ec)) throw std::runtime_error("NFC normalization failed");

  int32_t blen = 0;
  ec = U_ZERO_ERROR;
  u_strToUTF8(nullptr, 0, &blen, reinterpret_cast<const UChar*>(out16.data()), nlen, &ec);
  if (ec != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(ec))
    throw std::runtime_error("NFC normalization failed");
  std::string out(static_cast<std::size_t>(blen), '\0');
  ec = U_ZERO_ERROR;
  u_strToUTF8(out.data(), blen, nullptr, reinterpret_cast<const UChar*>(out16.data()),
              nlen, &ec);
  if (U_FAILURE(ec)) throw std::runtime_error("NFC normalization failed");
  return out;
}

GzLineReader::GzLineReader(const std::string& path) {
  gzFile f = gzopen(path.c_str(), "rb");
  if (f == nullptr) throw InputError("cannot open " + path);
  file_ = f;
}

GzLineReader::~GzLineReader() {
  if (file_ != nullptr) gzclose(static_cast<gzFile>(file_));
}

bool GzLineReader::next(std::string& line) {
  gzFile f = static_cast<gzFile>(file_);
  line.clear();
  char buf[4096];
  bool got_any = false;
  while (true) {
    if (gzgets(f, buf, sizeof(buf)) == nullptr) {
      int errnum = 0;
      const char* msg = gzerror(f, &errnum);
      if (errnum != Z_OK && errnum != Z_STREAM_END)
        throw InputError(std::string("decompression error: ") + msg);
      return got_any;
    }
    got_any = true;
    line.append(buf);
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
  }
}

namespace {

// Unbiased bound via rejection sampling; keeps sampling independent of the
// standard library's uniform_int_distribution internals.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t k,
                                        std::uint64_t seed) {
  if (k > population)
    throw std::invalid_argument("sample size exceeds population");
  std::vector<std::size_t> idx(population);
  for (std::size_t i = 0; i < population; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(bounded(rng, population - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace aspecthier
