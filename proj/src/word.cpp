#include "monopath/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "monopath/errors.hpp"

namespace monopath {

std::vector<int> parse_letters(const std::string& text, bool allow_digit_run) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw InvalidInput("empty word");
  std::vector<int> out;
  if (s.find(',') == std::string::npos && s.size() > 1) {
    if (!allow_digit_run) throw InvalidInput("digit-run words need d <= 9: '" + text + "'");
    for (char c : s) {
      if (c < '1' || c > '9') throw InvalidInput("bad letter in '" + text + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidInput("bad letter in '" + text + "'");
    }
    out.push_back(value);
  }
  if (s.back() == ',') throw InvalidInput("bad word '" + text + "'");
  return out;
}

LambdaWord::LambdaWord(std::vector<int> letters, Composition lambda)
    : letters_(std::move(letters)), lambda_(std::move(lambda)) {
  if (static_cast<int>(letters_.size()) != lambda_.n()) {
    throw InvalidInput("word length differs from n = " + std::to_string(lambda_.n()));
  }
  std::vector<int> counts(lambda_.d(), 0);
  for (int letter : letters_) {
    if (letter < 1 || letter > lambda_.d()) {
      throw InvalidInput("letter " + std::to_string(letter) + " outside 1.." +
                         std::to_string(lambda_.d()));
    }
    ++counts[letter - 1];
  }
  if (counts != lambda_.parts()) {
    throw InvalidInput("letter multiplicities do not match lambda = " + lambda_.to_string());
  }
}

LambdaWord LambdaWord::parse(const std::string& text, const Composition& lambda) {
  return LambdaWord(parse_letters(text, lambda.d() <= 9), lambda);
}

LambdaWord LambdaWord::parse(const std::string& text) {
  auto letters = parse_letters(text, true);
  const int d = *std::max_element(letters.begin(), letters.end());
  if (d < 1) throw InvalidInput("bad word '" + text + "'");
  std::vector<int> counts(d, 0);
  for (int letter : letters) {
    if (letter < 1) throw InvalidInput("bad letter in '" + text + "'");
    ++counts[letter - 1];
  }
  return LambdaWord(std::move(letters), Composition(std::move(counts)));
}

std::vector<int> LambdaWord::occurrence_indices() const {
  std::vector<int> seen(d(), 0);
  std::vector<int> out(letters_.size());
  for (std::size_t k = 0; k < letters_.size(); ++k) out[k] = seen[letters_[k] - 1]++;
  return out;
}

std::vector<int> LambdaWord::first_positions() const {
  std::vector<int> out(d(), -1);
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (out[letters_[k] - 1] < 0) out[letters_[k] - 1] = static_cast<int>(k);
  }
  return out;
}

std::string LambdaWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out;
}

std::string LambdaWord::compact() const {
  std::string out;
  for (int letter : letters_) out += static_cast<char>('0' + letter);
  return out;
}

LatticePath::LatticePath(std::vector<std::vector<int>> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidInput("empty lattice path");
  const std::size_t d = points_.front().size();
  if (std::any_of(points_.front().begin(), points_.front().end(), [](int x) { return x != 0; })) {
    throw InvalidInput("lattice path must start at the origin");
  }
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (points_[k].size() != d) throw InvalidInput("lattice path dimension mismatch");
    int moved = 0;
    for (std::size_t i = 0; i < d; ++i) {
      const int step = points_[k][i] - points_[k - 1][i];
      if (step == 1) {
        ++moved;
      } else if (step != 0) {
        moved = 2;
      }
    }
    if (moved != 1) throw InvalidInput("lattice path steps must be unit coordinate vectors");
  }
}

LatticePath word_to_path(const LambdaWord& w) {
  std::vector<std::vector<int>> points;
  points.reserve(w.n() + 1);
  std::vector<int> v(w.d(), 0);
  points.push_back(v);
  for (int letter : w.letters()) {
    ++v[letter - 1];
    points.push_back(v);
  }
  return LatticePath(std::move(points));
}

}  // namespace monopath
