#include "monopath/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "monopath/errors.hpp"

namespace monopath {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidInput("composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw InvalidInput("composition parts must be positive");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw InvalidInput("bad composition '" + text + "'");
    }
    parts.push_back(value);
  }
  if (!text.empty() && text.back() == ',') throw InvalidInput("bad composition '" + text + "'");
  return Composition(std::move(parts));
}

std::vector<int> Composition::sorted_letters() const {
  std::vector<int> out;
  out.reserve(n_);
  for (int i = 0; i < d(); ++i) out.insert(out.end(), parts_[i], i + 1);
  return out;
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 1) return out;
  // Bit b of mask set means a cut after position b + 1.
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (1u << b)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(),
            [](const Composition& a, const Composition& b) { return a.parts() < b.parts(); });
  return out;
}

Composition all_twos(int d) { return Composition(std::vector<int>(d, 2)); }

}  // namespace monopath
