#include "monopath/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "monopath/arrangements.hpp"
#include "monopath/coherence.hpp"
#include "monopath/combinatorics.hpp"
#include "monopath/errors.hpp"
#include "monopath/flips.hpp"
#include "monopath/geometry.hpp"
#include "monopath/parallel.hpp"
#include "monopath/subdivisions.hpp"

namespace monopath {

bool SuiteReport::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

template <typename T>
std::string str(const T& value) {
  if constexpr (std::is_same_v<T, bool>) {
    return value ? "true" : "false";
  } else if constexpr (std::is_same_v<T, BigInt> || std::is_same_v<T, Rational>) {
    return value.get_str();
  } else if constexpr (std::is_convertible_v<T, std::string>) {
    return std::string(value);
  } else {
    return std::to_string(value);
  }
}

template <typename A, typename B>
void expect_eq(SuiteReport& r, std::string name, const A& expected, const B& actual) {
  r.checks.push_back({std::move(name), str(expected), str(actual), expected == actual});
}

void expect_true(SuiteReport& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), "true", ok ? "true" : "false: " + detail, ok});
}

void suite_counts(SuiteReport& r, const Caps& caps) {
  for (int n = 1; n <= 8; ++n) {
    int compositions = 0;
    std::string mismatches;
    for (const auto& lambda : compositions_of(n)) {
      ++compositions;
      const BigInt census(std::to_string(par::count_non_nesting(lambda, caps)));
      if (census != coherent_count_formula(lambda) || census != region_count(lambda)) {
        mismatches += "(" + lambda.to_string() + ") ";
      }
    }
    expect_true(r, "n=" + std::to_string(n) + ": census = n!/(n-d+1)! over " +
                       std::to_string(compositions) + " compositions",
                mismatches.empty() && compositions == (1 << (n - 1)), mismatches);
  }
  for (const char* text : {"2,2,2", "3,2,1"}) {
    const auto lambda = Composition::parse(text);
    expect_eq(r, std::string("regions of (") + text + ")", BigInt(30),
              BigInt(std::to_string(serial::count_non_nesting(lambda, caps))));
  }
}

void suite_coherence(SuiteReport& r, const Caps& caps) {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t words = 0, disagreements = 0;
    for (const auto& lambda : compositions_of(n)) {
      const WordCensus census = par::coherence_census(lambda, caps);
      words += census.words;
      disagreements += census.disagreements;
    }
    expect_eq(r, "n=" + std::to_string(n) + ": feasibility vs syntax over " +
                     std::to_string(words) + " words",
              std::uint64_t{0}, disagreements);
  }
  expect_eq(r, "12121 coherent", true, is_coherent_path(LambdaWord::parse("12121")).coherent);
  expect_eq(r, "12211 coherent", false, is_coherent_path(LambdaWord::parse("12211")).coherent);
}

void suite_roundtrip(SuiteReport& r, const Caps& caps) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t checked = 0;
    std::string failures;
    for (const auto& lambda : compositions_of(n)) {
      for_each_word(lambda, [&](std::span<const int> letters) {
        if (!is_non_nesting(letters, lambda.d())) return;
        const LambdaWord w({letters.begin(), letters.end()}, lambda);
        const auto coherence = is_coherent_path(w);
        ++checked;
        if (!coherence.witness || word_of_functional(*coherence.witness, lambda) != w) {
          failures += w.to_string() + " ";
        }
      }, caps);
    }
    expect_true(r, "n=" + std::to_string(n) + ": " + std::to_string(checked) + " witnesses round-trip",
                failures.empty(), failures);
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

void suite_charpoly(SuiteReport& r, const Caps& caps) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : compositions_of(n)) {
      if (lambda.d() > 3) continue;
      const Polynomial chi = char_poly_closed(lambda);
      std::string mismatches;
      int primes = 0;
      for (std::uint64_t q : primes_up_to(23)) {
        if (q <= static_cast<std::uint64_t>(n)) continue;
        ++primes;
        const BigInt counted = serial::field_count(lambda, q, caps);
        const BigInt closed = chi.evaluate(BigInt(std::to_string(q)));
        if (counted != closed) {
          mismatches += "q=" + std::to_string(q) + ":" + counted.get_str() + "!=" + closed.get_str() + " ";
        }
      }
      expect_true(r, "(" + lambda.to_string() + "): chi = " + chi.to_string() + " at " +
                         std::to_string(primes) + " primes",
                  mismatches.empty(), mismatches);
    }
  }
  expect_eq(r, "(2,1), q=5", BigInt(15),
            serial::field_count(Composition::parse("2,1"), 5, caps));
}

void suite_faces(SuiteReport& r, const Caps& caps) {
  for (int d : {2, 3}) {
    const Composition lambda = all_twos(d);
    std::map<int, BigInt> by_dimension;
    std::uint64_t partitions = for_each_proper_partition(lambda, [&](const OrderedPartition& rho) {
      const auto coherence = is_coherent_subdivision(rho);
      if (coherence.coherent) by_dimension[coherence.dimension] += 1;
    }, caps);
    BigInt euler = 0;
    std::string tag = "(" + lambda.to_string() + ") ";
    for (int k = d; k >= 1; --k) {
      const BigInt formula = catalan_face_count(d, k);
      expect_eq(r, tag + "coherent partitions of dimension " + std::to_string(k), formula,
                by_dimension[k]);
      euler += ((d - k) % 2 == 0 ? 1 : -1) * by_dimension[k];
    }
    expect_eq(r, tag + "alternating sum over " + std::to_string(partitions) + " partitions",
              BigInt(1), euler);
    int others = 0;
    for (const auto& [k, count] : by_dimension) {
      if (k < 1 || k > d) others += 1;
    }
    expect_eq(r, tag + "no faces outside 1..d", 0, others);
  }
}

void suite_swap(SuiteReport& r, const Caps& caps) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t swaps = 0;
    std::string failures;
    for (const auto& lambda : compositions_of(n)) {
      const auto zonotope = zonotope_generators(lambda);
      std::set<std::vector<Rational>> scaled;
      for (const auto& g : zonotope.pair_generators) {
        scaled.insert((zonotope.scale * g.direction).coords());
      }
      for_each_word(lambda, [&](std::span<const int> letters) {
        const LambdaWord w({letters.begin(), letters.end()}, lambda);
        const RationalVector base = path_average(w);
        for (int k = 0; k + 1 < n; ++k) {
          if (letters[k] >= letters[k + 1]) continue;
          auto swapped = w.letters();
          std::swap(swapped[k], swapped[k + 1]);
          const RationalVector diff = path_average(LambdaWord(swapped, lambda)) - base;
          ++swaps;
          if (!(diff == swap_difference_formula(w, k)) || !scaled.count(diff.coords())) {
            failures += w.to_string() + "@" + std::to_string(k) + " ";
          }
        }
      }, caps);

      // Telescoping: walk from 1..1 2..2 ... by ascending swaps, summing the
      // recorded differences along the way.
      const LambdaWord start(lambda.sorted_letters(), lambda);
      const RationalVector origin = path_average(start);
      std::map<std::vector<int>, RationalVector> reached{{start.letters(), RationalVector(lambda.d() + 1)}};
      std::vector<std::vector<int>> frontier{start.letters()};
      while (!frontier.empty()) {
        const auto letters = frontier.back();
        frontier.pop_back();
        const RationalVector sum = reached.at(letters);
        const LambdaWord w(letters, lambda);
        for (int k = 0; k + 1 < n; ++k) {
          if (letters[k] >= letters[k + 1]) continue;
          auto next = letters;
          std::swap(next[k], next[k + 1]);
          if (reached.count(next)) continue;
          reached.emplace(next, sum + swap_difference_formula(w, k));
          frontier.push_back(next);
        }
      }
      for (const auto& [letters, sum] : reached) {
        if (!(path_average(LambdaWord(letters, lambda)) - origin == sum)) {
          failures += "telescope:" + LambdaWord(letters, lambda).to_string() + " ";
        }
      }
      if (BigInt(std::to_string(reached.size())) != multinomial_count(lambda)) {
        failures += "unreached(" + lambda.to_string() + ") ";
      }
    }
    expect_true(r, "n=" + std::to_string(n) + ": " + std::to_string(swaps) +
                       " swaps match (1/n)(e_j - e_i + (2m_j - 2m_i)e_{d+1}) and telescope",
                failures.empty(), failures.substr(0, 400));
  }
}

void suite_vertices(SuiteReport& r, const Caps& caps) {
  for (const char* text : {"2,1", "2,2", "2,2,2", "3,2,1"}) {
    const auto lambda = Composition::parse(text);
    const std::uint64_t certified = par::certified_vertices(lambda, caps);
    expect_eq(r, std::string("(") + text + "): strictly minimal witnesses among " +
                     multinomial_count(lambda).get_str() + " words",
              coherent_count_formula(lambda), BigInt(std::to_string(certified)));
  }
  // The 30 lower vertices of (2,2,2) are distinct points.
  const auto lambda = all_twos(3);
  std::set<std::vector<Rational>> points;
  for (const auto& w : enumerate_words(lambda, caps)) {
    if (is_non_nesting(w)) points.insert(path_average(w).coords());
  }
  expect_eq(r, "(2,2,2): distinct vertex points", std::size_t{30}, points.size());
}

void suite_upper(SuiteReport& r, const Caps& caps) {
  for (const char* text : {"2,2,2", "3,2,1"}) {
    const auto lambda = Composition::parse(text);
    const auto paths = upper_facet_paths(lambda, caps);
    int on_facet = 0;
    for (const auto& p : paths) {
      Rational lhs = 0;
      for (int i = 0; i < lambda.d(); ++i) lhs += lambda.parts()[i] * p.average[i];
      on_facet += lhs == p.average[lambda.d()];
    }
    expect_eq(r, std::string("(") + text + "): averages on lambda.x = x_{d+1}",
              static_cast<int>(paths.size()), on_facet);
    expect_eq(r, std::string("(") + text + "): path count d!", 6, static_cast<int>(paths.size()));
  }
}

void suite_prop51(SuiteReport& r, const Caps& caps) {
  for (int d = 2; d <= 4; ++d) {
    if (2 * d > caps.bfs_length) {
      expect_true(r, "d=" + std::to_string(d) + " within BFS cap", false, "raise the cap");
      continue;
    }
    const auto census = max_incoherency_census(d, caps);
    expect_eq(r, "d=" + std::to_string(d) + ": maximum incoherency", d * (d - 1) / 2,
              census.maximum);
    int missing = 0;
    for (const auto& w : palindromic_nesting_words(d)) {
      if (!std::binary_search(census.attainers.begin(), census.attainers.end(), w)) ++missing;
    }
    expect_eq(r, "d=" + std::to_string(d) + ": every sigma sigma^rev attains it", 0, missing);
  }
  for (int d = 1; d <= 3; ++d) {
    const Composition lambda = all_twos(d);
    const auto table = incoherency_table(lambda, caps);
    std::uint64_t rank = 0;
    int violations = 0;
    for_each_word(lambda, [&](std::span<const int> letters) {
      if (static_cast<std::uint64_t>(table[rank++]) < nesting_count(letters, d)) ++violations;
    }, caps);
    expect_eq(r, "d=" + std::to_string(d) + ": incoherency >= nesting count", 0, violations);
  }
}

void suite_coset(SuiteReport& r, const Caps& caps) {
  for (int n = 1; n <= 7; ++n) {
    std::string failures;
    for (const auto& lambda : compositions_of(n)) {
      if (!verify_coset_bijection(lambda, caps)) failures += "(" + lambda.to_string() + ") ";
    }
    expect_true(r, "n=" + std::to_string(n) + ": coset map is a bijection onto distinct cosets",
                failures.empty(), failures);
  }
  for (int n = 1; n <= 7; ++n) {
    std::string failures;
    for (const auto& lambda : compositions_of(n)) {
      BigInt falling = 1;
      for (int t = n; t >= n - lambda.d() + 2; --t) falling *= t;
      if (falling != coherent_count_formula(lambda)) failures += "(" + lambda.to_string() + ") ";
    }
    expect_true(r, "n=" + std::to_string(n) + ": coset count n(n-1)...(n-d+2) = regions",
                failures.empty(), failures);
  }
}

void suite_remark2(SuiteReport& r, const Caps&) {
  const auto lambda = Composition::parse("4,3");
  const auto rho = OrderedPartition::parse("1|1,2|2|1,2|1", lambda);
  expect_eq(r, "(1|1,2|2|1,2|1) coherent", false, is_coherent_subdivision(rho).coherent);
  std::vector<std::string> coherent_atoms;
  for (const auto& w : atoms_below(rho)) {
    if (is_coherent_subdivision(OrderedPartition::singletons(w)).coherent) {
      coherent_atoms.push_back(w.to_string());
    }
  }
  std::string joined;
  for (const auto& s : coherent_atoms) joined += (joined.empty() ? "" : " ") + s;
  expect_eq(r, "coherent atoms below it", std::string("1,2,1,2,1,2,1"), joined);
  const auto atom = OrderedPartition::parse("1|2|1|2|1|2|1", lambda);
  expect_eq(r, "(1|2|1|2|1|2|1) refines it", true, refines(atom, rho));
}

void suite_fraction(SuiteReport& r, const Caps& caps) {
  for (int n = 1; n <= 8; ++n) {
    std::string failures;
    for (const auto& lambda : compositions_of(n)) {
      const Rational ratio(BigInt(std::to_string(par::count_non_nesting(lambda, caps))),
                           multinomial_count(lambda));
      BigInt numer = 1;
      for (int p : lambda.parts()) numer *= factorial(p);
      Rational formula(numer, factorial(lambda.n() - lambda.d() + 1));
      formula.canonicalize();
      Rational reduced = ratio;
      reduced.canonicalize();
      if (reduced != formula) failures += "(" + lambda.to_string() + ") ";
    }
    expect_true(r, "n=" + std::to_string(n) + ": fraction = prod lambda_i! / (n-d+1)!",
                failures.empty(), failures);
  }
  for (int d = 1; d <= 4; ++d) {
    const Composition lambda = all_twos(d);
    Rational ratio(BigInt(std::to_string(par::count_non_nesting(lambda, caps))),
                   multinomial_count(lambda));
    ratio.canonicalize();
    Rational formula(BigInt(1) << d, factorial(d + 1));
    formula.canonicalize();
    expect_eq(r, "d=" + std::to_string(d) + ": (2,...,2) fraction 2^d/(d+1)!", formula, ratio);
  }
}

struct SuiteEntry {
  const char* name;
  const char* title;
  double limit;
  void (*run)(SuiteReport&, const Caps&);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {"counts", "region/coherent counts for n <= 8", 10, suite_counts},
      {"coherence", "feasibility agrees with non-nesting for n <= 8", 30, suite_coherence},
      {"roundtrip", "witness functionals select their word, n <= 7", 0, suite_roundtrip},
      {"charpoly", "finite-field count equals the product formula", 20, suite_charpoly},
      {"faces", "coherent subdivisions by dimension vs Stirling sum", 60, suite_faces},
      {"swap", "swap-difference identity and telescoping, n <= 7", 0, suite_swap},
      {"vertices", "coherent I-points are strict functional minima", 30, suite_vertices},
      {"upper", "upper-facet path averages lie on lambda.x = x_{d+1}", 0, suite_upper},
      {"prop51", "maximum incoherency C(d,2) for lambda = (2,...,2)", 120, suite_prop51},
      {"coset", "first-position cosets biject onto regions, n <= 7", 0, suite_coset},
      {"remark2", "incoherent subdivision and its unique coherent atom", 0, suite_remark2},
      {"fraction", "coherent fraction prod lambda_i! / (n-d+1)!", 0, suite_fraction},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const Caps& caps) {
  for (const auto& entry : registry()) {
    if (name != entry.name) continue;
    SuiteReport report;
    report.name = entry.name;
    report.title = entry.title;
    report.time_limit_seconds = entry.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.run(report, caps);
    } catch (const std::exception& e) {
      report.checks.push_back({"suite completed", "no exception", e.what(), false});
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace monopath
