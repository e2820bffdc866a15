#pragma once

// Permutations of {1..n} in one-line form and the position/letter statistics
// built on records, antirecords, excedances and cycles.
//
// Every public index is 1-based. Sets of indices are returned as ascending
// vectors without duplicates so that profiles compare with ==.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace laguerre {

using IndexSet = std::vector<int>;

class Permutation {
public:
  Permutation() = default;

  /// Builds a permutation from its images sigma(1), ..., sigma(n).
  /// Throws std::invalid_argument unless the images rearrange 1..n.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(images_.size() + 1, false);
    for (std::size_t k = 0; k < images_.size(); ++k) {
      const int v = images_[k];
      if (v < 1 || v > n) {
        throw std::invalid_argument("image " + std::to_string(v) + " at position " +
                                    std::to_string(k + 1) + " is outside 1.." + std::to_string(n));
      }
      if (seen[v]) {
        throw std::invalid_argument("image " + std::to_string(v) + " repeated at position " +
                                    std::to_string(k + 1));
      }
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    return Permutation(std::move(images));
  }

  int size() const { return static_cast<int>(images_.size()); }

  /// sigma(i) for 1 <= i <= n; unchecked.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  /// sigma(i) with a range check.
  int at(int i) const {
    if (i < 1 || i > size()) {
      throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(size()));
    }
    return (*this)(i);
  }

  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

inline Permutation inverse(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(inv));
}

// ---------------------------------------------------------------------------
// Cycle classification

enum class CycleKind { Valley, Peak, DoubleRise, DoubleFall, Fixed };

inline std::string_view to_string(CycleKind k) {
  switch (k) {
    case CycleKind::Valley: return "cval";
    case CycleKind::Peak: return "cpeak";
    case CycleKind::DoubleRise: return "cdrise";
    case CycleKind::DoubleFall: return "cdfall";
    case CycleKind::Fixed: return "fix";
  }
  return "?";
}

struct CycleClassification {
  std::vector<CycleKind> kinds;  // kinds[i - 1] is the kind of index i

  CycleKind kind_of(int i) const { return kinds.at(static_cast<std::size_t>(i - 1)); }

  IndexSet of(CycleKind k) const {
    IndexSet out;
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      if (kinds[i] == k) out.push_back(static_cast<int>(i + 1));
    }
    return out;
  }

  friend bool operator==(const CycleClassification&, const CycleClassification&) = default;
};

/// Labels each i by comparing sigma^{-1}(i), i and sigma(i).
inline CycleClassification classify(const Permutation& p) {
  const Permutation inv = inverse(p);
  CycleClassification out;
  out.kinds.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) {
    const int before = inv(i);
    const int after = p(i);
    CycleKind k;
    if (after == i) {
      k = CycleKind::Fixed;
    } else if (before < i && i > after) {
      k = CycleKind::Peak;
    } else if (before > i && i < after) {
      k = CycleKind::Valley;
    } else if (before < i && i < after) {
      k = CycleKind::DoubleRise;
    } else {
      k = CycleKind::DoubleFall;
    }
    out.kinds.push_back(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nesting numbers

/// #{ j : i < j and sigma(j) < sigma(i) }.
inline int lownest(const Permutation& p, int i) {
  const int vi = p.at(i);
  int count = 0;
  for (int j = i + 1; j <= p.size(); ++j) {
    if (p(j) < vi) ++count;
  }
  return count;
}

/// #{ j : i < j and sigma^{-1}(j) < sigma^{-1}(i) }; equals lownest of the inverse.
inline int upnest(const Permutation& p, int i) {
  if (i < 1 || i > p.size()) {
    throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(p.size()));
  }
  const Permutation inv = inverse(p);
  const int pos = inv(i);
  int count = 0;
  for (int j = i + 1; j <= p.size(); ++j) {
    if (inv(j) < pos) ++count;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Set-valued statistics

/// Maxima of the cycles of p, ascending.
inline IndexSet cycle_maxima(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  IndexSet out;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    int best = start;
    for (int j = start; !visited[j]; j = p(j)) {
      visited[j] = true;
      best = std::max(best, j);
    }
    out.push_back(best);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct StatisticProfile {
  IndexSet recp, recl;
  IndexSet arecp, arecl;
  IndexSet erecp, erecl;
  IndexSet rar;
  IndexSet excp, excl;
  IndexSet cyc;

  friend bool operator==(const StatisticProfile&, const StatisticProfile&) = default;
};

inline StatisticProfile profile(const Permutation& p) {
  const int n = p.size();
  StatisticProfile s;

  // Records scan left to right with a running maximum; antirecords right to
  // left with a running minimum.
  std::vector<bool> is_rec(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> is_arec(static_cast<std::size_t>(n) + 1, false);
  int running_max = 0;
  for (int i = 1; i <= n; ++i) {
    if (p(i) > running_max) {
      is_rec[i] = true;
      running_max = p(i);
    }
  }
  int running_min = n + 1;
  for (int i = n; i >= 1; --i) {
    if (p(i) < running_min) {
      is_arec[i] = true;
      running_min = p(i);
    }
  }

  for (int i = 1; i <= n; ++i) {
    const int v = p(i);
    if (is_rec[i]) {
      s.recp.push_back(i);
      s.recl.push_back(v);
    }
    if (is_arec[i]) {
      s.arecp.push_back(i);
      s.arecl.push_back(v);
    }
    if (is_rec[i] && !is_arec[i]) {
      s.erecp.push_back(i);
      s.erecl.push_back(v);
    }
    if (is_rec[i] && is_arec[i]) s.rar.push_back(i);
    if (v > i) {
      s.excp.push_back(i);
      s.excl.push_back(v);
    }
  }
  for (IndexSet* set : {&s.recl, &s.arecl, &s.erecl, &s.excl}) std::sort(set->begin(), set->end());
  s.cyc = cycle_maxima(p);
  return s;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Calls f(p) for every permutation of size n in lexicographic order.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  do {
    f(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// ---------------------------------------------------------------------------
// Text format: space-separated images on one line.

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + what), position(position) {}
  std::size_t position;  // 1-based token or line number
};

inline std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

/// Parses whitespace-separated images. Throws ParseError naming the 1-based
/// token that is malformed or breaks the permutation property.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t index = 0;
  while (in >> token) {
    ++index;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError(index, "'" + token + "' is not an integer");
    }
    if (used != token.size()) throw ParseError(index, "'" + token + "' is not an integer");
    images.push_back(value);
  }
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size() + 1, false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int v = images[k];
    if (v < 1 || v > n) throw ParseError(k + 1, "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    if (seen[v]) throw ParseError(k + 1, "value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << format_permutation(p); }

}  // namespace laguerre
