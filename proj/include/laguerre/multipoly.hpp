#pragma once

// Sparse polynomials with exact coefficients in the fixed variables
// x, y, u, v, z, w0. Terms are kept in graded-lexicographic order (higher
// total degree first, then lexicographically larger exponent vectors first),
// which is also the serialization order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace laguerre {

enum class Var : std::size_t { x, y, u, v, z, w0 };
inline constexpr std::size_t kNumVars = 6;
inline constexpr std::array<std::string_view, kNumVars> kVarNames{"x", "y", "u", "v", "z", "w0"};

using Exponents = std::array<unsigned, kNumVars>;

struct GradedLexOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da > db;
    return a > b;
  }
};

template <class Coeff>
class BasicMultiPoly {
public:
  using Terms = std::map<Exponents, Coeff, GradedLexOrder>;

  BasicMultiPoly() = default;
  BasicMultiPoly(Coeff c) { add_term(Exponents{}, c); }  // NOLINT: constants convert implicitly

  static BasicMultiPoly variable(Var v) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = 1;
    BasicMultiPoly p;
    p.add_term(e, Coeff{1});
    return p;
  }

  static BasicMultiPoly monomial(const Exponents& e, Coeff c = Coeff{1}) {
    BasicMultiPoly p;
    p.add_term(e, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of x^e; zero if absent.
  Coeff coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  /// Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, Coeff c) {
    if (c == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }

  BasicMultiPoly& operator+=(const BasicMultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicMultiPoly& operator-=(const BasicMultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BasicMultiPoly& operator*=(const BasicMultiPoly& o) { return *this = *this * o; }

  friend BasicMultiPoly operator+(BasicMultiPoly a, const BasicMultiPoly& b) { return a += b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a, const BasicMultiPoly& b) { return a -= b; }
  friend BasicMultiPoly operator-(const BasicMultiPoly& a) { return BasicMultiPoly{} - a; }

  friend BasicMultiPoly operator*(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    BasicMultiPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t k = 0; k < kNumVars; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  /// Exchanges the exponents of two variables in every term.
  BasicMultiPoly swapped(Var a, Var b) const {
    BasicMultiPoly out;
    for (const auto& [key, c] : terms_) {
      Exponents e = key;
      std::swap(e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(b)]);
      out.add_term(e, c);
    }
    return out;
  }

  /// Substitutes 0 for the given variable.
  BasicMultiPoly at_zero(Var v) const {
    BasicMultiPoly out;
    for (const auto& [e, c] : terms_) {
      if (e[static_cast<std::size_t>(v)] == 0) out.add_term(e, c);
    }
    return out;
  }

  /// Sum of all coefficients (the value at all variables = 1).
  Coeff coefficient_sum() const {
    Coeff s{};
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  friend bool operator==(const BasicMultiPoly&, const BasicMultiPoly&) = default;

private:
  Terms terms_;
};

using MultiPoly = BasicMultiPoly<std::int64_t>;

/// "coeff * x^a y^b ..." per term, one term per line, zero exponents omitted.
/// A constant term is its coefficient alone; the zero polynomial is "0".
template <class Coeff>
std::string format_poly(const BasicMultiPoly<Coeff>& p) {
  if (p.is_zero()) return "0\n";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string line = std::to_string(c);
    bool first = true;
    for (std::size_t k = 0; k < kNumVars; ++k) {
      if (e[k] == 0) continue;
      line += first ? " * " : " ";
      first = false;
      line += std::string(kVarNames[k]) + "^" + std::to_string(e[k]);
    }
    out += line + '\n';
  }
  return out;
}

template <class Coeff>
std::ostream& operator<<(std::ostream& os, const BasicMultiPoly<Coeff>& p) {
  return os << format_poly(p);
}

}  // namespace laguerre
