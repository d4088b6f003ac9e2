#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace almostperm {

/// A finite subset F of a group with its partial multiplication: a*b is
/// recorded only when the product lies in F.
struct PartialGroupTable {
  std::set<std::string> elements;
  std::optional<std::string> unit;
  std::map<std::pair<std::string, std::string>, std::string> products;

  void add_product(const std::string &a, const std::string &b,
                   const std::string &c) {
    elements.insert(a);
    elements.insert(b);
    elements.insert(c);
    products[{a, b}] = c;
  }

  std::optional<std::string> product(const std::string &a,
                                     const std::string &b) const {
    auto it = products.find({a, b});
    if (it == products.end())
      return std::nullopt;
    return it->second;
  }
};

using Representation = std::map<std::string, Permutation>;

struct RepresentationReport {
  /// max over defined products a*b = c of h(phi(a)phi(b), phi(c)); 0 if none.
  Rational mult_defect;
  /// phi(unit) is the identity (true when the table has no unit).
  bool unit_ok = true;
  /// min over non-unit a of h(phi(a), id); 1 if F has no non-unit element.
  Rational separation{1};

  bool passes(const Rational &eps, const Rational &alpha) const {
    return mult_defect < eps && unit_ok && separation > alpha;
  }
};

namespace detail {

inline const Permutation &image_of(const Representation &phi,
                                   const std::string &label) {
  auto it = phi.find(label);
  if (it == phi.end())
    throw InvalidArgument("representation undefined on '" + label + "'");
  return it->second;
}

} // namespace detail

/// Measures how far phi : F -> S_n is from an (F, eps, alpha)-representation.
inline RepresentationReport check_representation(const PartialGroupTable &table,
                                                 const Representation &phi) {
  std::optional<std::size_t> n;
  for (const auto &a : table.elements) {
    const auto &f = detail::image_of(phi, a);
    if (n && *n != f.degree())
      throw DegreeMismatch(*n, f.degree());
    n = f.degree();
  }

  RepresentationReport report;
  for (const auto &[ab, c] : table.products) {
    auto prod = compose(detail::image_of(phi, ab.first),
                        detail::image_of(phi, ab.second));
    report.mult_defect =
        std::max(report.mult_defect, hamming(prod, detail::image_of(phi, c)));
  }
  if (table.unit)
    report.unit_ok = detail::image_of(phi, *table.unit).is_identity();
  for (const auto &a : table.elements) {
    if (table.unit && a == *table.unit)
      continue;
    const auto &f = detail::image_of(phi, a);
    report.separation =
        std::min(report.separation, hamming(f, Permutation::identity(f.degree())));
  }
  return report;
}

/// For a word v_1 ... v_L over F whose prefix products all lie in F, returns
/// h(phi(v_1 ... v_L), phi(v_1) ... phi(v_L)). Throws if a prefix product is
/// not recorded in the table.
inline Rational word_drift(const PartialGroupTable &table,
                           const Representation &phi,
                           const std::vector<std::string> &word) {
  if (word.empty())
    throw InvalidArgument("empty word");
  std::string prefix = word.front();
  Permutation product = detail::image_of(phi, prefix);
  for (std::size_t i = 1; i < word.size(); ++i) {
    auto next = table.product(prefix, word[i]);
    if (!next)
      throw InvalidArgument("prefix product " + prefix + "*" + word[i] +
                            " is not in the table");
    prefix = *next;
    product = compose(product, detail::image_of(phi, word[i]));
  }
  return hamming(detail::image_of(phi, prefix), product);
}

/// alpha - delta*|w| - 2*|w|*eps: lower bound on h(psi(w), id) for the exact
/// homomorphism psi obtained by moving phi's generator images a distance of at
/// most delta.
inline Rational separation_lower_bound(const Rational &alpha,
                                       const Rational &delta,
                                       std::size_t word_length,
                                       const Rational &eps) {
  const Rational len(static_cast<std::int64_t>(word_length));
  return alpha - delta * len - Rational(2) * len * eps;
}

} // namespace almostperm
