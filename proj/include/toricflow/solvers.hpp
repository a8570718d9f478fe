#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricflow/quotient.hpp"
#include "toricflow/unipoly.hpp"

namespace toricflow {

/// sum_j coefficients[j] * fs[j] == target, or the gcd that blocks it.
struct BezoutResult {
  bool solved = false;
  std::vector<UniPoly> coefficients;  // one per input, zero for unused inputs
  UniPoly gcd;                        // monic gcd of the inputs
};

/// Extended-gcd solution of sum a_j f_j = target. Prefers a single constant
/// input, then the first pair whose gcd divides the target (degree-reduced),
/// then the full gcd chain. Throws DomainError if fs is empty or all zero.
BezoutResult bezout_combination(const std::vector<UniPoly>& fs, const UniPoly& target);

enum class ExtensionStatus {
  solved,
  unsolvable,  // no solution among the words at this bound
  too_large,   // the word set exceeds the configured cap
};

/// A word is a multiset of generators, stored as a multiplicity vector.
struct CurveExtension {
  ExtensionStatus status = ExtensionStatus::unsolvable;
  unsigned bound = 0;
  std::vector<Exponent> words;
  std::vector<Rational> coefficients;
};

struct ExtensionLimits {
  std::size_t max_words = 4000;
};

/// Finds rational c_w with sum_w c_w prod_j values[j]^{w_j} == target over
/// all words of length <= degree_bound, enumerated in graded-lexicographic
/// order. Generators with constant values or values proportional to an
/// earlier generator never appear in a returned word.
CurveExtension extend_from_curve(const std::vector<UniPoly>& values, const UniPoly& target,
                                 unsigned degree_bound, const ExtensionLimits& limits = {});

/// extend_from_curve at bounds 1, 2, 4, ..., max_bound; returns the first
/// solution, otherwise the status at the last bound attempted.
CurveExtension extend_with_retry(const std::vector<UniPoly>& values, const UniPoly& target,
                                 unsigned max_bound, const ExtensionLimits& limits = {});

/// sum_w c_w prod_j values[j]^{w_j}.
UniPoly evaluate_words(const std::vector<UniPoly>& values, const std::vector<Exponent>& words,
                       const std::vector<Rational>& coefficients);

/// One solution of the rational system rows * x = rhs, free variables set
/// to zero, by fraction-free elimination with pivots taken left to right.
std::optional<std::vector<Rational>> solve_linear_system(const std::vector<std::vector<Rational>>& rows,
                                                         const std::vector<Rational>& rhs);

}  // namespace toricflow
