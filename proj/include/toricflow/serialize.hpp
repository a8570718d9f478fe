#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "toricflow/curve.hpp"
#include "toricflow/errors.hpp"
#include "toricflow/lnd.hpp"
#include "toricflow/quotient.hpp"
#include "toricflow/straighten.hpp"

namespace toricflow {

using Json = nlohmann::json;

/// Malformed input; `where` is a JSON pointer into the offending document.
class InputError : public Error {
 public:
  InputError(const std::string& where, const std::string& what) : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Rationals travel as strings "p/q" (or "p"); integers as JSON numbers when
// they fit in 64 bits and as decimal strings otherwise.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const LatticeVector& v);
Json to_json(const UniPoly& f);
Json to_json(const MultiPoly& f);
Json to_json(const LiftedCurve& c);
Json to_json(const ValidityCertificate& cert);
Json to_json(const StepRecord& rec);

Rational rational_from_json(const Json& j, const std::string& where);
Integer integer_from_json(const Json& j, const std::string& where);
LatticeVector vector_from_json(const Json& j, const std::string& where);
UniPoly unipoly_from_json(const Json& j, const std::string& where);
MultiPoly multipoly_from_json(const Json& j, std::size_t nvars, const std::string& where);
LiftedCurve curve_from_json(const Json& j, std::size_t rank, const std::string& where);

/// Ordered steps {ray (1-based), root, coefficient, time}.
Json word_to_json(const AutomorphismWord& w);
/// Rebuilds and revalidates every root and kernel coefficient.
AutomorphismWord word_from_json(const Json& j, const QuotientPresentation& p, const std::string& where);

/// A replayable word file: the word plus the curve it starts from and the
/// curve it must reach.
struct WordFile {
  AutomorphismWord word;
  LiftedCurve source;
  LiftedCurve image;
};
Json word_file_to_json(const WordFile& f);
WordFile word_file_from_json(const Json& j, const QuotientPresentation& p);

/// Canonical text form of a document (two-space indent, sorted keys, trailing newline).
std::string canonical_dump(const Json& j);

}  // namespace toricflow
