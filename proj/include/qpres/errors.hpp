#pragma once

#include <stdexcept>
#include <string>

namespace qpres {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AlgebraMismatch : Error {
  AlgebraMismatch() : Error("operands belong to different algebras") {}
};

struct NotNilpotentAtBound : Error {
  int bound;
  explicit NotNilpotentAtBound(int L)
      : Error("a path of length " + std::to_string(L) +
              " is nonzero modulo the relation ideal; nilpotency bound rejected"),
        bound(L) {}
};

struct NonParallelRelation : Error {
  explicit NonParallelRelation(const std::string& detail)
      : Error("relation terms are not parallel paths: " + detail) {}
};

struct UnknownArrow : Error {
  explicit UnknownArrow(const std::string& name)
      : Error("unknown arrow '" + name + "' in relation") {}
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("cannot factor the zero polynomial") {}
};

struct EnumerationCapExceeded : Error {
  explicit EnumerationCapExceeded(const std::string& detail)
      : Error("enumeration cap exceeded: " + detail) {}
};

struct NoNontrivialExtension : Error {
  NoNontrivialExtension() : Error("ext^1 vanishes; no nonsplit extension exists") {}
};

struct NotReduced : Error {
  NotReduced() : Error("presentation is not reduced: negative and positive supports overlap") {}
};

struct CanonicalInconsistent : Error {
  int agree_num, agree_den;
  CanonicalInconsistent(int num, int den)
      : Error("canonical decomposition samples disagree: majority " + std::to_string(num) + "/" +
              std::to_string(den)),
        agree_num(num),
        agree_den(den) {}
};

struct NotIndecomposable : Error {
  explicit NotIndecomposable(const std::string& w)
      : Error("weight " + w + " is not indecomposable") {}
};

struct ParseError : Error {
  int line;
  ParseError(int ln, const std::string& msg)
      : Error("parse error at line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

struct ValidationError : Error {
  std::string field;
  ValidationError(const std::string& fld, const std::string& msg)
      : Error("invalid field '" + fld + "': " + msg), field(fld) {}
};

}  // namespace qpres
