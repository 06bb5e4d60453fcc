#pragma once

// JSON instance files and the JSON encoding of results.

#include "latgap/frobenius.hpp"
#include "latgap/gomory.hpp"

#include <json.hpp>

#include <optional>
#include <variant>

namespace latgap::io {

using Json = nlohmann::ordered_json;

struct GroupFile {
  LatticeBasis basis;
  CostVector cost;
  std::optional<IntVector> residue;

  GroupInstance instance() const { return GroupInstance(basis, cost); }
};

struct FrobeniusFile {
  FrobeniusInput a;
};

struct IpFile {
  IpInstance ip;
};

using Instance = std::variant<GroupFile, FrobeniusFile, IpFile>;

/// Exactly the fields of the given kind are accepted:
///   group:     kind, basis, l, r (optional)
///   frobenius: kind, a
///   ip:        kind, A, b, c
/// Integers may be JSON integers or decimal strings, rationals JSON
/// integers or "p/q" strings; floating values are rejected.
Instance parseInstance(const Json& doc);

Integer parseIntegerField(const Json& value, const char* what);
Rational parseRationalField(const Json& value, const char* what);

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json encode(const Integer& z);
/// Always a string, "p" or "p/q".
Json encode(const Rational& q);
Json encode(const IntVector& v);
Json encode(const RatVector& v);
Json encode(const IntMatrix& m);
Json encode(const CosetLabel& label);

}  // namespace latgap::io
