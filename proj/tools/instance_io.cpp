#include "instance_io.hpp"

#include <limits>
#include <set>
#include <string>

namespace latgap::io {

namespace {

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidInput, message);
}

void checkFields(const Json& doc, const std::set<std::string>& required,
                 const std::set<std::string>& optional) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!required.count(key) && !optional.count(key))
      invalid("unexpected field \"" + key + "\" for kind " + doc["kind"].get<std::string>());
  }
  for (const auto& key : required)
    if (!doc.contains(key)) invalid("missing field \"" + key + "\"");
}

const Json& array(const Json& value, const char* what) {
  if (!value.is_array()) invalid(std::string(what) + " must be an array");
  return value;
}

IntVector integerVector(const Json& value, const char* what) {
  const Json& arr = array(value, what);
  IntVector v(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i)
    v(static_cast<Index>(i)) = parseIntegerField(arr[i], what);
  return v;
}

RatVector rationalVector(const Json& value, const char* what) {
  const Json& arr = array(value, what);
  RatVector v(static_cast<Index>(arr.size()));
  for (std::size_t i = 0; i < arr.size(); ++i)
    v(static_cast<Index>(i)) = parseRationalField(arr[i], what);
  return v;
}

IntMatrix integerMatrix(const Json& value, const char* what) {
  const Json& rows = array(value, what);
  if (rows.empty()) invalid(std::string(what) + " must not be empty");
  const std::size_t cols = array(rows[0], what).size();
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const IntVector row = integerVector(rows[i], what);
    if (static_cast<std::size_t>(row.size()) != cols)
      invalid(std::string(what) + " rows have different lengths");
    m.row(static_cast<Index>(i)) = row.transpose();
  }
  return m;
}

}  // namespace

Integer parseIntegerField(const Json& value, const char* what) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(value.get<std::uint64_t>());
    return Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) return parseInteger(value.get<std::string>());
  invalid(std::string(what) + ": expected an integer");
}

Rational parseRationalField(const Json& value, const char* what) {
  if (value.is_number_integer()) return Rational(parseIntegerField(value, what));
  if (value.is_string()) return parseRational(value.get<std::string>());
  invalid(std::string(what) + ": expected a rational string such as \"3/7\"");
}

Instance parseInstance(const Json& doc) {
  if (!doc.is_object()) invalid("instance must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) invalid("missing string field \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();

  if (kind == "group") {
    checkFields(doc, {"kind", "basis", "l"}, {"r"});
    const IntMatrix basis = integerMatrix(doc["basis"], "basis");
    if (basis.rows() != basis.cols()) invalid("basis must be square");
    LatticeBasis lattice(basis);
    CostVector cost(rationalVector(doc["l"], "l"));
    if (cost.size() != lattice.dim())
      throw Error(ErrorCode::DimensionMismatch, "l must have one entry per dimension");
    std::optional<IntVector> r;
    if (doc.contains("r")) {
      r = integerVector(doc["r"], "r");
      if (r->size() != lattice.dim())
        throw Error(ErrorCode::DimensionMismatch, "r must have one entry per dimension");
    }
    return GroupFile{std::move(lattice), std::move(cost), std::move(r)};
  }
  if (kind == "frobenius") {
    checkFields(doc, {"kind", "a"}, {});
    const IntVector a = integerVector(doc["a"], "a");
    return FrobeniusFile{FrobeniusInput(std::vector<Integer>(a.begin(), a.end()))};
  }
  if (kind == "ip") {
    checkFields(doc, {"kind", "A", "b", "c"}, {});
    return IpFile{IpInstance(integerMatrix(doc["A"], "A"), integerVector(doc["b"], "b"),
                             rationalVector(doc["c"], "c"))};
  }
  invalid("unknown kind \"" + kind + "\"");
}

Json encode(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() &&
      z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

Json encode(const Rational& q) { return toString(q); }

Json encode(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

Json encode(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

Json encode(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(encode(IntVector(m.row(i).transpose())));
  return out;
}

Json encode(const CosetLabel& label) {
  return Json{{"digits", encode(label.digits)}, {"index", encode(label.index)}};
}

}  // namespace latgap::io
