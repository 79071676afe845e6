#ifndef IVL_IO_JSON_HPP
#define IVL_IO_JSON_HPP

// JSON encoding of library values. Intervals are two-element arrays, infinite
// endpoints are the strings "inf" and "-inf". Requires nlohmann/json.

#include <cmath>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "ivl/error.hpp"
#include "ivl/extended.hpp"
#include "ivl/interval.hpp"
#include "ivl/io/text.hpp"
#include "ivl/kinterval.hpp"
#include "ivl/solvers/estimators.hpp"
#include "ivl/solvers/linear_system.hpp"
#include "ivl/solvers/newton.hpp"

namespace ivl::json {

using value = nlohmann::json;

/// Integral values below 2^53 print as JSON integers ("0" rather than "0.0").
inline value endpoint(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == std::trunc(x) && std::fabs(x) < 0x1p53) {
    if (x == 0.0) return std::int64_t{0};
    return static_cast<std::int64_t>(x);
  }
  return x;
}

inline value encode(const Interval& a) { return value::array({endpoint(a.lo()), endpoint(a.hi())}); }
inline value encode(const KInterval& k) { return value::array({endpoint(k.lo()), endpoint(k.hi())}); }

inline value encode(const KVector& v) {
  value out = value::array();
  for (const auto& k : v) out.push_back(encode(k));
  return out;
}

/// "empty", "entire", [lo,hi] or [[lo,hi],[lo,hi]].
inline value encode(const ExtendedDivResult& r) {
  switch (r.kind()) {
    case ExtendedDivResult::Kind::Empty: return "empty";
    case ExtendedDivResult::Kind::WholeLine: return "entire";
    case ExtendedDivResult::Kind::Single: return encode(r.parts()[0]);
    case ExtendedDivResult::Kind::Pair: return value::array({encode(r.parts()[0]), encode(r.parts()[1])});
  }
  return nullptr;
}

inline value encode(const EstimateReport& r) {
  value out;
  out["x"] = encode(r.x);
  out["verified"] = r.verified;
  out["status"] = to_string(r.status);
  out["residual"] = r.residual;
  out["iterations"] = r.iterations;
  if (std::isnan(r.rho_estimate)) {
    out["rho_estimate"] = nullptr;
  } else {
    out["rho_estimate"] = r.rho_estimate;
  }
  return out;
}

inline value encode(const NewtonResult& r) {
  value boxes = value::array();
  for (const auto& b : r.boxes) boxes.push_back({{"box", encode(b.box)}, {"status", to_string(b.status)}});
  return {{"boxes", boxes}, {"iterations", r.iterations}};
}

inline value encode(const FormalCheck& c) { return {{"ok", c.ok}, {"residual", c.residual}}; }

// ---- decoding -------------------------------------------------------------

inline double decode_endpoint(const value& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_endpoint(v.get<std::string>());
  throw error(errc::invalid_argument, "endpoint must be a number or \"inf\"/\"-inf\", got " + v.dump());
}

inline std::pair<double, double> decode_pair(const value& v) {
  if (!v.is_array() || v.size() != 2) throw error(errc::invalid_argument, "interval must be [lo,hi], got " + v.dump());
  return {decode_endpoint(v[0]), decode_endpoint(v[1])};
}

inline Interval decode_interval(const value& v) {
  const auto [lo, hi] = decode_pair(v);
  return Interval::make(lo, hi);
}

inline KInterval decode_kinterval(const value& v) {
  const auto [lo, hi] = decode_pair(v);
  return {lo, hi};
}

inline KVector decode_kvector(const value& v) {
  if (!v.is_array() || v.empty()) throw error(errc::invalid_argument, "expected a nonempty array of intervals");
  KVector out;
  for (const auto& e : v) out.push_back(decode_kinterval(e));
  return out;
}

inline const value& field(const value& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) throw error(errc::invalid_argument, std::string("missing field \"") + name + "\"");
  return doc.at(name);
}

/// {"A": [[[lo,hi], ...], ...], "b": [[lo,hi], ...]}
inline ILinearSystem decode_system(const value& doc) {
  const value& rows = field(doc, "A");
  if (!rows.is_array() || rows.empty()) throw error(errc::invalid_argument, "\"A\" must be a nonempty array of rows");
  const std::size_t m = rows.size();
  const std::size_t n = rows[0].is_array() ? rows[0].size() : 0;
  if (n == 0) throw error(errc::invalid_argument, "\"A\" rows must be nonempty arrays");
  ILinearSystem sys{KMatrix(m, n), decode_kvector(field(doc, "b"))};
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw error(errc::dimension_mismatch, "\"A\" is not rectangular");
    for (std::size_t j = 0; j < n; ++j) sys.A(i, j) = decode_kinterval(rows[i][j]);
  }
  sys.validate();
  return sys;
}

}  // namespace ivl::json

#endif  // IVL_IO_JSON_HPP
