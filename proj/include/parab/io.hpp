/// @file io.hpp
/// @brief JSON input documents and report serialization.
///
/// Input schema:
///
///   {
///     "curve":  {"genus": 2,
///                "points": [{"degree": 1, "ramification": 3, "weights": [2, 1, 1, 0]}]},
///     "bundle": {"rank": 2, "degree": 1},                          // optional
///     "pieces": [{"rank": 2, "weights_per_point": [[2, 1, 1, 0]]}] // optional
///   }
///
/// Rationals are always written as "p/q" strings (or "p"), weights as integer
/// arrays that include the closing 0.
#pragma once

#include "parab/cyclotomic.hpp"
#include "parab/exact_arith.hpp"
#include "parab/moduli_bounds.hpp"
#include "parab/oracle.hpp"
#include "parab/parabolic.hpp"
#include "parab/riemann_roch.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parab {

using Json = nlohmann::json;

/// Input that does not match the document schema.
class InputError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct BundleSpec {
  long long rank;
  long long degree;
};

struct InputDocument {
  OrbifoldCurve curve;
  std::optional<BundleSpec> bundle;
  std::vector<GradedPiece> pieces;

  ParabolicBundle to_bundle() const {
    if (!bundle) throw InputError("document: this command needs a \"bundle\" object");
    return ParabolicBundle(curve, bundle->rank, bundle->degree);
  }

  std::vector<long long> residue_degrees() const {
    std::vector<long long> f;
    for (const auto& p : curve.points) f.push_back(p.f);
    return f;
  }
};

namespace detail {

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw InputError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline long long integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<long long>();
}

inline Weights weights_from(const Json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an integer array");
  std::vector<long long> n;
  for (std::size_t i = 0; i < v.size(); ++i) n.push_back(integer(v[i], where + "[" + std::to_string(i) + "]"));
  try {
    return Weights(std::move(n));
  } catch (const InvalidWeights& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace detail

inline InputDocument parse_document(const Json& doc) {
  using detail::field;
  using detail::integer;
  InputDocument out;
  const Json& curve = field(doc, "curve", "document");
  out.curve.genus = integer(field(curve, "genus", "curve"), "curve.genus");
  if (out.curve.genus < 0) throw InputError("curve.genus: must be >= 0");
  if (auto it = curve.find("points"); it != curve.end()) {
    if (!it->is_array()) throw InputError("curve.points: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "curve.points[" + std::to_string(i) + "]";
      const Json& pt = (*it)[i];
      const long long f = integer(field(pt, "degree", where), where + ".degree");
      const long long e = integer(field(pt, "ramification", where), where + ".ramification");
      if (f < 1) throw InputError(where + ".degree: must be >= 1");
      if (e < 1) throw InputError(where + ".ramification: must be >= 1");
      Weights w = detail::weights_from(field(pt, "weights", where), where + ".weights");
      if (static_cast<long long>(w.ramification()) != e) {
        throw InputError(where + ".weights: expected " + std::to_string(e + 1) + " entries for ramification " +
                         std::to_string(e));
      }
      out.curve.points.emplace_back(f, std::move(w));
    }
  }
  if (auto it = doc.find("bundle"); it != doc.end()) {
    BundleSpec b{integer(field(*it, "rank", "bundle"), "bundle.rank"),
                 integer(field(*it, "degree", "bundle"), "bundle.degree")};
    if (b.rank < 1) throw InputError("bundle.rank: must be >= 1");
    for (std::size_t i = 0; i < out.curve.points.size(); ++i) {
      if (out.curve.points[i].weights.rank() != b.rank) {
        throw InputError("curve.points[" + std::to_string(i) + "].weights: first entry must equal bundle.rank");
      }
    }
    out.bundle = b;
  }
  if (auto it = doc.find("pieces"); it != doc.end()) {
    if (!it->is_array()) throw InputError("pieces: expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string where = "pieces[" + std::to_string(i) + "]";
      const Json& pc = (*it)[i];
      GradedPiece piece{integer(field(pc, "rank", where), where + ".rank"), {}};
      const Json& per_point = field(pc, "weights_per_point", where);
      if (!per_point.is_array()) throw InputError(where + ".weights_per_point: expected an array");
      if (per_point.size() != out.curve.points.size()) {
        throw InputError(where + ".weights_per_point: expected one datum per curve point");
      }
      for (std::size_t j = 0; j < per_point.size(); ++j) {
        const std::string wj = where + ".weights_per_point[" + std::to_string(j) + "]";
        Weights w = detail::weights_from(per_point[j], wj);
        if (w.ramification() != out.curve.points[j].ramification()) {
          throw InputError(wj + ": ramification differs from curve point " + std::to_string(j));
        }
        piece.weights.push_back(std::move(w));
      }
      out.pieces.push_back(std::move(piece));
    }
  }
  return out;
}

/// Parses JSON text, reporting the byte offset of syntax errors.
inline InputDocument read_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_document(doc);
}

inline Json to_json(const Rational& q) { return q.str(); }

inline Json to_json(const Weights& w) {
  Json a = Json::array();
  for (long long n : w.entries()) a.push_back(n);
  return a;
}

inline Json to_json(const CycloElem& x) {
  Json a = Json::array();
  for (const auto& c : x.coefficients()) a.push_back(c.str());
  return a;
}

inline Json to_json(const OrbifoldCurve& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) {
    pts.push_back({{"degree", p.f}, {"ramification", p.ramification()}, {"weights", to_json(p.weights)}});
  }
  return {{"genus", c.genus}, {"points", pts}};
}

/// A bundle as an input document (re-parses under parse_document).
inline Json to_json(const ParabolicBundle& b) {
  return {{"curve", to_json(b.curve())}, {"bundle", {{"rank", b.rank()}, {"degree", b.degree()}}}};
}

inline Json to_json(const ChiReport& r) {
  Json corr = Json::array();
  for (const auto& [i, c] : r.corrections) corr.push_back({std::to_string(i), c.str()});
  return {{"chi", r.chi.str()},
          {"stacky_degree", r.stacky_degree.str()},
          {"classical_part", r.classical_part.str()},
          {"corrections", corr}};
}

inline Json to_json(const EdReport& r) {
  Json j = {{"h", r.h},
            {"base", r.base},
            {"flag_total", r.flag_total},
            {"gerbe_term", r.gerbe_term},
            {"total", r.total},
            {"conjectural", r.conjectural}};
  if (r.prime) j["prime"] = *r.prime;
  return j;
}

inline Json to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"parameters", f.parameters}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"identity", r.identity},
          {"range", r.range},
          {"cases", r.cases},
          {"failures", failures},
          {"pass", r.pass()}};
}

inline Json to_json(const PrimeFactorization& f) {
  Json a = Json::array();
  for (const auto& [p, e] : f) a.push_back({p, e});
  return a;
}

}  // namespace parab
