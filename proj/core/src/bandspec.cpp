#include "toepdet/bandspec.hpp"

#include <json.hpp>

namespace toepdet {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty coefficient");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw Error(Errc::ParseError, "not an exact integer or p/q rational: '" + text + "'");
  if (sgn(q.get_den()) == 0)
    throw Error(Errc::ParseError, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

BandSpec<Rational> spec_from_json(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad spec JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("s") || !doc.contains("r") || !doc.contains("coeffs"))
    throw Error(Errc::ParseError, "spec JSON needs fields s, r, coeffs");
  BandSpec<Rational> spec;
  try {
    spec.s = doc.at("s").get<int>();
    spec.r = doc.at("r").get<int>();
    for (const auto& c : doc.at("coeffs")) spec.coeffs.push_back(parse_rational(c.get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, std::string("bad spec JSON: ") + e.what());
  }
  return spec;
}

std::string spec_to_json(const BandSpec<Rational>& spec) {
  nlohmann::json doc;
  doc["s"] = spec.s;
  doc["r"] = spec.r;
  auto coeffs = nlohmann::json::array();
  for (const auto& c : spec.coeffs) coeffs.push_back(c.get_str());
  doc["coeffs"] = coeffs;
  return doc.dump();
}

BandSpec<ScaledValue> spec_to_scaled(const BandSpec<Rational>& spec) {
  BandSpec<ScaledValue> out;
  out.s = spec.s;
  out.r = spec.r;
  out.coeffs.reserve(spec.coeffs.size());
  for (const auto& c : spec.coeffs) out.coeffs.push_back(to_scaled(c));
  return out;
}

BandSpec<Fp> spec_to_fp(const BandSpec<Rational>& spec, std::uint64_t p) {
  BandSpec<Fp> out;
  out.s = spec.s;
  out.r = spec.r;
  out.coeffs.reserve(spec.coeffs.size());
  for (const auto& c : spec.coeffs) out.coeffs.push_back(to_fp(c, p));
  // Zero images of the band-defining coefficients get their own diagnostics;
  // a plain validate() could not tell them apart from a zero input.
  if (out.coeffs.size() == static_cast<std::size_t>(out.k() + 1)) {
    if (!is_zero(spec.a(spec.s)) && is_zero(out.a(out.s)))
      throw Error(Errc::ModulusDividesLeadingCoefficient,
                  "a_s = " + spec.a(spec.s).get_str() + " vanishes mod " + std::to_string(p));
    if (!is_zero(spec.a(spec.k())) && is_zero(out.a(out.k())))
      throw Error(Errc::ModulusDividesTrailingCoefficient,
                  "a_{s+r} = " + spec.a(spec.k()).get_str() + " vanishes mod " + std::to_string(p));
  }
  return out;
}

}  // namespace toepdet
