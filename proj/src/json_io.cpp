#include "tiltbg/json_io.hpp"

#include "tiltbg/error.hpp"

namespace tiltbg::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an array");
  return a;
}

RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

json vector_to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

json to_json(const QuadSurd& x) { return x.str(); }

QuadSurd surd_from_json(const json& j) {
  if (j.is_string()) return QuadSurd::parse(j.get<std::string>());
  return QuadSurd(rational_from_json(j));
}

json to_json(const NumChern& v) { return {{"variety", v.variety().name()}, {"s", vector_to_json(v.s())}}; }

NumChern num_chern_from_json(const json& j) {
  const json& var = field(j, "variety");
  if (!var.is_string()) throw Error(ErrorCode::ParseError, "variety must be a string");
  return NumChern(Variety::parse(var.get<std::string>()), vector_from_json(array_field(j, "s")));
}

json to_json(const Wall& w) {
  json pivots = json::array();
  for (const auto& p : w.pivots) pivots.push_back({to_json(p.beta), to_json(p.alpha)});
  return {{"slope", to_json(w.slope)}, {"intercept", to_json(w.intercept)}, {"pivots", pivots}};
}

Wall wall_from_json(const json& j) {
  Wall w{rational_from_json(field(j, "slope")), rational_from_json(field(j, "intercept")), {}};
  for (const auto& p : array_field(j, "pivots")) {
    if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::ParseError, "pivot must be [beta, alpha]");
    w.pivots.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return w;
}

json to_json(const SurdPoint& p) { return {{"beta", to_json(p.beta)}, {"alpha", to_json(p.alpha)}}; }

SurdPoint surd_point_from_json(const json& j) {
  return {surd_from_json(field(j, "beta")), surd_from_json(field(j, "alpha"))};
}

json to_json(const BoundFunction& f) {
  json pieces = json::array();
  for (const auto& q : f.f.pieces()) pieces.push_back({to_json(q.c2), to_json(q.c1), to_json(q.c0)});
  json overrides = json::array();
  for (const auto& [t, value] : f.f.overrides()) overrides.push_back({to_json(t), to_json(value)});
  return {{"name", f.name},
          {"domain", {to_json(f.lo()), to_json(f.hi())}},
          {"breakpoints", vector_to_json(f.f.breakpoints())},
          {"pieces", pieces},
          {"overrides", overrides}};
}

BoundFunction bound_from_json(const json& j) {
  const json& name = field(j, "name");
  if (!name.is_string()) throw Error(ErrorCode::ParseError, "name must be a string");
  std::vector<QuadPoly> pieces;
  for (const auto& p : array_field(j, "pieces")) {
    if (!p.is_array() || p.size() != 3) throw Error(ErrorCode::ParseError, "piece must be [c2, c1, c0]");
    pieces.push_back({rational_from_json(p[0]), rational_from_json(p[1]), rational_from_json(p[2])});
  }
  std::map<Rational, Rational> overrides;
  if (j.contains("overrides")) {
    for (const auto& o : array_field(j, "overrides")) {
      if (!o.is_array() || o.size() != 2) throw Error(ErrorCode::ParseError, "override must be [t, value]");
      overrides.emplace(rational_from_json(o[0]), rational_from_json(o[1]));
    }
  }
  BoundFunction f{name.get<std::string>(),
                  PiecewiseQuad(vector_from_json(array_field(j, "breakpoints")), std::move(pieces), std::move(overrides))};
  if (j.contains("domain")) {
    const RationalVector domain = vector_from_json(j.at("domain"));
    if (domain.size() != 2 || domain[0] != f.lo() || domain[1] != f.hi()) {
      throw Error(ErrorCode::ParseError, "domain does not match the breakpoints");
    }
  }
  return f;
}

json to_json(const SurfaceLattice& lattice) {
  json gram = json::array();
  for (const auto& row : lattice.gram()) gram.push_back(vector_to_json(row));
  return {{"basis", lattice.basis()},
          {"gram", gram},
          {"canonical", vector_to_json(lattice.canonical())},
          {"todd2", to_json(lattice.todd2())},
          {"polarization", vector_to_json(lattice.polarization())}};
}

SurfaceLattice lattice_from_json(const json& j) {
  std::vector<std::string> basis;
  for (const auto& b : array_field(j, "basis")) {
    if (!b.is_string()) throw Error(ErrorCode::ParseError, "basis names must be strings");
    basis.push_back(b.get<std::string>());
  }
  std::vector<RationalVector> gram;
  for (const auto& row : array_field(j, "gram")) gram.push_back(vector_from_json(row));
  return SurfaceLattice(std::move(basis), std::move(gram), vector_from_json(array_field(j, "canonical")),
                        rational_from_json(field(j, "todd2")), vector_from_json(array_field(j, "polarization")));
}

json to_json(const LatticeChern& v) {
  return {{"r", to_json(v.r)}, {"c1", vector_to_json(v.c1)}, {"ch2", to_json(v.ch2)}};
}

LatticeChern lattice_chern_from_json(const json& j) {
  return {rational_from_json(field(j, "r")), vector_from_json(array_field(j, "c1")), rational_from_json(field(j, "ch2"))};
}

}  // namespace tiltbg::json_io
