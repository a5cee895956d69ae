#pragma once

#include <json.hpp>

#include "tiltbg/bounds.hpp"
#include "tiltbg/chern.hpp"
#include "tiltbg/lattice.hpp"
#include "tiltbg/rational.hpp"
#include "tiltbg/surd.hpp"
#include "tiltbg/tilt.hpp"

// JSON forms shared by every CLI command. Rationals are always strings
// ("p/q", or "p" for integers); integer JSON numbers are accepted on input.
namespace tiltbg::json_io {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const QuadSurd& x);
QuadSurd surd_from_json(const json& j);

/// {"variety": "P3", "s": ["1", "0", "0", "0"]}
json to_json(const NumChern& v);
NumChern num_chern_from_json(const json& j);

/// {"slope": ..., "intercept": ..., "pivots": [[beta, alpha], ...]}
json to_json(const Wall& w);
Wall wall_from_json(const json& j);

/// {"beta": ..., "alpha": ...}
json to_json(const SurdPoint& p);
SurdPoint surd_point_from_json(const json& j);

/// {"name": ..., "domain": [lo, hi], "breakpoints": [...],
///  "pieces": [[c2, c1, c0], ...], "overrides": [[t, value], ...]}
json to_json(const BoundFunction& f);
BoundFunction bound_from_json(const json& j);

/// {"basis": [...], "gram": [[...]], "canonical": [...], "todd2": ..., "polarization": [...]}
json to_json(const SurfaceLattice& lattice);
SurfaceLattice lattice_from_json(const json& j);

/// {"r": ..., "c1": [...], "ch2": ...}
json to_json(const LatticeChern& v);
LatticeChern lattice_chern_from_json(const json& j);

}  // namespace tiltbg::json_io
