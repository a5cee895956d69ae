#include "tiltbg/variety.hpp"

#include <charconv>

#include "tiltbg/error.hpp"

namespace tiltbg {

Variety Variety::hypersurface(int n, int d) {
  if (n < 2) throw Error(ErrorCode::DomainError, "hypersurface dimension must be at least 2");
  if (d < 1) throw Error(ErrorCode::InvalidDegree, "hypersurface degree must be at least 1");
  return Variety(Kind::Hypersurface, n, d);
}

Variety Variety::parse(std::string_view text) {
  if (text == "P3") return p3();
  // S^n_d
  const auto caret = text.find('^');
  const auto under = text.find('_');
  if (text.size() < 5 || text[0] != 'S' || caret != 1 || under == std::string_view::npos || under < caret) {
    throw Error(ErrorCode::ParseError, "unknown variety '" + std::string(text) + "'");
  }
  int n = 0;
  int d = 0;
  const auto ns = text.substr(caret + 1, under - caret - 1);
  const auto ds = text.substr(under + 1);
  auto rn = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  auto rd = std::from_chars(ds.data(), ds.data() + ds.size(), d);
  if (rn.ec != std::errc() || rn.ptr != ns.data() + ns.size() || rd.ec != std::errc() ||
      rd.ptr != ds.data() + ds.size()) {
    throw Error(ErrorCode::ParseError, "unknown variety '" + std::string(text) + "'");
  }
  return hypersurface(n, d);
}

std::string Variety::name() const {
  if (is_p3()) return "P3";
  return "S^" + std::to_string(dim_) + "_" + std::to_string(degree_);
}

}  // namespace tiltbg
