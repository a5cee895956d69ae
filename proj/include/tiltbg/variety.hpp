#pragma once

#include <string>
#include <string_view>

namespace tiltbg {

/// A polarized variety known only through its dimension n and Hⁿ.
///
/// ℙ³ has n = 3, H³ = 1; a degree-d hypersurface S^n_d ⊂ ℙ^{n+1} has Hⁿ = d.
class Variety {
 public:
  enum class Kind { ProjSpace3, Hypersurface };

  static Variety p3() { return Variety(Kind::ProjSpace3, 3, 1); }
  static Variety hypersurface(int n, int d);

  /// Accepts "P3" or "S^n_d" (e.g. "S^2_4").
  static Variety parse(std::string_view text);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  int degree() const { return degree_; }
  /// Hⁿ, written e in the formulas.
  int hdeg() const { return degree_; }
  bool is_p3() const { return kind_ == Kind::ProjSpace3; }

  std::string name() const;

  friend bool operator==(const Variety&, const Variety&) = default;

 private:
  Variety(Kind kind, int dim, int degree) : kind_(kind), dim_(dim), degree_(degree) {}

  Kind kind_;
  int dim_;
  int degree_;
};

}  // namespace tiltbg
