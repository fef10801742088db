#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dillab/rational.hpp"

namespace dillab {

/// Coordinates in the basis (a_1..a_g, b_1..b_g) of H_1 of the closed genus-g
/// surface, with <a_i, b_j> = delta_ij.
struct HomologyClass {
  std::vector<Integer> coords;

  HomologyClass() = default;
  explicit HomologyClass(std::vector<Integer> c);
  static HomologyClass zero(unsigned long g);
  static HomologyClass alpha(unsigned long g, unsigned long i);  // i in [0, g)
  static HomologyClass beta(unsigned long g, unsigned long i);

  unsigned long genus() const { return coords.size() / 2; }
  bool is_zero() const;
  bool operator==(const HomologyClass&) const = default;
};

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b);
HomologyClass operator*(const Integer& s, const HomologyClass& a);

/// u^T J v; GenusMismatch when the sizes differ.
Integer symp_form(const HomologyClass& u, const HomologyClass& v);

/// Integer 2g x 2g matrix acting on column vectors of coordinates.
class SympAction {
 public:
  explicit SympAction(unsigned long g);  // identity
  static SympAction identity(unsigned long g) { return SympAction(g); }

  unsigned long genus() const { return g_; }
  std::size_t dim() const { return 2 * g_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * dim() + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * dim() + j]; }

  HomologyClass apply(const HomologyClass& v) const;
  Integer trace() const;
  /// A^T J A == J exactly.
  bool is_symplectic() const;
  bool operator==(const SympAction&) const = default;

 private:
  unsigned long g_;
  std::vector<Integer> a_;
};

SympAction operator*(const SympAction& a, const SympAction& b);

/// v -> v + power <v, gamma> gamma; gamma of genus g >= 1.
SympAction transvection(const HomologyClass& gamma, const Integer& power);

struct Twist {
  HomologyClass gamma;
  Integer power;
};

struct MultitwistResult {
  SympAction action{1};
  Integer lefschetz;  // 2 - trace(action)
};

/// Product T_1 T_2 ... of the transvections (applied right to left) and its
/// Lefschetz number. Throws GenusMismatch, InvalidArgument for a zero power or
/// g = 0, NotPairwiseOrthogonal when some <gamma_i, gamma_j> != 0.
MultitwistResult multitwist(const std::vector<Twist>& twists, unsigned long g);
Integer multitwist_lefschetz(const std::vector<Twist>& twists, unsigned long g);

/// Parses "a1:3,b2:-1" (1-based basis labels, comma separated, optional
/// linear combinations like "a1+2b2:5"). ParseError on bad input.
std::vector<Twist> parse_twists(const std::string& text, unsigned long g);

// ---------------------------------------------------------------------------
// Local fixed-point index of plane models at the origin.

/// (x, y) -> (a x + b y, c x + d y)
struct LinearModel {
  double a = 1, b = 0, c = 0, d = 1;
};

/// Rotation by 2 pi j / k.
struct RotationModel {
  long j = 1;
  long k = 1;
};

using PlaneModel = std::variant<LinearModel, RotationModel>;

struct IndexOptions {
  unsigned long samples = 64;
  double radius = 1.0;
  unsigned long max_samples = 1UL << 20;
};

/// Winding number of z -> f(z) - z along the circle of the given radius.
/// Samples are doubled until every angle increment is below pi/2.
/// FixedPointOnCircle when f(z) = z at a sample; IncrementTooLarge when
/// max_samples is not enough.
long local_index(const PlaneModel& model, const IndexOptions& options = {});

/// sign(det(A - I)) for a linear model; 0 when the determinant vanishes.
int linear_index_oracle(const LinearModel& m);

}  // namespace dillab
