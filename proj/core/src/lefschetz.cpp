#include "dillab/lefschetz.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "dillab/error.hpp"

namespace dillab {

HomologyClass::HomologyClass(std::vector<Integer> c) : coords(std::move(c)) {
  if (coords.size() % 2 != 0) throw Error(Errc::InvalidArgument, "homology class needs an even number of coordinates");
}

HomologyClass HomologyClass::zero(unsigned long g) { return HomologyClass(std::vector<Integer>(2 * g)); }

HomologyClass HomologyClass::alpha(unsigned long g, unsigned long i) {
  if (i >= g) throw Error(Errc::InvalidArgument, "basis index out of range");
  HomologyClass h = zero(g);
  h.coords[i] = 1;
  return h;
}

HomologyClass HomologyClass::beta(unsigned long g, unsigned long i) {
  if (i >= g) throw Error(Errc::InvalidArgument, "basis index out of range");
  HomologyClass h = zero(g);
  h.coords[g + i] = 1;
  return h;
}

bool HomologyClass::is_zero() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

HomologyClass operator+(const HomologyClass& a, const HomologyClass& b) {
  if (a.coords.size() != b.coords.size()) throw Error(Errc::GenusMismatch, "adding classes of different genus");
  HomologyClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

HomologyClass operator*(const Integer& s, const HomologyClass& a) {
  HomologyClass out = a;
  for (auto& c : out.coords) c *= s;
  return out;
}

Integer symp_form(const HomologyClass& u, const HomologyClass& v) {
  if (u.coords.size() != v.coords.size()) {
    throw Error(Errc::GenusMismatch, "symplectic form of classes with genus " + std::to_string(u.genus()) + " and " +
                                         std::to_string(v.genus()));
  }
  const std::size_t g = u.genus();
  Integer s = 0;
  for (std::size_t i = 0; i < g; ++i) s += u.coords[i] * v.coords[g + i] - u.coords[g + i] * v.coords[i];
  return s;
}

SympAction::SympAction(unsigned long g) : g_(g), a_(4 * g * g) {
  for (std::size_t i = 0; i < dim(); ++i) (*this)(i, i) = 1;
}

HomologyClass SympAction::apply(const HomologyClass& v) const {
  if (v.coords.size() != dim()) throw Error(Errc::GenusMismatch, "action and class have different genus");
  HomologyClass out = HomologyClass::zero(g_);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) out.coords[i] += (*this)(i, j) * v.coords[j];
  }
  return out;
}

Integer SympAction::trace() const {
  Integer t = 0;
  for (std::size_t i = 0; i < dim(); ++i) t += (*this)(i, i);
  return t;
}

bool SympAction::is_symplectic() const {
  // <A e_i, A e_j> must equal <e_i, e_j> for every pair of basis vectors.
  std::vector<HomologyClass> cols;
  cols.reserve(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    HomologyClass c = HomologyClass::zero(g_);
    for (std::size_t i = 0; i < dim(); ++i) c.coords[i] = (*this)(i, j);
    cols.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      const int expected = (j == i + g_ && i < g_) ? 1 : (i == j + g_ && j < g_) ? -1 : 0;
      if (symp_form(cols[i], cols[j]) != expected) return false;
    }
  }
  return true;
}

SympAction operator*(const SympAction& a, const SympAction& b) {
  if (a.genus() != b.genus()) throw Error(Errc::GenusMismatch, "composing actions of different genus");
  SympAction out(a.genus());
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

SympAction transvection(const HomologyClass& gamma, const Integer& power) {
  const unsigned long g = gamma.genus();
  if (g == 0) throw Error(Errc::InvalidArgument, "transvection needs genus >= 1");
  SympAction t(g);
  for (std::size_t j = 0; j < t.dim(); ++j) {
    // <e_j, gamma>
    const Integer pairing = j < g ? gamma.coords[g + j] : Integer(-gamma.coords[j - g]);
    if (pairing == 0) continue;
    const Integer scale = power * pairing;
    for (std::size_t i = 0; i < t.dim(); ++i) t(i, j) += scale * gamma.coords[i];
  }
  return t;
}

MultitwistResult multitwist(const std::vector<Twist>& twists, unsigned long g) {
  if (g == 0) throw Error(Errc::InvalidArgument, "multitwist needs genus >= 1");
  for (std::size_t i = 0; i < twists.size(); ++i) {
    if (twists[i].gamma.coords.size() != 2 * g) {
      throw Error(Errc::GenusMismatch, "twist " + std::to_string(i + 1) + " has the wrong genus");
    }
    if (twists[i].power == 0) throw Error(Errc::InvalidArgument, "twist powers must be nonzero");
  }
  for (std::size_t i = 0; i < twists.size(); ++i) {
    for (std::size_t j = i + 1; j < twists.size(); ++j) {
      if (symp_form(twists[i].gamma, twists[j].gamma) != 0) {
        throw Error(Errc::NotPairwiseOrthogonal,
                    "twists " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " intersect homologically");
      }
    }
  }
  MultitwistResult r;
  r.action = SympAction(g);
  for (const auto& t : twists) r.action = r.action * transvection(t.gamma, t.power);
  r.lefschetz = 2 - r.action.trace();
  return r;
}

Integer multitwist_lefschetz(const std::vector<Twist>& twists, unsigned long g) {
  return multitwist(twists, g).lefschetz;
}

namespace {

[[noreturn]] void bad_twist(const std::string& text, const std::string& why) {
  throw Error(Errc::ParseError, "bad twist '" + text + "': " + why);
}

HomologyClass parse_class(const std::string& s, unsigned long g) {
  HomologyClass h = HomologyClass::zero(g);
  std::size_t pos = 0;
  if (s.empty()) bad_twist(s, "empty class");
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      bad_twist(s, "expected + or -");
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    const Integer coeff = pos > start ? Integer(s.substr(start, pos - start)) : Integer(1);
    if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'b')) bad_twist(s, "expected a<i> or b<i>");
    const bool is_alpha = s[pos] == 'a';
    start = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad_twist(s, "missing basis index");
    const unsigned long idx = std::stoul(s.substr(start, pos - start));
    if (idx < 1 || idx > g) bad_twist(s, "basis index out of range 1.." + std::to_string(g));
    h.coords[(is_alpha ? 0 : g) + idx - 1] += sign * coeff;
  }
  return h;
}

}  // namespace

std::vector<Twist> parse_twists(const std::string& text, unsigned long g) {
  std::vector<Twist> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const std::size_t colon = item.rfind(':');
    if (colon == std::string::npos) bad_twist(item, "expected class:power");
    Twist t;
    t.gamma = parse_class(item.substr(0, colon), g);
    try {
      t.power = parse_integer(item.substr(colon + 1));
    } catch (const Error&) {
      bad_twist(item, "power is not an integer");
    }
    out.push_back(std::move(t));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

struct Vec2 {
  double x, y;
};

Vec2 displacement(const PlaneModel& model, double x, double y) {
  if (const auto* lin = std::get_if<LinearModel>(&model)) {
    return {lin->a * x + lin->b * y - x, lin->c * x + lin->d * y - y};
  }
  const auto& rot = std::get<RotationModel>(model);
  const double theta = 2 * std::numbers::pi * static_cast<double>(rot.j) / static_cast<double>(rot.k);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * x - s * y - x, s * x + c * y - y};
}

}  // namespace

long local_index(const PlaneModel& model, const IndexOptions& options) {
  if (const auto* rot = std::get_if<RotationModel>(&model); rot && rot->k == 0) {
    throw Error(Errc::InvalidArgument, "rotation model needs k != 0");
  }
  if (!(options.radius > 0)) throw Error(Errc::InvalidArgument, "radius must be positive");
  if (options.samples < 4) throw Error(Errc::InvalidArgument, "need at least 4 samples");
  const double tiny = 1e-12 * options.radius;

  for (unsigned long n = options.samples; n <= options.max_samples; n *= 2) {
    double total = 0;
    bool fine = true;
    double prev = 0;
    for (unsigned long k = 0; k <= n; ++k) {
      const double t = 2 * std::numbers::pi * static_cast<double>(k % n) / static_cast<double>(n);
      const Vec2 d = displacement(model, options.radius * std::cos(t), options.radius * std::sin(t));
      if (std::hypot(d.x, d.y) <= tiny) {
        throw Error(Errc::FixedPointOnCircle, "f(z) = z on the sample circle");
      }
      const double angle = std::atan2(d.y, d.x);
      if (k > 0) {
        double inc = angle - prev;
        if (inc > std::numbers::pi) inc -= 2 * std::numbers::pi;
        if (inc <= -std::numbers::pi) inc += 2 * std::numbers::pi;
        if (std::abs(inc) >= std::numbers::pi / 2) {
          fine = false;
          break;
        }
        total += inc;
      }
      prev = angle;
    }
    if (fine) return std::lround(total / (2 * std::numbers::pi));
  }
  throw Error(Errc::IncrementTooLarge, "angle increments stay >= pi/2 at " + std::to_string(options.max_samples) +
                                           " samples");
}

int linear_index_oracle(const LinearModel& m) {
  const double det = (m.a - 1) * (m.d - 1) - m.b * m.c;
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

}  // namespace dillab
