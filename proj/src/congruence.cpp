#include "seltwist/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "seltwist/parallel.hpp"

namespace seltwist {

namespace {

Rational prob_val(const BigInt& p, int j) {
  // natural density of v_p(n) = j among all integers
  Rational x(BigInt(1), p);
  return (Rational(1) - x) * x.pow(j);
}

Rational square_unit_fraction(const BigInt& p) {
  return p == BigInt(2) ? Rational(1, 4) : Rational(1, 2);
}

Rational cube_unit_fraction(const BigInt& p) {
  if (p == BigInt(3) || p.mod_u64(3) == 1) return Rational(1, 3);
  return Rational(1);
}

bool in(const std::vector<int>& v, int j) {
  return std::find(v.begin(), v.end(), j) != v.end();
}

bool residue_is_square_unit(long long u, const BigInt& p) {
  if (p == BigInt(2)) return u % 8 == 1;
  if (p == BigInt(3)) return u % 3 == 1;
  return unit_is_square_mod_p(static_cast<unsigned long long>(u),
                              static_cast<unsigned long long>(p.to_u128_abs()));
}

}  // namespace

long long LocalCondition::modulus() const {
  if (prime == BigInt(2)) return 8;
  if (prime == BigInt(3)) return 27;
  if (!prime.fits_i64()) throw DomainError("residue conditions need a machine-size prime");
  return prime.to_i64();
}

bool LocalCondition::matches(const TwistClass& d) const {
  const BigInt& dv = d.value();
  int v = d.factorization().exponent_of(prime);
  switch (kind) {
    case CondKind::Vals:
      return in(vals, v);
    case CondKind::Units: {
      if (v != 0) return false;
      long long r = static_cast<long long>(dv.mod_u64(static_cast<unsigned long long>(modulus())));
      return std::binary_search(residues.begin(), residues.end(), r);
    }
    case CondKind::DivOrUnits: {
      if (v > 0) return true;
      long long r = static_cast<long long>(dv.mod_u64(static_cast<unsigned long long>(modulus())));
      return std::binary_search(residues.begin(), residues.end(), r);
    }
    case CondKind::Div:
      return yes == (v > 0);
    case CondKind::Square:
      return is_square_in_qp(dv, prime) == yes;
    case CondKind::SquareM3:
      return is_square_in_qp(BigInt(-3) * dv, prime) == yes;
    case CondKind::Cube:
      return is_cube_in_qp(dv, prime) == yes;
    case CondKind::Sixth:
      return is_sixth_power_in_qp(dv, prime) == yes;
    case CondKind::NonsquarePair:
      return !is_square_in_qp(dv, prime) && !is_square_in_qp(BigInt(-3) * dv, prime);
    case CondKind::CubeOrDiv:
      return v > 0 || is_cube_in_qp(dv, prime);
    case CondKind::CubeNonsquareOrDiv:
      return v > 0 || (is_cube_in_qp(dv, prime) && !is_square_in_qp(dv, prime));
  }
  throw DomainError("unreachable condition kind");
}

Rational LocalCondition::measure(const std::vector<int>& g) const {
  const BigInt& p = prime;
  Rational total(0);
  auto sum_vals = [&](auto&& keep) {
    Rational s(0);
    for (int j : g)
      if (keep(j)) s += prob_val(p, j);
    return s;
  };
  Rational m_all = sum_vals([](int) { return true; });

  switch (kind) {
    case CondKind::Vals:
      return sum_vals([&](int j) { return in(vals, j); });
    case CondKind::Units:
      if (!in(g, 0)) return Rational(0);
      return prob_val(p, 0) * Rational(static_cast<long long>(residues.size()),
                                       static_cast<long long>(unit_count()));
    case CondKind::DivOrUnits: {
      Rational s = sum_vals([](int j) { return j > 0; });
      if (in(g, 0))
        s += prob_val(p, 0) * Rational(static_cast<long long>(residues.size()),
                                       static_cast<long long>(unit_count()));
      return s;
    }
    case CondKind::Div: {
      Rational s = sum_vals([](int j) { return j > 0; });
      return yes ? s : m_all - s;
    }
    case CondKind::Square: {
      Rational s = sum_vals([](int j) { return j % 2 == 0; }) * square_unit_fraction(p);
      return yes ? s : m_all - s;
    }
    case CondKind::SquareM3: {
      Rational s(0);
      if (p == BigInt(3)) {
        // v_3(-3d) = v_3(d)+1, unit flips sign; half the units work
        s = sum_vals([](int j) { return j % 2 == 1; }) * Rational(1, 2);
      } else {
        // u -> -3u permutes the unit classes
        s = sum_vals([](int j) { return j % 2 == 0; }) * square_unit_fraction(p);
      }
      return yes ? s : m_all - s;
    }
    case CondKind::Cube: {
      Rational s = sum_vals([](int j) { return j % 3 == 0; }) * cube_unit_fraction(p);
      return yes ? s : m_all - s;
    }
    case CondKind::Sixth: {
      Rational s = sum_vals([](int j) { return j % 6 == 0; }) * square_unit_fraction(p) *
                   cube_unit_fraction(p);
      return yes ? s : m_all - s;
    }
    case CondKind::NonsquarePair: {
      for (int j : g) {
        Rational frac;
        if (p == BigInt(3)) {
          frac = Rational(1, 2);
        } else if (j % 2 == 1) {
          frac = Rational(1);
        } else if (p == BigInt(2) || p.mod_u64(3) == 1) {
          frac = Rational(1, 2);
        } else {
          frac = Rational(0);  // -3 is a non-square: u, -3u cannot both be non-squares
        }
        total += prob_val(p, j) * frac;
      }
      return total;
    }
    case CondKind::CubeOrDiv: {
      Rational s = sum_vals([](int j) { return j > 0; });
      if (in(g, 0)) s += prob_val(p, 0) * cube_unit_fraction(p);
      return s;
    }
    case CondKind::CubeNonsquareOrDiv: {
      Rational s = sum_vals([](int j) { return j > 0; });
      if (in(g, 0)) {
        Rational frac;
        if (p == BigInt(3) || p.mod_u64(3) == 1)
          frac = Rational(1, 6);  // cubes minus sixth powers
        else if (p == BigInt(2))
          frac = Rational(3, 4);  // every unit is a cube; drop 1 mod 8
        else
          frac = Rational(1, 2);  // every unit is a cube; drop the squares
        s += prob_val(p, 0) * frac;
      }
      return s;
    }
  }
  throw DomainError("unreachable condition kind");
}

bool LocalCondition::square_achievable(const std::vector<int>& g) const {
  const BigInt& p = prime;
  bool even_positive = false;
  for (int j : g)
    if (j > 0 && j % 2 == 0) even_positive = true;
  bool has_zero = in(g, 0);

  auto units_have_square = [&](const std::vector<long long>& rs) {
    for (long long r : rs)
      if (residue_is_square_unit(r, p)) return true;
    return false;
  };

  switch (kind) {
    case CondKind::Vals: {
      for (int j : vals)
        if (in(g, j) && j % 2 == 0) return true;
      return false;
    }
    case CondKind::Units:
      return has_zero && units_have_square(residues);
    case CondKind::DivOrUnits:
      return even_positive || (has_zero && units_have_square(residues));
    case CondKind::Div:
      return yes ? even_positive : has_zero;
    case CondKind::Square:
      return yes;  // "no" rules squares out entirely
    case CondKind::SquareM3: {
      if (p == BigInt(3)) {
        // yes-cells have odd v_3(d): never a square; no-cells include square units
        return !yes && has_zero;
      }
      bool minus3_square = p != BigInt(2) && p.mod_u64(3) == 1;
      // d and -3d share square class iff -3 is a square at p
      if (yes) return minus3_square && (has_zero || even_positive);
      return !minus3_square ? (has_zero || even_positive) : false;
    }
    case CondKind::Cube: {
      if (yes) return has_zero;  // units that are cubes and squares always exist
      // complement: square non-cube units exist only when cubes are index 3
      bool cubes_proper = p == BigInt(3) || p.mod_u64(3) == 1;
      return (has_zero && cubes_proper) || even_positive;
    }
    case CondKind::Sixth: {
      if (yes) return has_zero || even_positive;
      bool cubes_proper = p == BigInt(3) || p.mod_u64(3) == 1;
      return (has_zero && cubes_proper) || even_positive;
    }
    case CondKind::NonsquarePair:
      return false;
    case CondKind::CubeOrDiv:
      return has_zero || even_positive;  // sixth-power units exist
    case CondKind::CubeNonsquareOrDiv:
      return even_positive;  // unit route forces a non-square
  }
  throw DomainError("unreachable condition kind");
}

long long LocalCondition::unit_count() const {
  long long m = modulus();
  if (prime == BigInt(2)) return 4;    // units mod 8
  if (prime == BigInt(3)) return 18;   // units mod 27
  return m - 1;
}

namespace {

const char* kind_name(CondKind k) {
  switch (k) {
    case CondKind::Vals: return "vals";
    case CondKind::Units: return "units";
    case CondKind::DivOrUnits: return "div_or_units";
    case CondKind::Div: return "div";
    case CondKind::Square: return "square";
    case CondKind::SquareM3: return "square_m3";
    case CondKind::Cube: return "cube";
    case CondKind::Sixth: return "sixth";
    case CondKind::NonsquarePair: return "nonsquare_pair";
    case CondKind::CubeOrDiv: return "cube_or_div";
    case CondKind::CubeNonsquareOrDiv: return "cube_nonsquare_or_div";
  }
  return "?";
}

CondKind kind_from_name(const std::string& s) {
  static const std::map<std::string, CondKind> m = {
      {"vals", CondKind::Vals},
      {"units", CondKind::Units},
      {"div_or_units", CondKind::DivOrUnits},
      {"div", CondKind::Div},
      {"square", CondKind::Square},
      {"square_m3", CondKind::SquareM3},
      {"cube", CondKind::Cube},
      {"sixth", CondKind::Sixth},
      {"nonsquare_pair", CondKind::NonsquarePair},
      {"cube_or_div", CondKind::CubeOrDiv},
      {"cube_nonsquare_or_div", CondKind::CubeNonsquareOrDiv},
  };
  auto it = m.find(s);
  if (it == m.end()) throw DomainError("unknown condition kind: " + s);
  return it->second;
}

const char* scope_name(SignScope s) {
  switch (s) {
    case SignScope::All: return "all";
    case SignScope::Pos: return "pos";
    case SignScope::Neg: return "neg";
  }
  return "?";
}

SignScope scope_from_name(const std::string& s) {
  if (s == "all") return SignScope::All;
  if (s == "pos") return SignScope::Pos;
  if (s == "neg") return SignScope::Neg;
  throw DomainError("unknown scope: " + s);
}

bool uses_residues(CondKind k) { return k == CondKind::Units || k == CondKind::DivOrUnits; }
bool uses_vals(CondKind k) { return k == CondKind::Vals; }

}  // namespace

std::string LocalCondition::serialize() const {
  std::ostringstream os;
  os << "p=" << prime.to_string() << " kind=" << kind_name(kind) << " allowed=";
  if (uses_vals(kind)) {
    for (size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
  } else if (uses_residues(kind)) {
    for (size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  } else if (kind == CondKind::NonsquarePair) {
    os << "yes";
  } else {
    os << (yes ? "yes" : "no");
  }
  os << " scope=" << scope_name(scope);
  return os.str();
}

LocalCondition LocalCondition::parse_line(const std::string& line) {
  std::istringstream is(line);
  std::string tok;
  LocalCondition c;
  bool have_p = false, have_kind = false, have_allowed = false;
  std::string allowed;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw DomainError("bad condition token: " + tok);
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "p") {
      c.prime = BigInt::from_string(val);
      have_p = true;
    } else if (key == "kind") {
      c.kind = kind_from_name(val);
      have_kind = true;
    } else if (key == "allowed") {
      allowed = val;
      have_allowed = true;
    } else if (key == "scope") {
      c.scope = scope_from_name(val);
    } else {
      throw DomainError("unknown condition field: " + key);
    }
  }
  if (!have_p || !have_kind || !have_allowed) throw DomainError("incomplete condition line");
  if (uses_vals(c.kind) || uses_residues(c.kind)) {
    std::istringstream vs(allowed);
    std::string item;
    while (std::getline(vs, item, ',')) {
      long long x = std::stoll(item);
      if (uses_vals(c.kind))
        c.vals.push_back(static_cast<int>(x));
      else
        c.residues.push_back(x);
    }
    std::sort(c.vals.begin(), c.vals.end());
    std::sort(c.residues.begin(), c.residues.end());
  } else {
    c.yes = allowed == "yes";
    if (allowed != "yes" && allowed != "no") throw DomainError("allowed must be yes/no");
  }
  return c;
}

std::vector<int> CongruenceSet::effective_vals() const {
  int cap = ambient == Ambient::Squarefree ? 1 : 5;
  std::vector<int> g;
  for (int j : global_vals)
    if (j >= 0 && j <= cap) g.push_back(j);
  return g;
}

bool CongruenceSet::contains(const TwistClass& d) const {
  std::vector<int> g = effective_vals();
  for (const auto& [p, e] : d.factorization().factors)
    if (!in(g, e)) return false;
  bool positive = d.sign() > 0;
  for (const LocalCondition& c : conditions) {
    if (c.scope == SignScope::Pos && !positive) continue;
    if (c.scope == SignScope::Neg && positive) continue;
    if (!c.matches(d)) return false;
  }
  return true;
}

bool CongruenceSet::contains(const BigInt& d) const {
  if (d.is_zero()) throw ZeroInputError();
  return contains(TwistClass(d));
}

void CongruenceSet::canonicalize() {
  std::sort(global_vals.begin(), global_vals.end());
  global_vals.erase(std::unique(global_vals.begin(), global_vals.end()), global_vals.end());
  std::sort(conditions.begin(), conditions.end(),
            [](const LocalCondition& a, const LocalCondition& b) {
              if (a.prime != b.prime) return a.prime < b.prime;
              return static_cast<int>(a.scope) < static_cast<int>(b.scope);
            });
  for (size_t i = 0; i + 1 < conditions.size(); ++i) {
    const auto& a = conditions[i];
    const auto& b = conditions[i + 1];
    if (a.prime != b.prime) continue;
    bool overlap = a.scope == b.scope || a.scope == SignScope::All || b.scope == SignScope::All;
    if (overlap)
      throw DomainError("two conditions constrain the same prime for the same sign: p=" +
                        a.prime.to_string());
  }
}

std::string CongruenceSet::serialize() const {
  std::ostringstream os;
  os << "ambient=" << (ambient == Ambient::Squarefree ? "squarefree" : "sixth-power-free") << "\n";
  std::vector<int> full = {0, 1, 2, 3, 4, 5};
  if (global_vals != full) {
    os << "vals=";
    for (size_t i = 0; i < global_vals.size(); ++i) os << (i ? "," : "") << global_vals[i];
    os << "\n";
  }
  for (const auto& c : conditions) os << c.serialize() << "\n";
  return os.str();
}

CongruenceSet CongruenceSet::parse(const std::string& text) {
  CongruenceSet s;
  std::istringstream is(text);
  std::string line;
  bool have_ambient = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("ambient=", 0) == 0) {
      std::string v = line.substr(8);
      if (v == "squarefree")
        s.ambient = Ambient::Squarefree;
      else if (v == "sixth-power-free")
        s.ambient = Ambient::SixthPowerFree;
      else
        throw DomainError("unknown ambient: " + v);
      have_ambient = true;
    } else if (line.rfind("vals=", 0) == 0) {
      s.global_vals.clear();
      std::istringstream vs(line.substr(5));
      std::string item;
      while (std::getline(vs, item, ',')) s.global_vals.push_back(std::stoi(item));
    } else {
      s.conditions.push_back(LocalCondition::parse_line(line));
    }
  }
  if (!have_ambient) throw DomainError("missing ambient header");
  s.canonicalize();
  return s;
}

// ---------------------------------------------------------------------------
// the named sets
// ---------------------------------------------------------------------------

CongruenceSet sigma_set(const CurveEab& c) {
  CongruenceSet s;
  s.ambient = Ambient::SixthPowerFree;
  s.global_vals = {0, 1, 3, 5};
  LocalCondition at3{.prime = BigInt(3), .kind = CondKind::Cube};
  at3.yes = true;
  s.conditions.push_back(at3);
  for (const BigInt& p : c.bad_primes()) {
    LocalCondition lc{.prime = p, .kind = CondKind::CubeOrDiv};
    s.conditions.push_back(lc);
  }
  s.canonicalize();
  return s;
}

CongruenceSet t_prime_set(const CurveEab& c) {
  HypothesisCase h = hypothesis_case(c);
  if (!h.holds()) throw HypothesisNoneError();

  CongruenceSet s;
  s.ambient = Ambient::SixthPowerFree;
  s.global_vals = {0, 1, 3, 5};
  s.conditions.push_back({.prime = BigInt(3), .kind = CondKind::Cube});

  auto is_witness = [&](const BigInt& p) {
    if (h.kind == HypothesisCase::Kind::Case1) return p == h.q;
    return p == h.q1 || p == h.q2;
  };

  for (const BigInt& p : c.bad_primes()) {
    if (is_witness(p)) continue;
    LocalCondition lc{.prime = p};
    if (p == BigInt(2)) {
      // either 2 | d, or d and -3d are both non-squares; the admissible-set
      // cube condition is vacuous at 2
      lc.kind = CondKind::NonsquarePair;
    } else if (p.mod_u64(3) == 1) {
      // p | d, or d a non-square; intersected with the cube condition
      lc.kind = CondKind::CubeNonsquareOrDiv;
    } else {
      lc.kind = CondKind::Div;
      lc.yes = true;
    }
    s.conditions.push_back(lc);
  }

  // the sign-balancing witness: d < 0 with d a square unit, or d > 0 with
  // -3d a square unit
  const BigInt& q_sign = h.kind == HypothesisCase::Kind::Case1 ? h.q : h.q2;
  LocalCondition neg{.prime = q_sign, .kind = CondKind::Square, .scope = SignScope::Neg};
  neg.yes = true;
  LocalCondition pos{.prime = q_sign, .kind = CondKind::SquareM3, .scope = SignScope::Pos};
  pos.yes = true;
  s.conditions.push_back(neg);
  s.conditions.push_back(pos);

  if (h.kind == HypothesisCase::Kind::Case2) {
    // d a square unit at q1; with the cube condition this pins the sixth-power class
    LocalCondition q1{.prime = h.q1, .kind = CondKind::Sixth};
    q1.yes = true;
    s.conditions.push_back(q1);
  }

  s.canonicalize();
  return s;
}

CongruenceSet conductor35_explicit_t() {
  CongruenceSet s;
  s.ambient = Ambient::Squarefree;
  s.global_vals = {0, 1, 2, 3, 4, 5};
  LocalCondition at3{.prime = BigInt(3), .kind = CondKind::Units};
  at3.residues = {1, 8, 10, 17, 19, 26};  // mod 27
  LocalCondition at7{.prime = BigInt(7), .kind = CondKind::DivOrUnits};
  at7.residues = {6};
  LocalCondition at5n{.prime = BigInt(5), .kind = CondKind::Units, .scope = SignScope::Neg};
  at5n.residues = {1, 4};
  LocalCondition at5p{.prime = BigInt(5), .kind = CondKind::Units, .scope = SignScope::Pos};
  at5p.residues = {2, 3};
  s.conditions = {at3, at7, at5n, at5p};
  s.canonicalize();
  return s;
}

// ---------------------------------------------------------------------------
// density
// ---------------------------------------------------------------------------

const LocalCondition* condition_at(const CongruenceSet& s, const BigInt& p, bool positive) {
  for (const auto& c : s.conditions) {
    if (c.prime != p) continue;
    if (c.scope == SignScope::All) return &c;
    if (positive && c.scope == SignScope::Pos) return &c;
    if (!positive && c.scope == SignScope::Neg) return &c;
  }
  return nullptr;
}

bool branch_satisfiable(const CongruenceSet& s, bool positive) {
  std::vector<int> g = s.effective_vals();
  if (g.empty()) return false;
  for (const auto& c : s.conditions) {
    if (c.scope == SignScope::Pos && !positive) continue;
    if (c.scope == SignScope::Neg && positive) continue;
    if (c.measure(g).is_zero()) return false;
  }
  return true;
}

Density density(const CongruenceSet& s) {
  std::vector<int> g = s.effective_vals();
  Density out;
  out.ambient = s.ambient;
  out.global_vals = g;

  Rational branch_sum(0);
  for (bool positive : {false, true}) {
    Rational rel(1);
    for (const auto& c : s.conditions) {
      if (c.scope == SignScope::Pos && !positive) continue;
      if (c.scope == SignScope::Neg && positive) continue;
      Rational m_all(0);
      for (int j : g) m_all += prob_val(c.prime, j);
      rel *= c.measure(g) / m_all;
    }
    branch_sum += rel;
  }
  out.relative = branch_sum * Rational(1, 2);
  return out;
}

double Density::ambient_constant() const {
  // Truncated Euler product of the per-prime valuation-pattern densities.
  // The tail beyond 10^5 contributes less than 1e-6 relative error.
  double prod = 1.0;
  int cap = ambient == Ambient::Squarefree ? 1 : 5;
  for (uint32_t p : small_primes()) {
    double x = 1.0 / p;
    double factor = 0.0;
    for (int j : global_vals)
      if (j <= cap) factor += (1.0 - x) * std::pow(x, j);
    prod *= factor;
  }
  return prod;
}

double Density::approx() const { return relative.to_double() * ambient_constant(); }

// ---------------------------------------------------------------------------
// enumeration kernels
// ---------------------------------------------------------------------------

namespace {

constexpr long long kSieveLimit = 20'000'000;

// Compiled int64 evaluator for one condition.
struct FastCond {
  long long p;
  CondKind kind;
  SignScope scope;
  std::vector<int> vals;
  std::vector<long long> residues;
  bool yes;
  long long md;  // modulus for residue kinds

  bool check(long long d) const {
    long long abs_d = d < 0 ? -d : d;
    int v = 0;
    long long u = abs_d;
    while (u % p == 0) {
      u /= p;
      ++v;
    }
    long long su = d < 0 ? -u : u;  // signed unit part
    switch (kind) {
      case CondKind::Vals:
        return in(vals, v);
      case CondKind::Units:
        return v == 0 && std::binary_search(residues.begin(), residues.end(), ((su % md) + md) % md);
      case CondKind::DivOrUnits:
        return v > 0 || std::binary_search(residues.begin(), residues.end(), ((su % md) + md) % md);
      case CondKind::Div:
        return yes == (v > 0);
      case CondKind::Square:
        return is_square_in_qp_i64(d, p) == yes;
      case CondKind::SquareM3:
        return is_square_in_qp_i64(-3 * d, p) == yes;
      case CondKind::Cube:
        return is_cube_in_qp_i64(d, p) == yes;
      case CondKind::Sixth:
        return (is_square_in_qp_i64(d, p) && is_cube_in_qp_i64(d, p)) == yes;
      case CondKind::NonsquarePair:
        return !is_square_in_qp_i64(d, p) && !is_square_in_qp_i64(-3 * d, p);
      case CondKind::CubeOrDiv:
        return v > 0 || is_cube_in_qp_i64(d, p);
      case CondKind::CubeNonsquareOrDiv:
        return v > 0 || (is_cube_in_qp_i64(d, p) && !is_square_in_qp_i64(d, p));
    }
    return false;
  }
};

struct CompiledSet {
  bool squarefree;
  bool vals_mask[6];
  std::vector<FastCond> conds;

  explicit CompiledSet(const CongruenceSet& s) {
    squarefree = s.ambient == Ambient::Squarefree;
    for (int j = 0; j < 6; ++j) vals_mask[j] = false;
    for (int j : s.effective_vals()) vals_mask[j] = true;
    for (const auto& c : s.conditions) {
      if (!c.prime.fits_i64())
        throw DomainError("enumeration supports machine-size condition primes only");
      FastCond fc{c.prime.to_i64(), c.kind, c.scope, c.vals, c.residues, c.yes, 0};
      if (uses_residues(c.kind)) fc.md = c.modulus();
      conds.push_back(fc);
    }
  }

  // h > 0 with smallest-prime-factor table; both signs tested independently.
  bool ambient_ok(long long h, const std::vector<int32_t>& spf) const {
    while (h > 1) {
      long long p = spf[h];
      int e = 0;
      while (h % p == 0) {
        h /= p;
        ++e;
      }
      if (e > 5 || !vals_mask[e]) return false;
    }
    return true;
  }

  bool sign_ok(long long d) const {
    bool positive = d > 0;
    for (const auto& c : conds) {
      if (c.scope == SignScope::Pos && !positive) continue;
      if (c.scope == SignScope::Neg && positive) continue;
      if (!c.check(d)) return false;
    }
    return true;
  }
};

std::vector<int32_t> spf_sieve(long long bound) {
  if (bound >= kSieveLimit) throw DomainError("enumeration bound exceeds the sieve limit");
  std::vector<int32_t> spf(bound + 1, 0);
  for (long long i = 2; i <= bound; ++i) {
    if (spf[i] == 0)
      for (long long j = i; j <= bound; j += i)
        if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
  }
  if (bound >= 1) spf[1] = 1;
  return spf;
}

}  // namespace

std::vector<long long> enumerate_members_serial(const CongruenceSet& s, long long bound) {
  std::vector<long long> out;
  if (bound <= 0) return out;
  CompiledSet cs(s);
  std::vector<int32_t> spf = spf_sieve(bound);
  for (long long h = 1; h <= bound; ++h) {
    if (!cs.ambient_ok(h, spf)) continue;
    if (cs.sign_ok(-h)) out.push_back(-h);
    if (cs.sign_ok(h)) out.push_back(h);
  }
  return out;
}

std::vector<long long> enumerate_members(const CongruenceSet& s, long long bound) {
  std::vector<long long> out;
  if (bound <= 0) return out;
  CompiledSet cs(s);
  std::vector<int32_t> spf = spf_sieve(bound);
  int workers = worker_count();
  std::vector<std::vector<long long>> chunks(workers);
  parallel_for_chunks(1, bound + 1, workers, [&](int w, long long lo, long long hi) {
    auto& local = chunks[w];
    for (long long h = lo; h < hi; ++h) {
      if (!cs.ambient_ok(h, spf)) continue;
      if (cs.sign_ok(-h)) local.push_back(-h);
      if (cs.sign_ok(h)) local.push_back(h);
    }
  });
  for (auto& c : chunks) out.insert(out.end(), c.begin(), c.end());
  return out;
}

long long count_members_serial(const CongruenceSet& s, long long bound) {
  if (bound <= 0) return 0;
  CompiledSet cs(s);
  std::vector<int32_t> spf = spf_sieve(bound);
  long long n = 0;
  for (long long h = 1; h <= bound; ++h) {
    if (!cs.ambient_ok(h, spf)) continue;
    n += cs.sign_ok(-h) ? 1 : 0;
    n += cs.sign_ok(h) ? 1 : 0;
  }
  return n;
}

long long count_members(const CongruenceSet& s, long long bound) {
  if (bound <= 0) return 0;
  CompiledSet cs(s);
  std::vector<int32_t> spf = spf_sieve(bound);
  int workers = worker_count();
  std::vector<long long> counts(workers, 0);
  parallel_for_chunks(1, bound + 1, workers, [&](int w, long long lo, long long hi) {
    long long n = 0;
    for (long long h = lo; h < hi; ++h) {
      if (!cs.ambient_ok(h, spf)) continue;
      n += cs.sign_ok(-h) ? 1 : 0;
      n += cs.sign_ok(h) ? 1 : 0;
    }
    counts[w] += n;
  });
  long long total = 0;
  for (long long n : counts) total += n;
  return total;
}

}  // namespace seltwist
