#ifndef HILBK3_CURVES_HPP
#define HILBK3_CURVES_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hilbk3/poly.hpp"
#include "hilbk3/rational.hpp"

namespace hilbk3 {

// The integral model C1: y1^2 = 175 x1^4 - 78400 x1^3 + 13168512 x1^2
// - 983549952 x1, reached from the rational quartic by
// (x1, y1) = (x + 126, 4032 y).
RatPoly c1_polynomial();
std::pair<Int, Int> to_c1(const Rat& x, const Rat& y);  // requires an integral image
std::pair<Rat, Rat> to_c1_rational(const Rat& x, const Rat& y);

// Weierstrass curve y^2 = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassCurve {
  std::string id;
  Int a2, a4, a6;

  Rat residual(const Rat& x, const Rat& y) const;
  bool contains(const Rat& x, const Rat& y) const { return residual(x, y) == 0; }
};

// The family E_v; v must be a squarefree divisor (either sign) of
// 2*3*7*11.
WeierstrassCurve ev_curve(const Int& v);
std::vector<Int> admissible_v();  // all 32 candidates

// (x2, y2) = (175 v^2 u^2, 175 v^2 w).
std::pair<Int, Int> to_ev(const Int& u, const Int& v, const Int& w);

// The congruence sieve of the two lemmas; returns exactly the surviving v.
std::set<Int> sieve_lemma();
// Independent residue-class brute force: existence of (u, w) solutions of
// the C1-derived congruence modulo 7^3 and 3^5.
std::set<Int> sieve_brute_force();

struct C1Point {
  Int x, y;  // y >= 0
  bool operator<(const C1Point& o) const { return x < o.x; }
  bool operator==(const C1Point& o) const { return x == o.x && y == o.y; }
};
// Scans |x1| <= bound for perfect-square values of the C1 quartic; chunked
// over threads (count from HILBK3_THREADS, default 1), deterministic order.
std::vector<C1Point> search_c1(long bound, int threads = 0);

// ---- embedded paper point data ------------------------------------------

struct CurvePointRecord {
  std::string curve;  // "E-1", "E14", "E'-11", ...
  Rat x, y;
  std::string tag;  // "integral" (y listed up to sign) or "generator"
};

// The embedded table (versioned copy of data/curve_points.txt).
const std::string& embedded_point_table();
std::vector<CurvePointRecord> parse_point_table(const std::string& text);
std::vector<CurvePointRecord> load_point_table(const std::string& path);

// Minimal Weierstrass models of E_{-11}, E_{-22} with the change of
// variables back to the family coordinates: x = scale_x * x' - shift,
// y = scale_y * y'.
struct MinimalModel {
  WeierstrassCurve minimal;  // e.g. id "E'-11"
  std::string family_id;     // "E-11"
  Int scale_x, shift, scale_y;
};
const std::vector<MinimalModel>& minimal_models();

// Curve registry: family curves by id, plus the minimal models.
WeierstrassCurve curve_by_id(const std::string& id);

struct PointCheck {
  CurvePointRecord record;
  bool on_curve = false;
  bool form_test = false;  // x of the form 175 v^2 u^2, u != 0 (must be false)
};
struct VerifyReport {
  std::vector<PointCheck> checks;
  bool transforms_ok = false;  // minimal-model changes of variables
  bool all_on_curve = false;
  bool no_point_passes_form_test = false;
  bool ok() const {
    return transforms_ok && all_on_curve && no_point_passes_form_test;
  }
};
VerifyReport verify_paper_points(const std::vector<CurvePointRecord>& records);
VerifyReport verify_paper_points();  // embedded table

// True when z = 175 v^2 u^2 for some nonzero integer u.
bool has_required_form(const Rat& x, const Int& v);

// Exact rational-root check supporting "y1 = 0 forces x1 = 0": the odd
// cubic factor of the C1 quartic has no rational roots.
bool c1_cubic_has_rational_root();

}  // namespace hilbk3

#endif
