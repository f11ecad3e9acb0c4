#pragma once
#include <string>
#include <vector>

#include "uqgl/delta.hpp"
#include "uqgl/graded.hpp"
#include "uqgl/series.hpp"

namespace uqgl {

// ---- generating currents over the triangular (e/f/k1/k2) mode alphabet ----
// sign + expands in nonnegative powers of the argument, sign - in nonpositive
CSeries cur_gauss(int var, GaussWhich which, int sign, int n);
// inverse series of k1/k2 against the designated inverse of the zero mode
CSeries cur_gauss_inv(int var, GaussWhich which, int sign, int n);
// two-sided step currents and their argument-rescaled companions
CSeries cur_xplus(int var, int n);
CSeries cur_xminus(int var, int n);
CSeries cur_pair(int var, int sign, int n);  // k1^{-1} k2
CSeries cur_bige(int var, int n);            // xplus at argument scaled by q
CSeries cur_bigf(int var, int n);            // xminus at argument scaled by q
CSeries cur_bigk(int var, int sign, int n);  // k1^{-1} k2 at argument scaled by q
CSeries cur_bigh(int var, int sign, int n);  // k2(.q) k1(./q)

// 2x2 L-operators: raw matrix-mode alphabet, or assembled from the
// triangular currents as [[k1, k1 e], [f k1, k2 + f k1 e]]
MatrixCurrent build_L_raw(int var, int sign, int n);
MatrixCurrent build_L_gauss(int var, int sign, int n);
// inverse L assembled from the triangular currents per the closed form
// [[k1^{-1} + e k2^{-1} f, -e k2^{-1}], [-k2^{-1} f, k2^{-1}]]
MatrixCurrent build_L_gauss_inv(int var, int sign, int n);

// recover the triangular parts of a 2x2 series matrix whose (0,0) entry is
// invertible along `var`; corner_inv is the two-sided inverse of that
// entry's leading mode
struct GaussParts {
  CSeries k1, e, f, k2;
};
GaussParts gauss_decompose(const MatrixCurrent& L, int var, const SuperElement& corner_inv);

// one extracted coefficient of a relation family: el == 0 is the claim
struct Relation {
  std::string slug;
  std::vector<long> idx;
  SuperElement el;
};
using RelationSet = std::vector<Relation>;

// canonical scalar normalization: clear denominators, divide out the common
// polynomial factor of the coefficients, fix the sign by the greatest word
SuperElement normalize_primitive(const SuperElement& e);

// the eight defining rows k k^{-1} - 1, k^{-1} k - 1 for both diagonal
// zero modes and both signs, plus the matching rewrite table
RelationSet inverse_pair_axioms();
CancelTable inverse_pair_table();

// exchange-relation rows for the L-operator pair (sign1, sign2) with modes
// generated up to n_gen; rows are indexed {row, col, a, b} over the 4x4
// component grid and the mode box |a|,|b| <= cap (cap < 0: the whole
// determined box). `raw` switches to the matrix-mode alphabet.
RelationSet build_rll(int sign1, int sign2, int n_gen, long cap = -1, bool raw = false);

// the same exchange identity transported to the inverse operators: both
// L factors replaced by the closed-form triangular inverse, the exchange
// matrix by its unitarity inverse, and the spectral sides swapped.  These
// rows carry the k2^{-1} braids.
RelationSet build_rll_inv(int sign1, int sign2, int n_gen, long cap = -1);

// a whole identity as a two-variable series, before row extraction
struct SeriesInstance {
  std::vector<long> idx;
  CSeries s;
};

// the sixteen exchange components (direct or inverse-operator form) as
// series, indexed {row, col} over the component grid
std::vector<SeriesInstance> build_rll_series(int sign1, int sign2, int n_gen,
                                             bool inverse = false);
// the family displays as series; delta-supported families have none
std::vector<SeriesInstance> build_family_series(const std::string& slug, int n,
                                                const std::string& reading = "");

// witness that two identities agree up to a unit of the spectral coefficient
// field: side 0 means fam * factor == comp scaled by unit, side 1 the mirror
// comp * factor == fam scaled by unit, checked on the overlap of the
// determined mode boxes (which must see a nonzero coefficient).  The factor
// runs over 1 and the linear spectral clearing polynomials.
struct UnitMatch {
  bool ok = false;
  int side = 0;
  RF factor, unit;
};
UnitMatch match_up_to_unit(const CSeries& fam, const CSeries& comp);

// derived-relation families over the triangular alphabet. `reading` picks a
// printed variant where the family has more than one ("" = adopted form).
RelationSet build_family(const std::string& slug, int n, long cap = -1,
                         const std::string& reading = "");
std::vector<std::string> family_slugs();      // every certifiable family
std::vector<std::string> drinfeld_slugs();    // the exchange-realization core
std::vector<std::string> translated_slugs();  // rescaled-current corollaries
std::vector<std::string> family_readings(const std::string& slug);

}  // namespace uqgl
