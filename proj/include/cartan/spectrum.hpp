#ifndef CARTAN_SPECTRUM_HPP
#define CARTAN_SPECTRUM_HPP

#include <string>
#include <vector>

#include "cartan/catalog.hpp"
#include "cartan/symbol.hpp"

namespace cartan {

class spectrum_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Signature alpha: weakly decreasing r-tuple of nonnegative integers
/// labeling one isotypic component.
struct MultiIndex {
  std::vector<int> parts;

  int rank() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool weakly_decreasing() const;
  std::string dashed() const;  // "3-1-0"
};

/// All weakly decreasing r-tuples with parts <= alpha_max, in graded
/// lexicographic order (by |alpha|, then lexicographically descending).
/// Count is C(alpha_max + r, r).
std::vector<MultiIndex> enumerate_signatures(int r, int alpha_max);

/// One computed eigenvalue c_alpha with full provenance.
struct EigenvalueRecord {
  CartanDomain domain;
  double lambda;
  MultiIndex alpha;
  double value;
  double numerator;
  double denominator;
  int nodes;
  double err_estimate;
  std::string symbol_name;
};

/// c_alpha(T_psi) as the ratio of the weighted radial-density integral
/// with and without the symbol, both on the same tensor grid.  The error
/// estimate is the change of the ratio under one refinement N -> ceil(3N/2).
EigenvalueRecord eigenvalue(const CartanDomain& d, double lambda,
                            const RadialSymbol& psi, const MultiIndex& alpha, int N);

/// One record per enumerate_signatures(r, alpha_max) entry, in that
/// order.  threads = 0 picks a serial run.
std::vector<EigenvalueRecord> eigenvalue_table(const CartanDomain& d, double lambda,
                                               const RadialSymbol& psi, int alpha_max,
                                               int N, int threads = 0);

/// |quadrature - Selberg closed form| / closed form for the denominator
/// integral at the rectangular signature alpha = (m,...,m).
double rectangular_denominator_check(const CartanDomain& d, double lambda, int m, int N);

/// CSV / JSON serialization; header
/// family,r,a,b,n,p,lambda,alpha,symbol,value,nodes,err_estimate
/// with %.17g number formatting.
std::string records_csv(const std::vector<EigenvalueRecord>& recs);
std::string records_json(const std::vector<EigenvalueRecord>& recs);

}  // namespace cartan

#endif
