#ifndef CARTAN_CATALOG_HPP
#define CARTAN_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace cartan {

enum class Family { TypeI, TypeII, TypeIII, TypeIV, TypeV, TypeVI, Custom };

/// Constructor parameters for one irreducible bounded symmetric domain.
/// TypeI(m,n) with 1 <= m <= n, TypeII(m) with m >= 2, TypeIII(n) with
/// n >= 1, TypeIV(n) with n >= 3.  Custom(r,a,b) admits parameter triples
/// not realized by any actual domain; such entries are marked "formal".
struct DomainSpec {
  Family family = Family::Custom;
  int p1 = 0;  // m for TypeI/II, n for TypeIII/IV, r for Custom
  int p2 = 0;  // n for TypeI, a for Custom
  int p3 = 0;  // b for Custom

  static DomainSpec type_I(int m, int n) { return {Family::TypeI, m, n, 0}; }
  static DomainSpec type_II(int m) { return {Family::TypeII, m, 0, 0}; }
  static DomainSpec type_III(int n) { return {Family::TypeIII, n, 0, 0}; }
  static DomainSpec type_IV(int n) { return {Family::TypeIV, n, 0, 0}; }
  static DomainSpec type_V() { return {Family::TypeV, 0, 0, 0}; }
  static DomainSpec type_VI() { return {Family::TypeVI, 0, 0, 0}; }
  static DomainSpec custom(int r, int a, int b) { return {Family::Custom, r, a, b}; }
};

/// Numeric fingerprint of an irreducible bounded symmetric domain:
/// rank r, characteristic multiplicities (a, b), complex dimension n,
/// dimension n_tube of the maximal tube-type subdomain, and genus p.
/// Always satisfies
///   n      = r + r(r-1)a/2 + rb
///   n_tube = r + r(r-1)a/2
///   p      = (n + n_tube)/r = 2 + (r-1)a + b
struct CartanDomain {
  DomainSpec spec;
  int r = 1;
  int a = 1;
  int b = 0;
  long long n = 1;
  long long n_tube = 1;
  int p = 2;
  bool formal = false;  // Custom triple not matching any catalog family

  bool tube_type() const { return b == 0; }
  std::string family_name() const;
  /// Erratum note for families whose published tables disagree with the
  /// rank/multiplicity identities above; empty for the others.
  std::string erratum() const;
};

class catalog_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Validates the spec and derives (r, a, b); n, n_tube and p are always
/// recomputed from the identities above.
CartanDomain build_domain(const DomainSpec& spec);

/// Parses the CLI grammar `typeI:m,n | typeII:m | typeIII:n | typeIV:n |
/// typeV | typeVI | custom:r,a,b` (case-insensitive, no spaces).
DomainSpec parse_domain_spec(const std::string& text);

std::string format_domain_spec(const DomainSpec& spec);

}  // namespace cartan

#endif
