#include "cartan/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace cartan {

namespace {

CartanDomain from_rab(DomainSpec spec, int r, int a, int b, bool formal = false) {
  CartanDomain d;
  d.spec = spec;
  d.r = r;
  d.a = a;
  d.b = b;
  d.n_tube = static_cast<long long>(r) + static_cast<long long>(r) * (r - 1) * a / 2;
  d.n = d.n_tube + static_cast<long long>(r) * b;
  d.p = 2 + (r - 1) * a + b;
  d.formal = formal;
  return d;
}

[[noreturn]] void reject(const std::string& what) { throw catalog_error(what); }

}  // namespace

CartanDomain build_domain(const DomainSpec& spec) {
  switch (spec.family) {
    case Family::TypeI: {
      const int m = spec.p1, n = spec.p2;
      if (m < 1 || m > n) reject("typeI requires 1 <= m <= n");
      return from_rab(spec, m, 2, n - m);
    }
    case Family::TypeII: {
      const int m = spec.p1;
      if (m < 2) reject("typeII requires m >= 2");
      // m = 2k + eps, eps in {0,1}
      const int k = m / 2, eps = m % 2;
      return from_rab(spec, k, 4, 2 * eps);
    }
    case Family::TypeIII: {
      const int n = spec.p1;
      if (n < 1) reject("typeIII requires n >= 1");
      // rank-1 degenerate case: a is vacuous, stored as 1 by convention
      return from_rab(spec, n, n == 1 ? 1 : 1, 0);
    }
    case Family::TypeIV: {
      const int n = spec.p1;
      if (n < 3) reject("typeIV requires n >= 3");
      // a = n-2 keeps n = 2 + a and p = 2 + a = n consistent; see erratum()
      return from_rab(spec, 2, n - 2, 0);
    }
    case Family::TypeV:
      return from_rab(spec, 2, 6, 4);
    case Family::TypeVI:
      // p = 2 + 2*8 = 18; see erratum()
      return from_rab(spec, 3, 8, 0);
    case Family::Custom: {
      const int r = spec.p1, a = spec.p2, b = spec.p3;
      if (r < 1) reject("custom requires r >= 1");
      if (a < 1) reject("custom requires a >= 1");
      if (b < 0) reject("custom requires b >= 0");
      return from_rab(spec, r, a, b, /*formal=*/true);
    }
  }
  reject("unknown family");
}

std::string CartanDomain::family_name() const {
  std::ostringstream os;
  switch (spec.family) {
    case Family::TypeI: os << "typeI:" << spec.p1 << "," << spec.p2; break;
    case Family::TypeII: os << "typeII:" << spec.p1; break;
    case Family::TypeIII: os << "typeIII:" << spec.p1; break;
    case Family::TypeIV: os << "typeIV:" << spec.p1; break;
    case Family::TypeV: os << "typeV"; break;
    case Family::TypeVI: os << "typeVI"; break;
    case Family::Custom:
      os << "custom:" << spec.p1 << "," << spec.p2 << "," << spec.p3;
      break;
  }
  return os.str();
}

std::string CartanDomain::erratum() const {
  if (spec.family == Family::TypeIV) {
    std::ostringstream os;
    os << "erratum: published table lists a = n-1 = " << (spec.p1 - 1)
       << "; the dimension identity n = r + r(r-1)a/2 + rb forces a = n-2 = "
       << (spec.p1 - 2) << " (genus p = n is unaffected)";
    return os.str();
  }
  if (spec.family == Family::TypeVI) {
    return "erratum: published table lists p = 26; the identities "
           "p = 2+(r-1)a+b and p = (n+n_tube)/r both give p = 18";
  }
  return {};
}

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<int> parse_ints(const std::string& s, std::size_t count,
                            const std::string& ctx) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw catalog_error("bad integer '" + item + "' in " + ctx);
    }
    if (pos != item.size()) throw catalog_error("bad integer '" + item + "' in " + ctx);
    out.push_back(v);
  }
  if (out.size() != count)
    throw catalog_error(ctx + " expects " + std::to_string(count) + " integer(s)");
  return out;
}

}  // namespace

DomainSpec parse_domain_spec(const std::string& text) {
  const std::string t = lower(text);
  const auto colon = t.find(':');
  const std::string head = t.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : t.substr(colon + 1);

  if (head == "typev") {
    if (!args.empty()) throw catalog_error("typeV takes no parameters");
    return DomainSpec::type_V();
  }
  if (head == "typevi") {
    if (!args.empty()) throw catalog_error("typeVI takes no parameters");
    return DomainSpec::type_VI();
  }
  if (head == "typei") {
    auto v = parse_ints(args, 2, "typeI:m,n");
    return DomainSpec::type_I(v[0], v[1]);
  }
  if (head == "typeii") {
    auto v = parse_ints(args, 1, "typeII:m");
    return DomainSpec::type_II(v[0]);
  }
  if (head == "typeiii") {
    auto v = parse_ints(args, 1, "typeIII:n");
    return DomainSpec::type_III(v[0]);
  }
  if (head == "typeiv") {
    auto v = parse_ints(args, 1, "typeIV:n");
    return DomainSpec::type_IV(v[0]);
  }
  if (head == "custom") {
    auto v = parse_ints(args, 3, "custom:r,a,b");
    return DomainSpec::custom(v[0], v[1], v[2]);
  }
  throw catalog_error("unknown domain spec '" + text + "'");
}

std::string format_domain_spec(const DomainSpec& spec) {
  CartanDomain d;
  d.spec = spec;
  return d.family_name();
}

}  // namespace cartan
