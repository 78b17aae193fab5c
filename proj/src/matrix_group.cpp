#include "progmix/matrix_group.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace progmix {

namespace {

constexpr std::uint64_t kDenseKeyLimit = 1ULL << 22;

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_dim(int d) {
  if (d != 2 && d != 3) {
    throw std::invalid_argument("dimension must be 2 or 3, got " +
                                std::to_string(d));
  }
}

void require_compatible(const GroupElement& x, const GroupElement& y) {
  if (x.dim() != y.dim() || x.modulus() != y.modulus()) {
    throw std::invalid_argument("group elements of different SL_d(F_p)");
  }
}

std::int64_t det_raw(int d, std::int64_t p, const std::int64_t* e) {
  if (d == 2) return modp::sub(modp::mul(e[0], e[3], p), modp::mul(e[1], e[2], p), p);
  const std::int64_t m0 = modp::sub(modp::mul(e[4], e[8], p), modp::mul(e[5], e[7], p), p);
  const std::int64_t m1 = modp::sub(modp::mul(e[3], e[8], p), modp::mul(e[5], e[6], p), p);
  const std::int64_t m2 = modp::sub(modp::mul(e[3], e[7], p), modp::mul(e[4], e[6], p), p);
  std::int64_t r = modp::mul(e[0], m0, p);
  r = modp::sub(r, modp::mul(e[1], m1, p), p);
  return modp::add(r, modp::mul(e[2], m2, p), p);
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::int64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& g, std::int64_t p) {
  const std::int64_t lead_inv = modp::inv(g.back(), p);
  while (f.size() >= g.size()) {
    const std::int64_t c = modp::mul(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = modp::sub(f[shift + i], modp::mul(c, g[i], p), p);
    }
    trim(f);
  }
  return f;
}

Poly poly_gcd(Poly f, Poly g, std::int64_t p) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    Poly r = poly_mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

}  // namespace

CyclicGroup::CyclicGroup(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
}

GroupElement::GroupElement(int d, std::int64_t p,
                           std::span<const std::int64_t> entries)
    : d_(d), p_(p), e_{} {
  require_dim(d);
  require_odd_prime(p);
  if (entries.size() != static_cast<std::size_t>(d * d)) {
    throw std::invalid_argument("expected " + std::to_string(d * d) +
                                " matrix entries");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) e_[i] = modp::reduce(entries[i], p);
  if (det_raw(d_, p_, e_.data()) != 1) {
    throw std::invalid_argument("matrix does not have determinant 1");
  }
}

GroupElement::GroupElement(int d, std::int64_t p,
                           std::initializer_list<std::int64_t> entries)
    : GroupElement(d, p, std::span<const std::int64_t>(entries.begin(), entries.size())) {}

GroupElement GroupElement::identity(int d, std::int64_t p) {
  require_dim(d);
  require_odd_prime(p);
  GroupElement x(Unchecked{}, d, p);
  for (int i = 0; i < d; ++i) x.e_[static_cast<std::size_t>(i * d + i)] = 1;
  return x;
}

GroupElement GroupElement::diagonal(std::int64_t p, std::int64_t t) {
  const std::int64_t tr = modp::reduce(t, p);
  return GroupElement(2, p, {tr, 0, 0, modp::inv(tr, p)});
}

FieldElement GroupElement::trace() const {
  std::int64_t s = 0;
  for (int i = 0; i < d_; ++i) s = modp::add(s, entry(i, i), p_);
  return {s, p_};
}

FieldElement GroupElement::determinant() const {
  return {det_raw(d_, p_, e_.data()), p_};
}

bool GroupElement::is_upper_triangular() const {
  for (int r = 1; r < d_; ++r) {
    for (int c = 0; c < r; ++c) {
      if (entry(r, c) != 0) return false;
    }
  }
  return true;
}

bool GroupElement::is_central() const {
  for (int r = 0; r < d_; ++r) {
    for (int c = 0; c < d_; ++c) {
      if (r != c && entry(r, c) != 0) return false;
      if (r == c && entry(r, c) != entry(0, 0)) return false;
    }
  }
  return true;
}

std::uint64_t GroupElement::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < d_ * d_; ++i) {
    k = k * static_cast<std::uint64_t>(p_) +
        static_cast<std::uint64_t>(e_[static_cast<std::size_t>(i)]);
  }
  return k;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  os << '[';
  for (int r = 0; r < x.dim(); ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < x.dim(); ++c) os << (c ? "," : "") << x.entry(r, c);
    os << ']';
  }
  return os << "] mod " << x.modulus();
}

GroupElement mul(const GroupElement& x, const GroupElement& y) {
  require_compatible(x, y);
  const int d = x.d_;
  const std::int64_t p = x.p_;
  GroupElement z(GroupElement::Unchecked{}, d, p);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) {
      std::int64_t s = 0;
      for (int k = 0; k < d; ++k) s += x.entry(r, k) * y.entry(k, c);
      z.e_[static_cast<std::size_t>(r * d + c)] = s % p;
    }
  }
  return z;
}

GroupElement inverse(const GroupElement& x) {
  const int d = x.d_;
  const std::int64_t p = x.p_;
  GroupElement z(GroupElement::Unchecked{}, d, p);
  auto e = [&](int r, int c) { return x.entry(r, c); };
  auto set = [&](int r, int c, std::int64_t v) {
    z.e_[static_cast<std::size_t>(r * d + c)] = modp::reduce(v, p);
  };
  // det = 1, so the inverse is the adjugate.
  if (d == 2) {
    set(0, 0, e(1, 1));
    set(0, 1, -e(0, 1));
    set(1, 0, -e(1, 0));
    set(1, 1, e(0, 0));
    return z;
  }
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // adj[r][c] = cofactor of entry (c, r)
      const int r0 = (c + 1) % 3, r1 = (c + 2) % 3;
      const int c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      set(r, c, e(r0, c0) * e(r1, c1) - e(r0, c1) * e(r1, c0));
    }
  }
  return z;
}

FieldElement trace(const GroupElement& x) { return x.trace(); }

bool is_regular_semisimple(const GroupElement& x) {
  const std::int64_t p = x.modulus();
  const std::int64_t tr = x.trace().value();
  if (x.dim() == 2) return tr != 2 % p && tr != modp::reduce(-2, p);
  // x^3 - tr x^2 + c2 x - 1, with c2 the sum of principal 2x2 minors.
  std::int64_t c2 = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      c2 = modp::add(c2,
                     modp::sub(modp::mul(x.entry(i, i), x.entry(j, j), p),
                               modp::mul(x.entry(i, j), x.entry(j, i), p), p),
                     p);
    }
  }
  const Poly f{modp::reduce(-1, p), c2, modp::reduce(-tr, p), 1};
  Poly df{c2, modp::mul(2, modp::reduce(-tr, p), p), 3 % p};
  trim(df);
  if (df.empty()) return false;  // f is a p-th power
  return poly_gcd(f, df, p).size() == 1;
}

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::kFull: return "full";
    case TableKind::kBorel: return "borel";
    case TableKind::kUnipotent: return "unipotent";
    case TableKind::kDiagSet: return "diag_set";
    case TableKind::kCentralizer: return "centralizer";
    case TableKind::kClass: return "class";
    case TableKind::kConjugateSubgroup: return "conjugate_subgroup";
    case TableKind::kSubset: return "subset";
  }
  return "unknown";
}

GroupTable::GroupTable(int d, std::int64_t p, std::vector<GroupElement> elements,
                       TableKind kind)
    : d_(d), p_(p), kind_(kind) {
  require_dim(d);
  require_odd_prime(p);
  if (p > 255) throw std::invalid_argument("group tables support p < 256");
  const auto dd = static_cast<std::size_t>(d * d);
  for (const auto& x : elements) {
    if (x.dim() != d || x.modulus() != p) {
      throw std::invalid_argument("table element of the wrong SL_d(F_p)");
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](const GroupElement& a, const GroupElement& b) { return a.key() < b.key(); });
  keys_.reserve(elements.size());
  entries_.reserve(elements.size() * dd);
  for (const auto& x : elements) {
    const std::uint64_t k = x.key();
    if (!keys_.empty() && keys_.back() == k) {
      throw std::invalid_argument("duplicate element in group table");
    }
    keys_.push_back(k);
    for (std::size_t i = 0; i < dd; ++i) {
      entries_.push_back(static_cast<std::uint8_t>(x.e_[i]));
    }
  }
  const std::uint64_t key_space = ipow(static_cast<std::uint64_t>(p), d * d);
  if (key_space <= kDenseKeyLimit) {
    dense_index_.assign(key_space, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      dense_index_[keys_[i]] = static_cast<std::uint32_t>(i);
    }
  }
  identity_ = index_of(GroupElement::identity(d, p));
  if (is_group()) {
    if (identity_ == kNoIndex) throw std::invalid_argument("subgroup table lacks the identity");
    inverse_.resize(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      const std::size_t j = index_of(progmix::inverse(element(i)));
      if (j == kNoIndex) throw std::invalid_argument("subgroup table not closed under inverse");
      inverse_[i] = static_cast<std::uint32_t>(j);
    }
  }
}

std::size_t GroupTable::identity() const {
  if (identity_ == kNoIndex) throw std::logic_error("table does not contain the identity");
  return identity_;
}

std::size_t GroupTable::index_of_key(std::uint64_t key) const {
  if (!dense_index_.empty()) {
    if (key >= dense_index_.size()) return kNoIndex;
    const std::uint32_t i = dense_index_[key];
    return i == std::numeric_limits<std::uint32_t>::max() ? kNoIndex : i;
  }
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return kNoIndex;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::size_t GroupTable::index_of(const GroupElement& x) const {
  if (x.dim() != d_ || x.modulus() != p_) return kNoIndex;
  return index_of_key(x.key());
}

GroupElement GroupTable::element(std::size_t i) const {
  if (i >= keys_.size()) throw std::out_of_range("group table index out of range");
  GroupElement x(GroupElement::Unchecked{}, d_, p_);
  const std::uint8_t* e = raw(i);
  for (int k = 0; k < d_ * d_; ++k) x.e_[static_cast<std::size_t>(k)] = e[k];
  return x;
}

std::uint64_t GroupTable::product_key(const std::uint8_t* x,
                                      const std::uint8_t* y) const {
  const auto p = static_cast<std::uint32_t>(p_);
  std::uint64_t key = 0;
  if (d_ == 2) {
    const std::uint32_t a = (x[0] * y[0] + x[1] * y[2]) % p;
    const std::uint32_t b = (x[0] * y[1] + x[1] * y[3]) % p;
    const std::uint32_t c = (x[2] * y[0] + x[3] * y[2]) % p;
    const std::uint32_t d = (x[2] * y[1] + x[3] * y[3]) % p;
    return ((static_cast<std::uint64_t>(a) * p + b) * p + c) * p + d;
  }
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const std::uint32_t v =
          (x[r * 3] * y[c] + x[r * 3 + 1] * y[3 + c] + x[r * 3 + 2] * y[6 + c]) % p;
      key = key * p + v;
    }
  }
  return key;
}

std::size_t GroupTable::product_or_none(std::size_t i, std::size_t j) const {
  return index_of_key(product_key(raw(i), raw(j)));
}

std::size_t GroupTable::product_across(const GroupTable& a, std::size_t i,
                                       const GroupTable& b, std::size_t j) const {
  return index_of_key(product_key(a.raw(i), b.raw(j)));
}

std::size_t GroupTable::product(std::size_t i, std::size_t j) const {
  if (!is_group()) throw std::logic_error("product on a table that is not a group");
  const std::size_t k = product_or_none(i, j);
  if (k == kNoIndex) throw std::logic_error("subgroup table not closed under product");
  return k;
}

std::size_t GroupTable::inverse(std::size_t i) const {
  if (!is_group()) throw std::logic_error("inverse on a table that is not a group");
  return inverse_[i];
}

std::uint64_t sl_order_formula(int d, std::int64_t p) {
  require_dim(d);
  const auto q = static_cast<std::uint64_t>(p);
  const std::uint64_t pd = ipow(q, d);
  std::uint64_t gl = 1;
  for (int i = 0; i < d; ++i) gl *= pd - ipow(q, i);
  return gl / (q - 1);
}

GroupTable enumerate_group(int d, std::int64_t p, std::uint64_t budget) {
  require_dim(d);
  require_odd_prime(p);
  require_budget("enumerate SL_" + std::to_string(d) + "(F_" + std::to_string(p) + ")",
                 ipow(static_cast<std::uint64_t>(p), d * d - 1), budget);

  std::vector<GroupElement> out;
  out.reserve(sl_order_formula(d, p));
  const int head = d * (d - 1);  // entries of the first d-1 rows
  std::vector<std::int64_t> e(static_cast<std::size_t>(d * d), 0);
  const std::uint64_t head_count = ipow(static_cast<std::uint64_t>(p), head);
  for (std::uint64_t h = 0; h < head_count; ++h) {
    std::uint64_t rest = h;
    for (int i = head - 1; i >= 0; --i) {
      e[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    // det = sum_k cof[k] * (last row)[k]
    std::array<std::int64_t, 3> cof{};
    if (d == 2) {
      cof = {modp::reduce(-e[1], p), e[0], 0};
    } else {
      cof = {modp::sub(modp::mul(e[1], e[5], p), modp::mul(e[2], e[4], p), p),
             modp::sub(modp::mul(e[2], e[3], p), modp::mul(e[0], e[5], p), p),
             modp::sub(modp::mul(e[0], e[4], p), modp::mul(e[1], e[3], p), p)};
    }
    int pivot = -1;
    for (int k = 0; k < d; ++k) {
      if (cof[static_cast<std::size_t>(k)] != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot < 0) continue;
    const std::int64_t pivot_inv = modp::inv(cof[static_cast<std::size_t>(pivot)], p);
    const std::uint64_t free_count = ipow(static_cast<std::uint64_t>(p), d - 1);
    for (std::uint64_t f = 0; f < free_count; ++f) {
      std::uint64_t r = f;
      std::int64_t acc = 1;
      for (int k = d - 1; k >= 0; --k) {
        if (k == pivot) continue;
        const auto v = static_cast<std::int64_t>(r % static_cast<std::uint64_t>(p));
        r /= static_cast<std::uint64_t>(p);
        e[static_cast<std::size_t>(head + k)] = v;
        acc = modp::sub(acc, modp::mul(cof[static_cast<std::size_t>(k)], v, p), p);
      }
      e[static_cast<std::size_t>(head + pivot)] = modp::mul(acc, pivot_inv, p);
      out.emplace_back(d, p, std::span<const std::int64_t>(e));
    }
  }
  return GroupTable(d, p, std::move(out), TableKind::kFull);
}

GroupTable centralizer(const GroupTable& table, const GroupElement& b) {
  const std::size_t bi = table.index_of(b);
  if (bi == kNoIndex) throw std::invalid_argument("centralizer: element not in table");
  std::vector<GroupElement> out;
  for (std::size_t c = 0; c < table.size(); ++c) {
    if (table.product_or_none(c, bi) == table.product_or_none(bi, c)) {
      out.push_back(table.element(c));
    }
  }
  return GroupTable(table.dim(), table.modulus(), std::move(out), TableKind::kCentralizer);
}

GroupTable conjugacy_class(const GroupTable& table, const GroupElement& a) {
  if (table.index_of(a) == kNoIndex) {
    throw std::invalid_argument("conjugacy_class: element not in table");
  }
  std::set<std::uint64_t> seen;
  std::vector<GroupElement> out;
  for (std::size_t g = 0; g < table.size(); ++g) {
    const GroupElement x = table.element(g);
    GroupElement y = mul(mul(x, a), inverse(x));
    if (seen.insert(y.key()).second) out.push_back(std::move(y));
  }
  return GroupTable(table.dim(), table.modulus(), std::move(out), TableKind::kClass);
}

GroupTable borel_subgroup(std::int64_t p) {
  require_odd_prime(p);
  std::vector<GroupElement> out;
  for (std::int64_t t = 1; t < p; ++t) {
    const std::int64_t ti = modp::inv(t, p);
    for (std::int64_t a = 0; a < p; ++a) out.emplace_back(2, p, std::initializer_list<std::int64_t>{t, a, 0, ti});
  }
  return GroupTable(2, p, std::move(out), TableKind::kBorel);
}

GroupTable unipotent_subgroup(std::int64_t p) {
  require_odd_prime(p);
  std::vector<GroupElement> out;
  for (std::int64_t a = 0; a < p; ++a) out.push_back(psi(FieldElement(a, p)));
  return GroupTable(2, p, std::move(out), TableKind::kUnipotent);
}

bool is_diagonalisable(const GroupElement& x) {
  if (x.dim() != 2) throw std::invalid_argument("is_diagonalisable is defined for SL_2 only");
  if (x.is_central()) return true;
  const FieldElement tr = x.trace();
  const FieldElement disc = tr * tr - FieldElement(4, x.modulus());
  return !disc.is_zero() && disc.is_square();
}

GroupTable diagonalisable_set(std::int64_t p) {
  const GroupTable g = enumerate_group(2, p);
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    GroupElement x = g.element(i);
    if (is_diagonalisable(x)) out.push_back(std::move(x));
  }
  return GroupTable(2, p, std::move(out), TableKind::kDiagSet);
}

GroupTable conjugate_subgroup(const GroupTable& h, const GroupElement& g) {
  const GroupElement gi = inverse(g);
  std::vector<GroupElement> out;
  out.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out.push_back(mul(mul(g, h.element(i)), gi));
  return GroupTable(h.dim(), h.modulus(), std::move(out), TableKind::kConjugateSubgroup);
}

std::size_t count_distinct_conjugates(const GroupTable& group, const GroupTable& h) {
  std::set<std::vector<std::uint64_t>> seen;
  for (std::size_t g = 0; g < group.size(); ++g) {
    const GroupElement x = group.element(g);
    const GroupElement xi = inverse(x);
    std::vector<std::uint64_t> keys;
    keys.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) keys.push_back(mul(mul(x, h.element(i)), xi).key());
    std::sort(keys.begin(), keys.end());
    seen.insert(std::move(keys));
  }
  return seen.size();
}

GroupElement psi(const FieldElement& a) {
  return GroupElement(2, a.modulus(), {1, a.value(), 0, 1});
}

FieldElement pi(const GroupElement& x) {
  if (x.dim() != 2 || !x.is_upper_triangular()) {
    throw std::invalid_argument("pi is defined on upper-triangular SL_2 elements only");
  }
  return x.at(1, 1);
}

}  // namespace progmix
