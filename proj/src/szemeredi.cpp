#include "progmix/szemeredi.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "progmix/error.hpp"
#include "progmix/parallel.hpp"

namespace progmix {

namespace {

std::uint64_t checked_power(std::int64_t n, int e, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < e; ++i) {
    if (v > cap / static_cast<std::uint64_t>(n)) return cap + 1;
    v *= static_cast<std::uint64_t>(n);
  }
  return v;
}

// All points of {-k..k}^m.
std::vector<Point> grid_offsets(int m, int k) {
  std::vector<Point> out{Point()};
  for (int d = 0; d < m; ++d) {
    std::vector<Point> next;
    for (const auto& p : out) {
      for (int i = -k; i <= k; ++i) {
        Point q = p;
        q.push_back(i);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Counts (a, r) for which a + r v is in A for every v in `offsets`.
std::uint64_t count_pattern(const PatternSet& a, const std::vector<Point>& offsets) {
  const std::int64_t n = a.modulus();
  const int m = a.dim();
  std::vector<std::uint64_t> per_r(static_cast<std::size_t>(n), 0);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t rr) {
    const auto r = static_cast<std::int64_t>(rr);
    // Shift of each offset by r, as an index delta per coordinate.
    std::vector<Point> shifts;
    for (const auto& v : offsets) {
      Point s(static_cast<std::size_t>(m));
      for (int d = 0; d < m; ++d) s[static_cast<std::size_t>(d)] = ((v[static_cast<std::size_t>(d)] * r) % n + n) % n;
      shifts.push_back(std::move(s));
    }
    std::uint64_t count = 0;
    Point x(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < a.universe(); ++i) {
      const Point base = a.point(i);
      bool ok = true;
      for (const auto& s : shifts) {
        for (int d = 0; d < m; ++d) {
          const auto du = static_cast<std::size_t>(d);
          x[du] = (base[du] + s[du]) % n;
        }
        if (!a.contains(x)) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
    }
    per_r[rr] = count;
  });
  std::uint64_t total = 0;
  for (auto c : per_r) total += c;
  return total;
}

}  // namespace

PatternSet::PatternSet(int m, std::int64_t n) : m_(m), n_(n) {
  if (m < 1 || n < 1) throw std::invalid_argument("pattern set needs m >= 1 and n >= 1");
  const std::uint64_t cap = 1ULL << 32U;
  const std::uint64_t size = checked_power(n, m, cap);
  if (size > cap) throw std::invalid_argument("pattern set universe n^m exceeds 2^32");
  bits_.assign(size, 0);
}

PatternSet PatternSet::full(int m, std::int64_t n) {
  PatternSet s(m, n);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  return s;
}

PatternSet PatternSet::from_points(int m, std::int64_t n, std::span<const Point> points) {
  PatternSet s(m, n);
  for (const auto& x : points) s.insert(x);
  return s;
}

PatternSet PatternSet::parse(int m, std::int64_t n, const std::string& text) {
  std::vector<Point> pts;
  std::stringstream outer(text);
  std::string item;
  while (std::getline(outer, item, ';')) {
    if (item.empty()) continue;
    Point x;
    std::stringstream inner(item);
    std::string coord;
    while (std::getline(inner, coord, ',')) {
      std::size_t used = 0;
      const long long v = std::stoll(coord, &used);
      if (used != coord.size()) throw std::invalid_argument("bad coordinate '" + coord + "'");
      x.push_back(v);
    }
    pts.push_back(std::move(x));
  }
  return from_points(m, n, pts);
}

std::size_t PatternSet::count() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

void PatternSet::insert(const Point& x) { bits_[index(x)] = 1; }

std::size_t PatternSet::index(const Point& x) const {
  if (x.size() != static_cast<std::size_t>(m_)) {
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(m_));
  }
  std::size_t i = 0;
  for (auto c : x) i = i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(((c % n_) + n_) % n_);
  return i;
}

Point PatternSet::point(std::size_t i) const {
  Point x(static_cast<std::size_t>(m_));
  for (int d = m_ - 1; d >= 0; --d) {
    x[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(i % static_cast<std::size_t>(n_));
    i /= static_cast<std::size_t>(n_);
  }
  return x;
}

std::uint64_t count_grid(const PatternSet& a, int k, std::uint64_t budget) {
  if (k < 0) throw std::invalid_argument("grid radius k must be >= 0");
  const auto offsets = grid_offsets(a.dim(), k);
  const std::uint64_t cells = checked_power(a.modulus(), a.dim() + 1, budget);
  require_budget("count_grid", cells > budget / offsets.size() ? budget + 1 : cells * offsets.size(),
                 budget);
  return count_pattern(a, offsets);
}

std::uint64_t count_corners(const PatternSet& a, std::uint64_t budget) {
  std::vector<Point> offsets;
  for (int d = 0; d < a.dim(); ++d) {
    Point e(static_cast<std::size_t>(a.dim()), 0);
    e[static_cast<std::size_t>(d)] = 1;
    offsets.push_back(std::move(e));
  }
  const std::uint64_t cells = checked_power(a.modulus(), a.dim() + 1, budget);
  require_budget("count_corners", cells > budget / offsets.size() ? budget + 1 : cells * offsets.size(),
                 budget);
  return count_pattern(a, offsets);
}

PatternSet lift(const PatternSet& a, int k, std::uint64_t budget) {
  if (k < 0) throw std::invalid_argument("grid radius k must be >= 0");
  const auto vs = grid_offsets(a.dim(), k);
  const int big_m = a.dim() + static_cast<int>(vs.size());
  require_budget("lift", checked_power(a.modulus(), big_m, budget), budget);
  PatternSet out(big_m, a.modulus());
  const std::int64_t n = a.modulus();
  const auto m = static_cast<std::size_t>(a.dim());
  for (std::size_t i = 0; i < out.universe(); ++i) {
    const Point x = out.point(i);
    Point y(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
    for (std::size_t j = 0; j < vs.size(); ++j) {
      for (std::size_t d = 0; d < m; ++d) y[d] += x[m + j] * vs[j][d];
    }
    for (auto& c : y) c = ((c % n) + n) % n;
    if (a.contains(y)) out.set_index(i);
  }
  return out;
}

}  // namespace progmix
