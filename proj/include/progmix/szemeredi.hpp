#pragma once

// Brute-force counts of grid and corner configurations in subsets of
// Z_n^m, and the lift that turns one into the other.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace progmix {

inline constexpr std::uint64_t kDefaultPatternBudget = 100'000'000ULL;

using Point = std::vector<std::int64_t>;

// A subset of Z_n^m stored as a bitset; coordinate 0 is the most significant
// digit of the index.
class PatternSet {
 public:
  // Throws std::invalid_argument for m < 1, n < 1, or n^m > 2^32.
  PatternSet(int m, std::int64_t n);
  static PatternSet full(int m, std::int64_t n);
  // Coordinates are reduced mod n.
  static PatternSet from_points(int m, std::int64_t n, std::span<const Point> points);
  // "0,0;0,1;1,0"
  static PatternSet parse(int m, std::int64_t n, const std::string& text);

  int dim() const { return m_; }
  std::int64_t modulus() const { return n_; }
  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const;

  void insert(const Point& x);
  bool contains(const Point& x) const { return bits_[index(x)] != 0; }
  bool contains_index(std::size_t i) const { return bits_[i] != 0; }
  void set_index(std::size_t i) { bits_[i] = 1; }

  std::size_t index(const Point& x) const;
  Point point(std::size_t i) const;

 private:
  int m_;
  std::int64_t n_;
  std::vector<std::uint8_t> bits_;
};

// (a, r) with a + (i_1 r, ..., i_m r) in A for every i in {-k..k}^m.
// Throws BudgetExceeded when n^(m+1) (2k+1)^m > budget.
std::uint64_t count_grid(const PatternSet& a, int k,
                         std::uint64_t budget = kDefaultPatternBudget);

// (a, r) with a + r e_i in A for i = 1..m.
std::uint64_t count_corners(const PatternSet& a,
                            std::uint64_t budget = kDefaultPatternBudget);

// {(a, b_1..b_K) : a + sum b_j v_j in A}, v_1..v_K the points of
// {-k..k}^m, K = (2k+1)^m.
PatternSet lift(const PatternSet& a, int k, std::uint64_t budget = kDefaultPatternBudget);

}  // namespace progmix
