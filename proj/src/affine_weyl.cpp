#include "gammalab/affine_weyl.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "gammalab/errors.hpp"

namespace gammalab {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

CoxeterSystem make_affine_weyl(int n) {
  if (n < 2) throw DomainError("affine Weyl group of type A~_{n-1} needs n >= 2");
  CoxeterSystem sys;
  sys.n = n;
  sys.coxeter_matrix = Eigen::MatrixXi::Constant(n, n, 2);
  for (int i = 0; i < n; ++i) {
    sys.coxeter_matrix(i, i) = 1;
    if (n == 2) {
      sys.coxeter_matrix(i, 1 - i) = kInfiniteOrder;
    } else {
      sys.coxeter_matrix(i, (i + 1) % n) = 3;
      sys.coxeter_matrix((i + 1) % n, i) = 3;
    }
  }
  return sys;
}

AffinePerm AffinePerm::identity(int n) {
  if (n < 2) throw DomainError("affine permutations need n >= 2");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::from_window(std::vector<int> window) {
  const int n = static_cast<int>(window.size());
  if (n < 2) throw DomainError("affine permutations need n >= 2");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  long sum = 0;
  for (int i = 0; i < n; ++i) {
    const int r = mod(window[i], n);
    if (seen[r]) throw DomainError("window entries must be distinct modulo n");
    seen[r] = true;
    sum += window[i] - (i + 1);
  }
  if (sum != 0) throw DomainError("window must satisfy sum(w(i) - i) = 0");
  return AffinePerm(std::move(window));
}

AffinePerm AffinePerm::from_word(int n, std::span<const int> word) {
  AffinePerm w = identity(n);
  for (int i : word) w = w.apply_gen(i, Side::right);
  return w;
}

bool AffinePerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

int AffinePerm::operator()(int i) const {
  const int n = rank();
  const int k = floor_div(i - 1, n);
  return window_[i - 1 - k * n] + k * n;
}

AffinePerm AffinePerm::apply_gen(int i, Side side) const {
  const int n = rank();
  if (i < 0 || i >= n) throw DomainError("generator index out of range");
  std::vector<int> w = window_;
  if (side == Side::right) {
    if (i == 0) {
      const int first = w.front();
      w.front() = w.back() - n;
      w.back() = first + n;
    } else {
      std::swap(w[i - 1], w[i]);
    }
  } else {
    const int up = i;
    const int down = (i + 1) % n;
    for (int& v : w) {
      const int r = mod(v, n);
      if (r == up) {
        v += 1;
      } else if (r == down) {
        v -= 1;
      }
    }
  }
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::inverse() const {
  const int n = rank();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int v = window_[j - 1];
    const int k = floor_div(v - 1, n);
    const int r = v - k * n;
    inv[r - 1] = j - k * n;
  }
  return AffinePerm(std::move(inv));
}

AffinePerm operator*(const AffinePerm& a, const AffinePerm& b) {
  if (a.rank() != b.rank()) throw DomainError("affine permutations of different rank");
  std::vector<int> w(static_cast<std::size_t>(a.rank()));
  for (int j = 1; j <= a.rank(); ++j) w[j - 1] = a(b(j));
  return AffinePerm(std::move(w));
}

int AffinePerm::length() const {
  const int n = rank();
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) len += std::abs(floor_div(window_[j] - window_[i], n));
  return len;
}

bool AffinePerm::has_right_descent(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw DomainError("generator index out of range");
  return (*this)(i) > (*this)(i + 1);
}

bool AffinePerm::has_left_descent(int i) const { return inverse().has_right_descent(i); }

std::vector<int> AffinePerm::reduced_word() const {
  std::vector<int> word;
  AffinePerm w = *this;
  while (!w.is_identity()) {
    const AffinePerm inv = w.inverse();
    int chosen = -1;
    for (int i = 0; i < rank(); ++i) {
      if (inv.has_right_descent(i)) {
        chosen = i;
        break;
      }
    }
    word.push_back(chosen);
    w = w.apply_gen(chosen, Side::left);
  }
  return word;
}

std::string AffinePerm::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const AffinePerm& w) {
  os << '[';
  for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w.window()[i];
  return os << ']';
}

std::vector<AffinePerm> elements_up_to_length(int n, int max_length) {
  std::set<AffinePerm> seen{AffinePerm::identity(n)};
  std::vector<AffinePerm> frontier{AffinePerm::identity(n)};
  for (int len = 1; len <= max_length; ++len) {
    std::set<AffinePerm> next;
    for (const auto& w : frontier)
      for (int i = 0; i < n; ++i) {
        AffinePerm v = w.apply_gen(i, Side::right);
        if (v.length() == len && !seen.count(v)) next.insert(v);
      }
    seen.insert(next.begin(), next.end());
    frontier.assign(next.begin(), next.end());
  }
  std::vector<AffinePerm> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const AffinePerm& a, const AffinePerm& b) {
    return a.length() < b.length();
  });
  return out;
}

}  // namespace gammalab

std::size_t std::hash<gammalab::AffinePerm>::operator()(const gammalab::AffinePerm& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int v : w.window()) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}
