#include "menergy/real_roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

namespace menergy {

namespace {

WideFloat to_wide(const Rational& r) {
  return WideFloat(boost::multiprecision::numerator(r)) /
         WideFloat(boost::multiprecision::denominator(r));
}

template <typename T>
T evaluate(const std::vector<T>& p, const T& x) {
  T acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_of(const WideFloat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Rational cauchy_bound(const RationalPoly& p) {
  const Rational lead = abs(p.back());
  Rational worst = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) worst = std::max(worst, Rational(abs(p[i]) / lead));
  return worst + 1;
}

// Built on the square-free part so repeated roots at an endpoint count correctly.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  RationalPoly base = trimmed(p);
  if (base.size() > 1) base = divide(base, gcd(base, derivative(base))).first;
  std::vector<RationalPoly> seq{base, derivative(base)};
  while (!seq.back().empty()) {
    auto [q, r] = divide(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    seq.push_back(trimmed(std::move(r)));
  }
  seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<RationalPoly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int sg = sign_of(evaluate(s, x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

void bisect(const RationalPoly& f, RootBracket& b, double width) {
  std::vector<WideFloat> wide;
  wide.reserve(f.size());
  for (const auto& c : f) wide.push_back(to_wide(c));
  int lower_sign = sign_of(evaluate(wide, b.lower));
  if (lower_sign == 0) {
    b.upper = b.lower;
    return;
  }
  for (int iter = 0; iter < 400; ++iter) {
    WideFloat scale = std::max(WideFloat(1), abs(b.lower));
    if (b.upper - b.lower <= WideFloat(width) * scale) break;
    WideFloat mid = b.midpoint();
    int s = sign_of(evaluate(wide, mid));
    if (s == 0) {
      b.lower = b.upper = mid;
      break;
    }
    if (s == lower_sign) {
      b.lower = mid;
    } else {
      b.upper = mid;
    }
  }
}

// Isolating brackets for the roots of a square-free real-rooted factor f
// with all roots in (0, bound], from companion eigenvalues. Empty result
// means the eigenvalue brackets failed the sign-alternation test.
std::vector<RootBracket> companion_brackets(const RationalPoly& f, const Rational& bound) {
  const int d = static_cast<int>(f.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const double lead = static_cast<double>(f.back());
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -static_cast<double>(f[i]) / lead;

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) return {};
  std::vector<double> approx;
  for (int i = 0; i < d; ++i) approx.push_back(solver.eigenvalues()[i].real());
  std::sort(approx.begin(), approx.end());

  std::vector<WideFloat> fences{WideFloat(0)};
  for (int i = 0; i + 1 < d; ++i) fences.push_back(WideFloat((approx[i] + approx[i + 1]) / 2));
  fences.push_back(to_wide(bound));

  std::vector<WideFloat> wide;
  for (const auto& c : f) wide.push_back(to_wide(c));
  int previous = 0;
  for (std::size_t i = 0; i < fences.size(); ++i) {
    if (i > 0 && !(fences[i] > fences[i - 1])) return {};
    int s = sign_of(evaluate(wide, fences[i]));
    if (s == 0 || s == previous) return {};
    previous = s;
  }
  std::vector<RootBracket> out;
  for (int i = 0; i < d; ++i) out.push_back({fences[i], fences[i + 1], 1});
  return out;
}

std::vector<RootBracket> sturm_brackets(const RationalPoly& f, const Rational& bound) {
  const auto seq = sturm_sequence(f);
  const int d = static_cast<int>(f.size()) - 1;
  if (sign_variations(seq, Rational(0)) - sign_variations(seq, bound) != d) {
    throw std::domain_error("polynomial is not real-rooted on the positive axis");
  }
  std::vector<RootBracket> out;
  std::vector<std::pair<Rational, Rational>> work{{Rational(0), bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int count = sign_variations(seq, lo) - sign_variations(seq, hi);
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({to_wide(lo), to_wide(hi), 1});
      continue;
    }
    Rational mid = (lo + hi) / 2;
    for (int nudge = 3; evaluate(f, mid) == 0; ++nudge) mid = lo + (hi - lo) * nudge / (2 * nudge + 1);
    work.emplace_back(mid, hi);
    work.emplace_back(lo, mid);
  }
  std::sort(out.begin(), out.end(),
            [](const RootBracket& a, const RootBracket& b) { return a.lower < b.lower; });
  return out;
}

std::vector<RootBracket> roots_impl(const RationalPoly& p, double width, bool force_sturm) {
  RationalPoly poly = trimmed(p);
  if (poly.empty()) throw std::domain_error("zero polynomial has no isolated roots");
  if (poly.size() == 1) return {};
  if (poly.front() == 0) throw std::domain_error("polynomial vanishes at 0");

  const auto factors = square_free_factors(poly);
  std::vector<RootBracket> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const RationalPoly& f = factors[i];
    if (f.size() <= 1) continue;
    const Rational bound = cauchy_bound(f);
    std::vector<RootBracket> brackets;
    if (f.size() == 2) {
      const Rational r = -f[0] / f[1];
      if (r <= 0) throw std::domain_error("polynomial has a nonpositive root");
      brackets.push_back({to_wide(r), to_wide(r), 1});
    } else {
      if (!force_sturm) brackets = companion_brackets(f, bound);
      if (brackets.empty()) brackets = sturm_brackets(f, bound);
      for (auto& b : brackets) bisect(f, b, width);
    }
    for (auto& b : brackets) {
      b.multiplicity = static_cast<int>(i) + 1;
      out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootBracket& a, const RootBracket& b) { return a.lower < b.lower; });
  return out;
}

}  // namespace

RationalPoly trimmed(RationalPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

RationalPoly derivative(const RationalPoly& p) {
  RationalPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
  return trimmed(std::move(d));
}

std::pair<RationalPoly, RationalPoly> divide(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly rem = trimmed(a);
  const RationalPoly den = trimmed(b);
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  if (rem.size() < den.size()) return {{}, rem};
  RationalPoly quot(rem.size() - den.size() + 1);
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    const Rational c = rem.back() / den.back();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    rem.pop_back();
    rem = trimmed(std::move(rem));
  }
  return {trimmed(std::move(quot)), rem};
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

std::vector<RationalPoly> square_free_factors(const RationalPoly& p) {
  const RationalPoly poly = trimmed(p);
  if (poly.size() <= 1) return {};
  const RationalPoly dp = derivative(poly);
  const RationalPoly a0 = gcd(poly, dp);
  RationalPoly b = divide(poly, a0).first;
  RationalPoly c = divide(dp, a0).first;
  auto sub = [](const RationalPoly& x, const RationalPoly& y) {
    RationalPoly out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) out[i] -= y[i];
    return trimmed(std::move(out));
  };
  RationalPoly d = sub(c, derivative(b));
  std::vector<RationalPoly> factors;
  while (b.size() > 1) {
    RationalPoly f = gcd(b, d);
    b = divide(b, f).first;
    c = divide(d, f).first;
    d = sub(c, derivative(b));
    factors.push_back(std::move(f));
  }
  return factors;
}

int sturm_count(const RationalPoly& p, const Rational& a, const Rational& b) {
  const auto seq = sturm_sequence(p);
  if (seq.empty()) throw std::domain_error("zero polynomial");
  return sign_variations(seq, a) - sign_variations(seq, b);
}

std::vector<RootBracket> positive_real_roots(const RationalPoly& p, double width) {
  return roots_impl(p, width, false);
}

std::vector<RootBracket> positive_real_roots_sturm(const RationalPoly& p, double width) {
  return roots_impl(p, width, true);
}

}  // namespace menergy
