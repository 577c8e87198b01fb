#pragma once

// Log-radius windows.
//
// A radius r corresponds to w = -log r (base: the norm of the uniformizer),
// so the orientation reverses:
//
//   annulus {R1 <= |T| <= R2}   <->  [-log R2, -log R1]
//   r -> 0 (punctured disc)      <->  w -> +infinity
//   r -> infinity                <->  w -> -infinity
//
// A term a_i T^i has tropical value v(a_i) + i*w at log-radius w, which is
// -log(|a_i| r^i). Maximizing |a_i| r^i is minimizing v(a_i) + i*w.

#include <optional>
#include <string>

#include "nonarch/rational.hpp"

namespace nonarch {

class LogRadiusWindow {
 public:
  /// The whole line (-inf, +inf).
  LogRadiusWindow() = default;
  /// nullopt bounds are infinite (and always open).
  LogRadiusWindow(std::optional<Rational> lo, bool lo_open, std::optional<Rational> hi,
                  bool hi_open);

  static LogRadiusWindow closed(const Rational& lo, const Rational& hi);
  static LogRadiusWindow point(const Rational& w) { return closed(w, w); }
  static LogRadiusWindow everything() { return {}; }
  /// [lo, +inf): a closed punctured disc around the origin.
  static LogRadiusWindow from(const Rational& lo, bool lo_open = false);
  /// (-inf, hi].
  static LogRadiusWindow upto(const Rational& hi, bool hi_open = false);

  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  bool contains(const Rational& w) const;
  /// True iff every point of `other` lies in this window.
  bool covers(const LogRadiusWindow& other) const;
  /// True iff both endpoints are finite and closed.
  bool is_compact() const;
  bool is_point() const;
  bool is_bounded() const { return lo_ && hi_; }

  /// Intersection; nullopt if empty.
  std::optional<LogRadiusWindow> intersect(const LogRadiusWindow& other) const;

  /// Interval notation, e.g. "[-1, 0]", "(0, +inf)".
  std::string str() const;

  friend bool operator==(const LogRadiusWindow&, const LogRadiusWindow&) = default;

 private:
  std::optional<Rational> lo_;
  bool lo_open_ = true;
  std::optional<Rational> hi_;
  bool hi_open_ = true;
};

}  // namespace nonarch
