#include "nonarch/window.hpp"

#include "nonarch/error.hpp"

namespace nonarch {

LogRadiusWindow::LogRadiusWindow(std::optional<Rational> lo, bool lo_open,
                                 std::optional<Rational> hi, bool hi_open)
    : lo_(std::move(lo)), lo_open_(lo_open), hi_(std::move(hi)), hi_open_(hi_open) {
  if (!lo_) lo_open_ = true;
  if (!hi_) hi_open_ = true;
  if (lo_ && hi_) {
    if (*lo_ > *hi_) {
      throw Error(ErrorCode::kInvalidArgument, "window lower end exceeds upper end");
    }
    if (*lo_ == *hi_ && (lo_open_ || hi_open_)) {
      throw Error(ErrorCode::kInvalidArgument, "degenerate window must be closed");
    }
  }
}

LogRadiusWindow LogRadiusWindow::closed(const Rational& lo, const Rational& hi) {
  return LogRadiusWindow(lo, false, hi, false);
}

LogRadiusWindow LogRadiusWindow::from(const Rational& lo, bool lo_open) {
  return LogRadiusWindow(lo, lo_open, std::nullopt, true);
}

LogRadiusWindow LogRadiusWindow::upto(const Rational& hi, bool hi_open) {
  return LogRadiusWindow(std::nullopt, true, hi, hi_open);
}

bool LogRadiusWindow::contains(const Rational& w) const {
  if (lo_) {
    if (w < *lo_ || (lo_open_ && w == *lo_)) return false;
  }
  if (hi_) {
    if (w > *hi_ || (hi_open_ && w == *hi_)) return false;
  }
  return true;
}

bool LogRadiusWindow::covers(const LogRadiusWindow& other) const {
  if (lo_) {
    if (!other.lo_) return false;
    if (*other.lo_ < *lo_) return false;
    if (*other.lo_ == *lo_ && lo_open_ && !other.lo_open_) return false;
  }
  if (hi_) {
    if (!other.hi_) return false;
    if (*other.hi_ > *hi_) return false;
    if (*other.hi_ == *hi_ && hi_open_ && !other.hi_open_) return false;
  }
  return true;
}

bool LogRadiusWindow::is_compact() const { return lo_ && hi_ && !lo_open_ && !hi_open_; }

bool LogRadiusWindow::is_point() const { return lo_ && hi_ && *lo_ == *hi_; }

std::optional<LogRadiusWindow> LogRadiusWindow::intersect(const LogRadiusWindow& other) const {
  std::optional<Rational> lo = lo_;
  bool lo_open = lo_open_;
  if (other.lo_ && (!lo || *other.lo_ > *lo)) {
    lo = other.lo_;
    lo_open = other.lo_open_;
  } else if (other.lo_ && lo && *other.lo_ == *lo) {
    lo_open = lo_open || other.lo_open_;
  }
  std::optional<Rational> hi = hi_;
  bool hi_open = hi_open_;
  if (other.hi_ && (!hi || *other.hi_ < *hi)) {
    hi = other.hi_;
    hi_open = other.hi_open_;
  } else if (other.hi_ && hi && *other.hi_ == *hi) {
    hi_open = hi_open || other.hi_open_;
  }
  if (lo && hi) {
    if (*lo > *hi) return std::nullopt;
    if (*lo == *hi && (lo_open || hi_open)) return std::nullopt;
  }
  return LogRadiusWindow(lo, lo_open, hi, hi_open);
}

std::string LogRadiusWindow::str() const {
  std::string out = lo_open_ ? "(" : "[";
  out += lo_ ? to_string(*lo_) : "-inf";
  out += ", ";
  out += hi_ ? to_string(*hi_) : "+inf";
  out += hi_open_ ? ")" : "]";
  return out;
}

}  // namespace nonarch
