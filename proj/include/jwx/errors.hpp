#pragma once

#include <stdexcept>
#include <string>

namespace jwx {

// A term touches a site that the requested window does not contain.
class SupportExceedsWindow : public std::out_of_range {
 public:
  explicit SupportExceedsWindow(const std::string& what) : std::out_of_range(what) {}
};

class IndexOutOfWindow : public std::out_of_range {
 public:
  explicit IndexOutOfWindow(const std::string& what) : std::out_of_range(what) {}
};

// The element does not lie in the local CAR algebra of the window.
class NotInLocalCar : public std::domain_error {
 public:
  NotInLocalCar(const std::string& what, double residual)
      : std::domain_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jwx
