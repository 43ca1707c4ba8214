#pragma once

#include <stdexcept>
#include <string>

namespace flagflow {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonIntegerRatio : Error {
  using Error::Error;
};
struct IllConditioned : Error {
  using Error::Error;
};
struct NotProximal : Error {
  using Error::Error;
};
struct NotTransverse : Error {
  using Error::Error;
};
struct NotStabilizing : Error {
  using Error::Error;
};
struct NotLagrangian : Error {
  using Error::Error;
};
struct NotInDomain : Error {
  using Error::Error;
};
struct MagnitudeOverflow : Error {
  using Error::Error;
};
struct RankDisagreement : Error {
  using Error::Error;
};
struct EmptySample : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace flagflow
