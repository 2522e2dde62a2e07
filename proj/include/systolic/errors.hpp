#ifndef SYSTOLIC_ERRORS_HPP
#define SYSTOLIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace systolic {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

struct EmptyRelator : Error {
  EmptyRelator() : Error("relator is trivial in the free group") {}
};

struct UnknownGenerator : Error {
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator: " + name) {}
};

struct ZeroExponent : Error {
  ZeroExponent() : Error("zero exponent in relator term") {}
};

struct ProperPowerInput : Error {
  ProperPowerInput() : Error("relator is a proper power; use the torsion branch") {}
};

struct ShortRelator : Error {
  explicit ShortRelator(int r)
      : Error("relator length " + std::to_string(r) + " <= 3") {}
};

struct UnknownVertex : Error {
  explicit UnknownVertex(int id) : Error("unknown vertex id " + std::to_string(id)) {}
};

struct UnknownFace : Error {
  explicit UnknownFace(int id) : Error("unknown face id " + std::to_string(id)) {}
};

struct DegenerateTriangle : Error {
  DegenerateTriangle() : Error("side lengths violate the strict triangle inequality") {}
};

struct NotApplicable : Error {
  explicit NotApplicable(const std::string& what) : Error("move not applicable: " + what) {}
};

struct Target3FlagViolation : Error {
  explicit Target3FlagViolation(const std::string& what)
      : Error("target complex lacks a required triangle: " + what) {}
};

struct StuckDiagram : Error {
  explicit StuckDiagram(const std::string& obstruction)
      : Error("diagram reduction stuck: " + obstruction) {}
};

struct NotStrictlySystolicWeights : Error {
  explicit NotStrictlySystolicWeights(int triangle_id)
      : Error("triangle " + std::to_string(triangle_id) + " has corner sum >= pi") {}
};

struct NotStrictlyLarge : Error {
  explicit NotStrictlyLarge(const std::string& what)
      : Error("2-full cycle of angular length <= 2*pi: " + what) {}
};

struct NoSlack : Error {
  explicit NoSlack(const std::string& what)
      : Error("angular triangle inequality holds with equality: " + what) {}
};

struct InvalidDiagram : Error {
  explicit InvalidDiagram(const std::string& what) : Error("invalid diagram: " + what) {}
};

struct InvalidComplex : Error {
  explicit InvalidComplex(const std::string& what) : Error("invalid complex: " + what) {}
};

}  // namespace systolic

#endif
