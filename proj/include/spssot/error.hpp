#pragma once

#include <stdexcept>
#include <string>

namespace spssot {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shape or width disagreement between matrices / layers / batches.
class DimensionError : public Error {
  public:
    using Error::Error;
};

// Bad argument values: fractions out of range, labels outside {0,1},
// marginals not summing to one, schema mismatches.
class ValidationError : public Error {
  public:
    using Error::Error;
};

// Malformed input file contents; carries a 1-based line number.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, long line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

  private:
    long line_;
};

// Timestamps out of order within a patient series.
class OrderingError : public Error {
  public:
    using Error::Error;
};

// A stratified split would leave some class empty in some part.
class StratificationError : public Error {
  public:
    using Error::Error;
};

// Iterative solver hit its iteration cap; carries the residual it reached.
class ConvergenceError : public Error {
  public:
    ConvergenceError(const std::string& msg, double residual)
        : Error(msg + " (residual " + std::to_string(residual) + ")"),
          residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

// A class is missing where both classes are required (centers, pools).
class DegenerateClassError : public Error {
  public:
    using Error::Error;
};

// Under-sampling request cannot be satisfied by the available pool.
class SamplingError : public Error {
  public:
    using Error::Error;
};

// A loss or gradient became non-finite; carries the offending term name.
class TrainingDivergedError : public Error {
  public:
    TrainingDivergedError(const std::string& term, const std::string& msg)
        : Error(msg), term_(term) {}
    const std::string& term() const { return term_; }

  private:
    std::string term_;
};

// Metric undefined for the given inputs (e.g. single-class AUC).
class MetricError : public Error {
  public:
    using Error::Error;
};

// Filesystem-level failures.
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace spssot
