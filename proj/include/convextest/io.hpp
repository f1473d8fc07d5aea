#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "convextest/point_set.hpp"
#include "convextest/tester.hpp"

namespace convextest {

// PointSetFile: UTF-8 text, LF line endings.
//   - optional comment lines starting with '#', anywhere
//   - first non-comment line: "d n"
//   - then n lines of d whitespace-separated fields, each an exact rational
//     ("p/q") or a decimal string ("-1.25")
// The writer is canonical (reduced "p/q", plain "p" for integers, single
// spaces, trailing newline), so equal point sets produce identical bytes.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);

void write_point_set(std::ostream& out, const PointSet& ps,
                     const std::string& comment = "");
void write_point_set_file(const std::string& path, const PointSet& ps,
                          const std::string& comment = "");

// ResultRecord: the machine-readable outcome of one tester invocation.
// Schema documented in docs/result-record.schema.json. Exact rationals are
// serialized as strings; everything else as native JSON numbers.
struct ResultRecord {
  std::string command;          // "test-far" | "test-close"
  std::uint64_t n = 0;
  int d = 0;
  Rational epsilon;
  Rational delta;               // test-close only (0 otherwise)
  std::uint64_t k = 0, ell = 0, s = 0;
  int repetitions = 0;
  std::uint64_t seed = 0;
  Verdict verdict;
  double wall_ms = 0.0;
};

std::string result_record_to_json(const ResultRecord& r);

}  // namespace convextest
