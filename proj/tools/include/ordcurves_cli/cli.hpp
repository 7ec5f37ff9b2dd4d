#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordcurves/point.hpp"

namespace ordcurves::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kPrecondition = 3,
  kLemma = 4,
};

struct InputFile {
  int d = 0;  // 0 when the file has no "d"
  std::vector<PlanePoint> points;
  std::vector<PlanePoint> basis;  // optional "basis" entry
};

// Parses the point-set JSON. Throws ParseError with line and column.
InputFile parse_input(const std::string& text);

// Runs one command line (without the program name). Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordcurves::cli
