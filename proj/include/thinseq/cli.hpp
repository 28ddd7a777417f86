#pragma once

// Command-line front end: thinseq <generate|analyze|gram|carleson|interpolate|pick|split> [flags].
// Reports are JSON on --out (default stdout); --csv writes an (index,value)
// column file for plotting. Errors go to `err` as one line {"error": "..."}.

#include <ostream>

namespace thinseq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thinseq
