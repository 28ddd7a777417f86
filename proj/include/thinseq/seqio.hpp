#pragma once

// Sequence files. Two layouts, detected from the first significant byte:
//
//   text        one "re,im" pair per line; '#' starts a comment line.
//               A third column "re,im,gap" gives 1 - |z| explicitly and is
//               written only when re, im alone would not reproduce the gap.
//   structured  {"points":[{"re":..,"im":..},...]} with an optional "gap".
//
// Numbers are written with 17 significant digits, so save/load is exact.

#include <filesystem>
#include <string>
#include <string_view>

#include "thinseq/disc.hpp"
#include "thinseq/jones.hpp"

namespace thinseq {

enum class SequenceFormat { text, json };

/// Throws ParseError (with line number) for malformed input, including an
/// empty document.
PointSequence parse_sequence(std::string_view document);

std::string format_sequence(const PointSequence& seq, SequenceFormat format = SequenceFormat::text,
                            std::string_view header_comment = {});

PointSequence load_sequence(const std::filesystem::path& path);

void save_sequence(const std::filesystem::path& path, const PointSequence& seq,
                   SequenceFormat format = SequenceFormat::text, std::string_view header_comment = {});

/// Targets file: {"p": 2 | "inf", "offsetN": N, "values": [{"re":..,"im":..}, ...]}.
/// offsetN counts from 1 and defaults to 1; the problem's tail is 0-based.
InterpolationProblem parse_targets(std::string_view document);
std::string format_targets(const InterpolationProblem& prob);
InterpolationProblem load_targets(const std::filesystem::path& path);

/// Shortest decimal form with 17 significant digits ("%.17g").
std::string format_double(double x);

/// Reads a whole file; throws DomainError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace thinseq
