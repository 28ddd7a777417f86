#include "thinseq/seqio.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "thinseq/error.hpp"

namespace thinseq {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
    throw ParseError("cannot parse number '" + std::string(field) + "'", line);
  }
  return value;
}

DiscPoint make_point(double re, double im, const double* gap, std::size_t line) {
  try {
    if (gap) return DiscPoint::with_gap(re, im, *gap);
    return DiscPoint(re, im);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line);
  }
}

bool needs_gap_column(const DiscPoint& p) { return 1.0 - std::hypot(p.re(), p.im()) != p.gap(); }

PointSequence parse_text(std::string_view doc) {
  std::vector<DiscPoint> pts;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= doc.size()) {
    const auto end = doc.find('\n', pos);
    const auto raw = doc.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++line_no;
    pos = end == std::string_view::npos ? doc.size() + 1 : end + 1;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError("expected 're,im' or 're,im,gap', got '" + std::string(line) + "'", line_no);
    }
    const double re = parse_number(fields[0], line_no);
    const double im = parse_number(fields[1], line_no);
    if (fields.size() == 3) {
      const double gap = parse_number(fields[2], line_no);
      pts.push_back(make_point(re, im, &gap, line_no));
    } else {
      pts.push_back(make_point(re, im, nullptr, line_no));
    }
  }
  if (pts.empty()) throw ParseError("sequence file contains no points", line_no);
  return PointSequence(std::move(pts));
}

std::size_t line_of_offset(std::string_view doc, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < doc.size(); ++i) {
    if (doc[i] == '\n') ++line;
  }
  return line;
}

PointSequence parse_json(std::string_view doc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(doc);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(doc, e.byte));
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw ParseError("structured sequence needs a \"points\" array", 1);
  }
  std::vector<DiscPoint> pts;
  for (const auto& p : j["points"]) {
    const std::size_t index = pts.size();
    if (!p.is_object() || !p.contains("re") || !p.contains("im") || !p["re"].is_number() || !p["im"].is_number()) {
      throw ParseError("point " + std::to_string(index) + " needs numeric \"re\" and \"im\"", 1);
    }
    if (p.contains("gap")) {
      const double gap = p["gap"].get<double>();
      pts.push_back(make_point(p["re"].get<double>(), p["im"].get<double>(), &gap, 1));
    } else {
      pts.push_back(make_point(p["re"].get<double>(), p["im"].get<double>(), nullptr, 1));
    }
  }
  if (pts.empty()) throw ParseError("sequence file contains no points", 1);
  return PointSequence(std::move(pts));
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

PointSequence parse_sequence(std::string_view document) {
  // First significant byte, skipping blank and comment lines.
  std::size_t pos = 0;
  while (pos < document.size()) {
    const char c = document[pos];
    if (c == '#') {
      const auto nl = document.find('\n', pos);
      pos = nl == std::string_view::npos ? document.size() : nl + 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos;
      continue;
    }
    break;
  }
  if (pos == document.size()) throw ParseError("empty sequence file", line_of_offset(document, pos));
  return document[pos] == '{' ? parse_json(document) : parse_text(document);
}

std::string format_sequence(const PointSequence& seq, SequenceFormat format, std::string_view header_comment) {
  std::ostringstream out;
  if (format == SequenceFormat::json) {
    out << "{\"points\":[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const auto& p = seq[i];
      out << (i ? "," : "") << "\n  {\"re\":" << format_double(p.re()) << ",\"im\":" << format_double(p.im());
      if (needs_gap_column(p)) out << ",\"gap\":" << format_double(p.gap());
      out << "}";
    }
    out << "\n]}\n";
    return out.str();
  }
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  for (const auto& p : seq.points()) {
    out << format_double(p.re()) << "," << format_double(p.im());
    if (needs_gap_column(p)) out << "," << format_double(p.gap());
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PointSequence load_sequence(const std::filesystem::path& path) { return parse_sequence(read_file(path)); }

void save_sequence(const std::filesystem::path& path, const PointSequence& seq, SequenceFormat format,
                   std::string_view header_comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path.string() + "'");
  out << format_sequence(seq, format, header_comment);
  if (!out) throw DomainError("failed writing '" + path.string() + "'");
}

InterpolationProblem parse_targets(std::string_view document) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(document, e.byte));
  }
  if (!j.is_object()) throw ParseError("targets file must be a JSON object", 1);
  InterpolationProblem prob;
  if (!j.contains("p")) throw ParseError("targets file needs \"p\" (2 or \"inf\")", 1);
  const auto& p = j["p"];
  if (p.is_number() && p.get<double>() == 2.0) {
    prob.p = Exponent::two;
  } else if (p.is_string() && (p.get<std::string>() == "inf" || p.get<std::string>() == "infinity")) {
    prob.p = Exponent::infinity;
  } else {
    throw ParseError("\"p\" must be 2 or \"inf\"", 1);
  }
  std::size_t offset = 1;
  if (j.contains("offsetN")) {
    const auto& o = j["offsetN"];
    if (!o.is_number_integer() || o.get<long long>() < 1) throw ParseError("\"offsetN\" must be an integer >= 1", 1);
    offset = o.get<std::size_t>();
  }
  prob.tail = offset - 1;
  if (!j.contains("values") || !j["values"].is_array()) throw ParseError("targets file needs a \"values\" array", 1);
  for (const auto& v : j["values"]) {
    if (!v.is_object() || !v.contains("re") || !v.contains("im") || !v["re"].is_number() || !v["im"].is_number()) {
      throw ParseError("target " + std::to_string(prob.targets.size()) + " needs numeric \"re\" and \"im\"", 1);
    }
    prob.targets.emplace_back(v["re"].get<double>(), v["im"].get<double>());
  }
  return prob;
}

std::string format_targets(const InterpolationProblem& prob) {
  nlohmann::ordered_json j;
  if (prob.p == Exponent::two) {
    j["p"] = 2;
  } else {
    j["p"] = "inf";
  }
  j["offsetN"] = prob.tail + 1;
  j["values"] = nlohmann::ordered_json::array();
  for (const auto& a : prob.targets) j["values"].push_back({{"re", a.real()}, {"im", a.imag()}});
  return j.dump(2) + "\n";
}

InterpolationProblem load_targets(const std::filesystem::path& path) { return parse_targets(read_file(path)); }

}  // namespace thinseq
