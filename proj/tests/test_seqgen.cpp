#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "support.hpp"
#include "thinseq/error.hpp"
#include "thinseq/separation.hpp"
#include "thinseq/seqgen.hpp"
#include "thinseq/seqio.hpp"

using namespace thinseq;
using namespace thinseq::testing;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("thinseq_test_" + name);
}

}  // namespace

TEST_CASE("family values") {
  FamilySpec geo;
  geo.kind = FamilyKind::geometric;
  geo.count = 3;
  const auto g = generate(geo);
  CHECK(g[0].re() == 0.5);
  CHECK(g[1].re() == 0.75);
  CHECK(g[2].re() == 0.875);

  FamilySpec sg;
  sg.count = 3;
  const auto s = generate(sg);
  CHECK(s[0].re() == 0.5);
  CHECK(s[1].re() == 0.9375);
  CHECK(s[2].re() == 1.0 - std::ldexp(1.0, -9));
  CHECK(s[2].gap() == std::ldexp(1.0, -9));

  FamilySpec pt;
  pt.kind = FamilyKind::power_tower;
  pt.count = 5;
  const auto p = generate(pt);
  CHECK(p[4].gap() == std::ldexp(1.0, -32));
}

TEST_CASE("generated families are valid sequences") {
  for (auto kind : {FamilyKind::geometric, FamilyKind::supergeometric, FamilyKind::power_tower}) {
    FamilySpec spec;
    spec.kind = kind;
    spec.count = kind == FamilyKind::power_tower ? 9 : 30;
    const auto seq = generate(spec);
    CHECK(seq.size() == spec.count);
    CHECK(seq.distinct());
    double blaschke_sum = 0.0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      blaschke_sum += seq[i].gap();
      CHECK(seq[i].gap() > 0.0);
      if (i > 0) CHECK(seq[i].gap() < seq[i - 1].gap());
    }
    CHECK(std::isfinite(blaschke_sum));
  }
  FamilySpec arcs;
  arcs.angle_rule = AngleRule::fixed_list;
  arcs.angles = {0.0, 2.0, 4.0};
  arcs.count = 7;
  const auto a = generate(arcs);
  CHECK(std::abs(a[4].angle() - 2.0) < 1e-15);
  CHECK(a.distinct());
}

TEST_CASE("family parameter errors") {
  FamilySpec bad;
  bad.q = 1.5;
  CHECK_THROWS_AS(generate(bad), DomainError);
  bad.q = 0.5;
  bad.c = 0.0;
  CHECK_THROWS_AS(generate(bad), DomainError);
  bad.c = 1.0;
  bad.count = 0;
  CHECK_THROWS_AS(generate(bad), DomainError);
  bad.count = 65;
  CHECK_THROWS_AS(generate(bad), DomainError);
  bad.count = 40;  // 2^-1600 underflows the gap floor
  CHECK_THROWS_AS(generate(bad), DomainError);
  FamilySpec tower;
  tower.kind = FamilyKind::power_tower;
  tower.a = 1.0;
  CHECK_THROWS_AS(generate(tower), DomainError);
  FamilySpec arcs;
  arcs.angle_rule = AngleRule::fixed_list;
  CHECK_THROWS_AS(generate(arcs), DomainError);
  CHECK_THROWS_AS(parse_family_kind("fibonacci"), DomainError);
  CHECK(parse_family_kind(to_string(FamilyKind::power_tower)) == FamilyKind::power_tower);
  CHECK(describe(FamilySpec{}) == "family=supergeometric c=1 q=0.5 count=12");
}

TEST_CASE("delta oracle confirms the family characters") {
  const auto thin = separation_constants(supergeometric(12));
  const auto thick = separation_constants(geometric(12));
  CHECK(thin.one_minus_delta_j[11] < 1e-6);
  for (std::size_t j = 3; j < 12; ++j) CHECK(thin.one_minus_delta_j[j] < thin.one_minus_delta_j[j - 1]);
  for (std::size_t j = 3; j < 11; ++j) CHECK(thick.one_minus_delta_j[j] > 0.9);
}

TEST_CASE("text and structured files") {
  const auto text = parse_sequence("# comment\n0.5,0\n\n  -0.25 , 0.5\n0.1,-0.1,0.85857864376269049\n");
  CHECK(text.size() == 3);
  CHECK(text[1].re() == -0.25);
  const auto json = parse_sequence(R"({"points":[{"re":0.5,"im":0},{"re":-0.25,"im":0.5},{"re":0.1,"im":-0.1,"gap":0.85857864376269049}]})");
  CHECK(json == text);
  CHECK(parse_sequence("+0.5,0\n")[0].re() == 0.5);
  CHECK(parse_sequence(".5,0\n")[0].re() == 0.5);
  CHECK(parse_sequence("1e-1,0\n")[0].re() == 0.1);

  CHECK_THROWS_AS(parse_sequence(""), ParseError);
  CHECK_THROWS_AS(parse_sequence("# only a comment\n\n"), ParseError);
  try {
    parse_sequence("0.1,0.2\n0.3,abc\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_sequence("0.1,0.2\n# c\n0.3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_sequence("0.1,0.2\n1.5,0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_sequence("{\"points\":[\n{\"re\":0.1,\n\"im\":}]}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_sequence(R"({"pts":[]})"), ParseError);
  CHECK_THROWS_AS(parse_sequence(R"({"points":[]})"), ParseError);
  CHECK_THROWS_AS(parse_sequence(R"({"points":[{"re":"x","im":0}]})"), ParseError);
  CHECK_THROWS_AS(load_sequence(temp_file("does_not_exist")), DomainError);
}

TEST_CASE("save and load round-trip exactly") {
  std::vector<FamilySpec> specs(4);
  specs[0].kind = FamilyKind::geometric;
  specs[0].count = 30;
  specs[1].count = 24;
  specs[2].kind = FamilyKind::power_tower;
  specs[2].count = 9;
  specs[2].q = 0.7;
  specs[3].angle_rule = AngleRule::fixed_list;
  specs[3].angles = {0.1, 2.2, -1.3};
  specs[3].count = 20;
  for (const auto& spec : specs) {
    const auto seq = generate(spec);
    for (auto format : {SequenceFormat::text, SequenceFormat::json}) {
      const auto path = temp_file("roundtrip");
      save_sequence(path, seq, format, describe(spec));
      const auto back = load_sequence(path);
      CHECK(back == seq);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(format_double(back[i].re()) == format_double(seq[i].re()));
        CHECK(format_double(back[i].gap()) == format_double(seq[i].gap()));
        CHECK(back[i].modulus() == seq[i].modulus());
      }
      std::filesystem::remove(path);
    }
    CHECK(parse_sequence(format_sequence(seq, SequenceFormat::text)) ==
          parse_sequence(format_sequence(seq, SequenceFormat::json)));
  }
  const auto text = format_sequence(generate(specs[1]), SequenceFormat::text, "hello");
  CHECK(text.rfind("# hello\n", 0) == 0);

  FamilySpec from_file;
  from_file.kind = FamilyKind::custom_file;
  const auto path = temp_file("custom");
  save_sequence(path, generate(specs[3]));
  from_file.path = path.string();
  CHECK(generate(from_file) == generate(specs[3]));
  std::filesystem::remove(path);
}
