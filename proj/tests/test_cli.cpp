#include <doctest.h>

#include <iostream>
#include <sstream>

#include "systolic/cli.hpp"

using namespace systolic;

namespace {

struct CaptureStdout {
  std::ostringstream buffer;
  std::streambuf* old;
  CaptureStdout() : old(std::cout.rdbuf(buffer.rdbuf())) {}
  ~CaptureStdout() { std::cout.rdbuf(old); }
};

}  // namespace

TEST_CASE("parse_presentation") {
  auto [ab, r1] = parse_presentation_text("< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >");
  CHECK(ab.size() == 2);
  CHECK(cyclic_reduce(r1).length() == 15);

  auto [at, r2] = parse_presentation_text("< a, t | a t^-1 a t a^2 t^-2 a^-1 t^2 >");
  CHECK(cyclic_reduce(r2).length() == 11);

  CHECK_THROWS_AS(parse_presentation_text("< a | a^0 >"), ZeroExponent);
  CHECK_THROWS_AS(parse_presentation_text("< a | b >"), UnknownGenerator);
  CHECK_THROWS_AS(parse_presentation_text("a | a"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("< a | a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("< a | a a^-1 >"), EmptyRelator);
}

TEST_CASE("certify exit codes") {
  CliConfig cfg;
  cfg.command = "certify";
  cfg.inline_input = true;

  cfg.input = "< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >";
  {
    CaptureStdout cap;
    CHECK(run(cfg) == 0);
  }
  cfg.input = "< a, t | a t^-1 a t a^2 t^-2 a^-1 t^2 >";
  {
    CaptureStdout cap;
    CHECK(run(cfg) == 1);
  }
  cfg.input = "< a | a >";
  {
    CaptureStdout cap;
    CHECK(run(cfg) == 0);
  }
  cfg.input = "< a | a^0 >";
  {
    CaptureStdout cap;
    CHECK(run(cfg) == 2);
  }
}

TEST_CASE("certificate json round trip and determinism") {
  auto [ab, r1] = parse_presentation_text("< a, b | a^4 b a b a b^-1 a^-1 b^3 a^-1 b >");
  CertifyOptions opts;
  opts.validate_complex = true;
  opts.cycle_bound = 4;
  Certificate cert = certify(ab, r1, opts);

  std::string one = certificate_to_json(cert, ab);
  std::string two = certificate_to_json(certify(ab, r1, opts), ab);
  CHECK(one == two);  // byte-identical on identical inputs

  Certificate back = certificate_from_json(one, ab);
  CHECK(certificate_to_json(back, ab) == one);
  CHECK(back.status == cert.status);
  CHECK(back.branch == cert.branch);
  CHECK(back.r == cert.r);
  CHECK(back.c14.holds == cert.c14.holds);
  CHECK(back.t4.witness_total == cert.t4.witness_total);
}

TEST_CASE("json output is emitted on request") {
  CliConfig cfg;
  cfg.command = "certify";
  cfg.inline_input = true;
  cfg.json = true;
  cfg.input = "< a, b | a b a^-1 b^-1 >";
  CaptureStdout cap;
  CHECK(run(cfg) == 1);
  auto text = cap.buffer.str();
  CHECK(text.find("\"status\": \"UNKNOWN\"") != std::string::npos);
  CHECK(text.find("\"branch\": \"none\"") != std::string::npos);
}

TEST_CASE("pieces command") {
  CliConfig cfg;
  cfg.command = "pieces";
  cfg.inline_input = true;
  cfg.json = true;
  cfg.input = "< a, b | a^2 b^2 >";
  CaptureStdout cap;
  run(cfg);
  auto text = cap.buffer.str();
  CHECK(text.find("\"max_piece_length\": 1") != std::string::npos);
}
