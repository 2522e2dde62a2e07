#ifndef SYSTOLIC_CLI_HPP
#define SYSTOLIC_CLI_HPP

#include <string>
#include <utility>

#include "systolic/onerelator.hpp"
#include "systolic/words.hpp"

namespace systolic {

// Grammar: "<" gens "|" relator ">"; gens = comma-separated identifiers;
// relator = whitespace-separated terms ident("^" nonzero-integer)?.
std::pair<Alphabet, Word> parse_presentation_text(const std::string& text);
Presentation parse_presentation(const std::string& text);

struct CliConfig {
  std::string command;  // certify | pieces | link | gauss-bonnet | reduce | validate
  Rational lambda = Rational(1, 4);
  int cycle_bound = 12;
  bool json = false;
  bool validate_complex = false;
  bool include_vertex_contacts = false;
  bool allow_empty_piece = false;
  bool two_full_strict = false;
  bool vr_consecutive = false;
  std::string input;        // path, or inline text with inline_input
  bool inline_input = false;
  std::string target_path;  // reduce: target complex fixture
  int vertex = -1;          // link: base vertex
  std::size_t max_witnesses = 64;
};

// Serialized certificate, deterministic key order and witness order.
std::string certificate_to_json(const Certificate& cert, const Alphabet& alphabet);
Certificate certificate_from_json(const std::string& text, const Alphabet& alphabet);

// Exit codes: certify 0 = HYPERBOLIC, 1 = UNKNOWN, 2 = input error; other
// commands 0 = all checks pass, 1 = some check failed, 2 = input error.
int run(const CliConfig& config);

int main_entry(int argc, char** argv);

}  // namespace systolic

#endif
