#include "systolic/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "systolic/diagrams.hpp"

namespace systolic {

using ordered_json = nlohmann::ordered_json;

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  char get() {
    char c = peek();
    ++pos;
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_ident(Cursor& cur) {
  if (!ident_start(cur.peek())) cur.fail("expected identifier");
  std::string out;
  while (ident_char(cur.peek())) out.push_back(cur.get());
  return out;
}

long long read_integer(Cursor& cur) {
  std::string out;
  if (cur.peek() == '-' || cur.peek() == '+') out.push_back(cur.get());
  if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected integer");
  while (std::isdigit(static_cast<unsigned char>(cur.peek()))) out.push_back(cur.get());
  return std::stoll(out);
}

}  // namespace

std::pair<Alphabet, Word> parse_presentation_text(const std::string& text) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.peek() != '<') cur.fail("expected '<'");
  cur.get();
  std::vector<std::string> gens;
  while (true) {
    cur.skip_ws();
    gens.push_back(read_ident(cur));
    cur.skip_ws();
    if (cur.peek() == ',') {
      cur.get();
      continue;
    }
    break;
  }
  if (cur.peek() != '|') cur.fail("expected '|'");
  cur.get();
  Alphabet alphabet(gens);

  Word relator;
  while (true) {
    cur.skip_ws();
    if (cur.peek() == '>') {
      cur.get();
      break;
    }
    if (cur.eof()) cur.fail("expected '>'");
    std::string name = read_ident(cur);
    int gen = alphabet.index_of(name);
    if (gen < 0) throw UnknownGenerator(name);
    long long exp = 1;
    if (cur.peek() == '^') {
      cur.get();
      exp = read_integer(cur);
    }
    if (exp == 0) throw ZeroExponent();
    int sign = exp > 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(exp); ++i)
      relator.push_back(Letter(gen, sign));
  }
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after '>'");
  return {alphabet, relator};
}

Presentation parse_presentation(const std::string& text) {
  auto [alphabet, relator] = parse_presentation_text(text);
  return Presentation(alphabet, cyclic_reduce(relator));
}

namespace {

Word parse_word_str(const std::string& text, const Alphabet& alphabet) {
  Cursor cur(text);
  Word out;
  while (true) {
    cur.skip_ws();
    if (cur.eof()) break;
    std::string name = read_ident(cur);
    int gen = alphabet.index_of(name);
    if (gen < 0) throw UnknownGenerator(name);
    long long exp = 1;
    if (cur.peek() == '^') {
      cur.get();
      exp = read_integer(cur);
    }
    if (exp == 0) throw ZeroExponent();
    int sign = exp > 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(exp); ++i) out.push_back(Letter(gen, sign));
  }
  return out;
}

ordered_json occurrence_json(const Occurrence& o) {
  return ordered_json::array({o.element_index, o.position});
}

Occurrence occurrence_from(const ordered_json& j, int length) {
  Occurrence o;
  o.element_index = j.at(0).get<int>();
  o.position = j.at(1).get<int>();
  o.length = length;
  return o;
}

ordered_json report_json(const ConditionReport& rep, const Alphabet& alphabet,
                         bool metric) {
  ordered_json j;
  j["holds"] = rep.holds;
  if (metric) j["lambda"] = format_rational(rep.parameter);
  ordered_json wit = ordered_json::array();
  for (const auto& p : rep.piece_witnesses) {
    ordered_json w;
    w["word"] = word_str(p.word, alphabet);
    w["length"] = p.word.size();
    ordered_json occ = ordered_json::array();
    for (const auto& o : p.occurrences) occ.push_back(occurrence_json(o));
    w["occurrences"] = occ;
    wit.push_back(w);
  }
  for (const auto& t : rep.triple_witnesses) {
    ordered_json w;
    w["w1"] = word_str(t.w1, alphabet);
    w["w2"] = word_str(t.w2, alphabet);
    w["w3"] = word_str(t.w3, alphabet);
    w["total_length"] = t.total_length;
    w["hosts"] = ordered_json{{"w1w2", occurrence_json(t.host_12)},
                              {"w1w3", occurrence_json(t.host_13)},
                              {"w2inv_w3", occurrence_json(t.host_23)}};
    wit.push_back(w);
  }
  j["witnesses"] = wit;
  j["capped"] = rep.capped;
  j["witness_total"] = rep.witness_total;
  return j;
}

ConditionReport report_from(const ordered_json& j, const Alphabet& alphabet,
                            bool metric) {
  ConditionReport rep;
  rep.holds = j.at("holds").get<bool>();
  if (metric) rep.parameter = parse_rational(j.at("lambda").get<std::string>());
  for (const auto& w : j.at("witnesses")) {
    if (w.contains("word")) {
      Piece p;
      p.word = parse_word_str(w.at("word").get<std::string>(), alphabet);
      for (const auto& o : w.at("occurrences"))
        p.occurrences.push_back(occurrence_from(o, static_cast<int>(p.word.size())));
      rep.piece_witnesses.push_back(std::move(p));
    } else {
      TripleWitness t;
      t.w1 = parse_word_str(w.at("w1").get<std::string>(), alphabet);
      t.w2 = parse_word_str(w.at("w2").get<std::string>(), alphabet);
      t.w3 = parse_word_str(w.at("w3").get<std::string>(), alphabet);
      t.total_length = w.at("total_length").get<int>();
      t.host_12 = occurrence_from(w.at("hosts").at("w1w2"),
                                  static_cast<int>(t.w1.size() + t.w2.size()));
      t.host_13 = occurrence_from(w.at("hosts").at("w1w3"),
                                  static_cast<int>(t.w1.size() + t.w3.size()));
      t.host_23 = occurrence_from(w.at("hosts").at("w2inv_w3"),
                                  static_cast<int>(t.w2.size() + t.w3.size()));
      rep.triple_witnesses.push_back(std::move(t));
    }
  }
  rep.capped = j.at("capped").get<bool>();
  rep.witness_total = j.at("witness_total").get<std::size_t>();
  return rep;
}

ordered_json certificate_json(const Certificate& cert, const Alphabet& alphabet) {
  ordered_json j;
  j["status"] = status_str(cert.status);
  j["branch"] = branch_str(cert.branch);
  j["r"] = cert.r;
  j["relator"] = cert.relator;
  if (cert.has_checks) {
    ordered_json checks;
    checks["c14"] = report_json(cert.c14, alphabet, true);
    checks["c16"] = report_json(cert.c16, alphabet, true);
    checks["t4"] = report_json(cert.t4, alphabet, false);
    checks["tprime"] = report_json(cert.tprime, alphabet, false);
    j["checks"] = checks;
  } else {
    j["checks"] = nullptr;
  }
  if (cert.complex_validation) {
    ordered_json cv;
    cv["triangles_ok"] = cert.complex_validation->triangles_ok;
    cv["link_verdict"] = link_verdict_str(cert.complex_validation->link_verdict);
    cv["bound"] = cert.complex_validation->bound;
    j["complex_validation"] = cv;
  } else {
    j["complex_validation"] = nullptr;
  }
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

}  // namespace

std::string certificate_to_json(const Certificate& cert, const Alphabet& alphabet) {
  return certificate_json(cert, alphabet).dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text, const Alphabet& alphabet) {
  ordered_json j = ordered_json::parse(text);
  Certificate cert;
  std::string status = j.at("status").get<std::string>();
  cert.status = status == "HYPERBOLIC" ? Status::HYPERBOLIC : Status::UNKNOWN;
  std::string branch = j.at("branch").get<std::string>();
  if (branch == "SHORT_RELATOR")
    cert.branch = Branch::SHORT_RELATOR;
  else if (branch == "TORSION")
    cert.branch = Branch::TORSION;
  else if (branch == "SMALL_CANCELLATION")
    cert.branch = Branch::SMALL_CANCELLATION;
  else
    cert.branch = Branch::NONE;
  cert.r = j.at("r").get<int>();
  cert.relator = j.at("relator").get<std::string>();
  if (!j.at("checks").is_null()) {
    cert.has_checks = true;
    cert.c14 = report_from(j.at("checks").at("c14"), alphabet, true);
    cert.c16 = report_from(j.at("checks").at("c16"), alphabet, true);
    cert.t4 = report_from(j.at("checks").at("t4"), alphabet, false);
    cert.tprime = report_from(j.at("checks").at("tprime"), alphabet, false);
  }
  if (!j.at("complex_validation").is_null()) {
    ComplexValidation cv;
    cv.triangles_ok = j.at("complex_validation").at("triangles_ok").get<bool>();
    std::string lv = j.at("complex_validation").at("link_verdict").get<std::string>();
    cv.link_verdict = lv == "FAIL" ? LinkVerdict::FAIL
                      : lv == "INCONCLUSIVE_LOCAL" ? LinkVerdict::INCONCLUSIVE_LOCAL
                                                   : LinkVerdict::PASS_UP_TO_BOUND;
    cv.bound = j.at("complex_validation").at("bound").get<int>();
    cert.complex_validation = cv;
  }
  if (j.contains("note")) cert.note = j.at("note").get<std::string>();
  return cert;
}

namespace {

std::string read_input(const CliConfig& config) {
  if (config.inline_input) return config.input;
  std::ifstream in(config.input);
  if (!in) throw Error("cannot open " + config.input);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_certificate_text(const Certificate& cert, const Alphabet& alphabet,
                            std::ostream& os) {
  os << "status: " << status_str(cert.status) << "\n";
  os << "branch: " << branch_str(cert.branch) << "\n";
  os << "relator: " << cert.relator << " (length " << cert.r << ")\n";
  if (!cert.note.empty()) os << "note: " << cert.note << "\n";
  if (cert.has_checks) {
    auto line = [&](const char* name, const ConditionReport& rep) {
      os << name << ": " << (rep.holds ? "holds" : "fails");
      if (!rep.holds && !rep.piece_witnesses.empty())
        os << "  (piece " << word_str(rep.piece_witnesses.front().word, alphabet)
           << ", length " << rep.piece_witnesses.front().word.size() << ")";
      if (!rep.holds && !rep.triple_witnesses.empty()) {
        const auto& t = rep.triple_witnesses.front();
        os << "  (triple " << word_str(t.w1, alphabet) << " | "
           << word_str(t.w2, alphabet) << " | " << word_str(t.w3, alphabet)
           << ", total " << t.total_length << ")";
      }
      os << "\n";
    };
    line("C'(1/4)", cert.c14);
    line("C'(1/6)", cert.c16);
    line("T(4)", cert.t4);
    line("(T')", cert.tprime);
  }
  if (cert.complex_validation) {
    os << "complex validation: triangles "
       << (cert.complex_validation->triangles_ok ? "ok" : "violated") << ", link "
       << link_verdict_str(cert.complex_validation->link_verdict) << " (bound "
       << cert.complex_validation->bound << ")\n";
  }
}

int cmd_certify(const CliConfig& config) {
  auto [alphabet, raw] = parse_presentation_text(read_input(config));
  CertifyOptions opts;
  opts.validate_complex = config.validate_complex;
  opts.cycle_bound = config.cycle_bound;
  opts.include_vertex_contacts = config.include_vertex_contacts;
  opts.allow_empty_piece = config.allow_empty_piece;
  opts.two_full_strict = config.two_full_strict;
  opts.max_witnesses = config.max_witnesses;
  Certificate cert = certify(alphabet, raw, opts);
  if (cert.presentation.empty()) cert.presentation = read_input(config);
  if (config.json)
    std::cout << certificate_to_json(cert, alphabet);
  else
    print_certificate_text(cert, alphabet, std::cout);
  return cert.status == Status::HYPERBOLIC ? 0 : 1;
}

int cmd_pieces(const CliConfig& config) {
  auto [alphabet, raw] = parse_presentation_text(read_input(config));
  CyclicWord R = cyclic_reduce(raw);
  if (R.empty()) throw EmptyRelator();
  auto pieces = enumerate_pieces(R);
  auto metric = check_metric(R, config.lambda);
  if (config.json) {
    ordered_json j;
    j["relator"] = cyclic_word_str(R, alphabet);
    j["r"] = R.length();
    ordered_json arr = ordered_json::array();
    for (const auto& p : pieces) {
      ordered_json w;
      w["word"] = word_str(p.word, alphabet);
      w["length"] = p.word.size();
      ordered_json occ = ordered_json::array();
      for (const auto& o : p.occurrences) occ.push_back(occurrence_json(o));
      w["occurrences"] = occ;
      arr.push_back(w);
    }
    j["pieces"] = arr;
    j["max_piece_length"] = max_piece_length(pieces);
    j["metric"] = report_json(metric, alphabet, true);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "relator: " << cyclic_word_str(R, alphabet) << " (length "
              << R.length() << ")\n";
    std::cout << "pieces (" << pieces.size() << "):\n";
    for (const auto& p : pieces)
      std::cout << "  " << word_str(p.word, alphabet) << "  x"
                << p.occurrences.size() << "\n";
    std::cout << "C'(" << format_rational(config.lambda) << "): "
              << (metric.holds ? "holds" : "fails") << "\n";
  }
  return metric.holds ? 0 : 1;
}

int cmd_link(const CliConfig& config) {
  AngledComplex X = parse_complex_file(config.input);
  if (config.vertex < 0) throw Error("link requires --vertex");
  LinkGraph L = link(X, config.vertex);
  if (config.json) {
    ordered_json j;
    j["vertex"] = config.vertex;
    j["link_vertices"] = L.vertex_ids;
    ordered_json es = ordered_json::array();
    for (const auto& e : L.edges)
      es.push_back(ordered_json{{"a", L.vertex_ids[e.a]},
                                {"b", L.vertex_ids[e.b]},
                                {"weight", e.weight.str()},
                                {"triangle", e.source}});
    j["link_edges"] = es;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "link of vertex " << config.vertex << ": " << L.vertex_count()
              << " vertices (incident edges), " << L.edges.size() << " corners\n";
    for (const auto& e : L.edges)
      std::cout << "  " << L.vertex_ids[e.a] << " -- " << L.vertex_ids[e.b] << "  ["
                << e.weight.str() << "]  (triangle " << e.source << ")\n";
  }
  return 0;
}

int cmd_gauss_bonnet(const CliConfig& config) {
  AngledComplex X = parse_complex_file(config.input);
  auto res = gauss_bonnet_check(X);
  if (config.json) {
    ordered_json j;
    j["lhs"] = res.lhs.str();
    j["rhs"] = res.rhs.str();
    j["equal"] = res.equal;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sum of curvatures: " << res.lhs.str() << "\n";
    std::cout << "2 pi chi:          " << res.rhs.str() << "\n";
    std::cout << (res.equal ? "equal" : "NOT equal") << "\n";
  }
  return res.equal ? 0 : 1;
}

int cmd_validate(const CliConfig& config) {
  AngledComplex X = parse_complex_file(config.input);
  auto val = validate_complex(X);
  auto wr = weight_validate(X);
  auto tf = check_3flag(X);
  auto lp = is_locally_2pi_large(X, config.cycle_bound, config.two_full_strict);
  bool ok = val.valid && wr.all_ok() && tf.holds &&
            lp.verdict == LinkVerdict::PASS_UP_TO_BOUND;
  if (config.json) {
    ordered_json j;
    ordered_json viol = ordered_json::array();
    for (const auto& v : val.violations)
      viol.push_back(ordered_json{{"rule", v.rule}, {"ids", v.ids}, {"detail", v.detail}});
    j["structure"] = ordered_json{{"valid", val.valid}, {"violations", viol}};
    ordered_json wviol = ordered_json::array();
    for (const auto& v : wr.violations)
      wviol.push_back(ordered_json{{"rule", v.rule}, {"ids", v.ids}, {"detail", v.detail}});
    j["weights"] = ordered_json{{"nonnegative", wr.nonnegative},
                                {"finite_value_set", wr.finite_value_set},
                                {"triangle_inequality", wr.triangle_inequality},
                                {"sums_below_pi", wr.sums_below_pi},
                                {"violations", wviol}};
    ordered_json missing = ordered_json::array();
    for (const auto& m : tf.missing) missing.push_back(m);
    j["three_flag"] = ordered_json{{"holds", tf.holds}, {"missing", missing}};
    j["locally_2pi_large"] =
        ordered_json{{"verdict", link_verdict_str(lp.verdict)},
                     {"bound", lp.bound},
                     {"exhaustive", lp.exhaustive},
                     {"violations", lp.violations.size()}};
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "structure: " << (val.valid ? "valid" : "INVALID") << "\n";
    for (const auto& v : val.violations) std::cout << "  " << v.rule << ": " << v.detail << "\n";
    std::cout << "weights: " << (wr.all_ok() ? "ok" : "violated") << "\n";
    for (const auto& v : wr.violations) std::cout << "  " << v.rule << ": " << v.detail << "\n";
    std::cout << "3-flag: " << (tf.holds ? "holds" : "violated") << "\n";
    std::cout << "locally 2pi-large: " << link_verdict_str(lp.verdict) << " (bound "
              << lp.bound << ")\n";
  }
  return ok ? 0 : 1;
}

int cmd_reduce(const CliConfig& config) {
  if (config.target_path.empty()) throw Error("reduce requires --target");
  static AngledComplex target;  // keep alive for the DiagramMap
  target = parse_complex_file(config.target_path);
  DiagramMap dm = parse_diagram_file(config.input, &target);
  int faces_before = dm.face_count();
  int boundary = dm.boundary_length();
  ReductionTrace trace = reduce(dm, config.vr_consecutive);
  auto vr = dm.vertex_reduced_report(config.vr_consecutive);
  bool cycles_ok = interior_cycles_at_least_2pi(dm);
  auto iso = check_linear_isoperimetric(dm, target);
  if (config.json) {
    ordered_json j;
    j["faces_before"] = faces_before;
    j["faces_after"] = dm.face_count();
    j["boundary_length"] = boundary;
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
      const char* kind = s.kind == ReductionStep::EdgeReduction ? "edge_reduction"
                         : s.kind == ReductionStep::DiamondMove ? "diamond_move"
                                                                : "vertex_removal";
      steps.push_back(ordered_json{{"move", kind},
                                   {"vertex", s.location},
                                   {"faces_before", s.faces_before},
                                   {"faces_after", s.faces_after}});
    }
    j["trace"] = steps;
    j["vertex_reduced"] = vr.reduced;
    j["interior_cycles_at_least_2pi"] = cycles_ok;
    j["K"] = format_rational(iso.K);
    j["area_bound_holds"] = iso.holds;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "faces: " << faces_before << " -> " << dm.face_count() << "\n";
    std::cout << "moves: " << trace.steps.size() << "\n";
    std::cout << "vertex reduced: " << (vr.reduced ? "yes" : "no") << "\n";
    std::cout << "interior cycles >= 2pi: " << (cycles_ok ? "yes" : "no") << "\n";
    std::cout << "K = " << format_rational(iso.K) << ", area " << iso.area << " <= K*"
              << iso.boundary << ": " << (iso.holds ? "yes" : "no") << "\n";
  }
  return (vr.reduced && cycles_ok && iso.holds) ? 0 : 1;
}

}  // namespace

int run(const CliConfig& config) {
  try {
    if (config.command == "certify") return cmd_certify(config);
    if (config.command == "pieces") return cmd_pieces(config);
    if (config.command == "link") return cmd_link(config);
    if (config.command == "gauss-bonnet") return cmd_gauss_bonnet(config);
    if (config.command == "validate") return cmd_validate(config);
    if (config.command == "reduce") return cmd_reduce(config);
    std::cerr << "unknown command: " << config.command << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"certifies hyperbolicity of one-relator groups via small cancellation"};
  app.require_subcommand(1);
  CliConfig config;

  std::string lambda_text = "1/4";
  auto add_common = [&](CLI::App* cmd, bool wants_input) {
    if (wants_input) {
      cmd->add_option("input", config.input, "input file");
      cmd->add_flag_callback("--inline", [&config]() { config.inline_input = true; },
                             "treat the input argument as literal text");
    }
    cmd->add_flag("--json", config.json, "machine-readable output");
  };

  CLI::App* certify_cmd = app.add_subcommand("certify", "certify a presentation");
  add_common(certify_cmd, true);
  certify_cmd->add_flag("--validate-complex", config.validate_complex,
                        "attach triangle and central-link evidence");
  certify_cmd->add_option("--cycle-bound", config.cycle_bound, "link cycle bound");
  certify_cmd->add_flag("--include-vertex-contacts", config.include_vertex_contacts,
                        "include length-0 contacts in the central link");
  certify_cmd->add_flag("--allow-empty-piece", config.allow_empty_piece,
                        "admit one empty piece in T(4)/(T') triples");
  certify_cmd->add_flag("--two-full-strict", config.two_full_strict,
                        "common-neighbour test over the whole link");
  certify_cmd->add_option("--max-witnesses", config.max_witnesses,
                          "witness storage cap");

  CLI::App* pieces_cmd = app.add_subcommand("pieces", "enumerate pieces");
  add_common(pieces_cmd, true);
  pieces_cmd->add_option("--lambda", lambda_text, "metric condition parameter");

  CLI::App* link_cmd = app.add_subcommand("link", "vertex link of a complex fixture");
  add_common(link_cmd, true);
  link_cmd->add_option("--vertex", config.vertex, "base vertex id")->required();

  CLI::App* gb_cmd = app.add_subcommand("gauss-bonnet", "curvature balance of a fixture");
  add_common(gb_cmd, true);

  CLI::App* validate_cmd = app.add_subcommand("validate", "validate a complex fixture");
  add_common(validate_cmd, true);
  validate_cmd->add_option("--cycle-bound", config.cycle_bound, "link cycle bound");
  validate_cmd->add_flag("--two-full-strict", config.two_full_strict,
                         "common-neighbour test over the whole link");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce a diagram fixture");
  add_common(reduce_cmd, true);
  reduce_cmd->add_option("--target", config.target_path, "target complex fixture")
      ->required();
  reduce_cmd->add_flag("--vr-consecutive", config.vr_consecutive,
                       "consecutive-only vertex-reduction test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    config.lambda = parse_rational(lambda_text);
    if (config.lambda <= Rational(0) || config.lambda >= Rational(1)) {
      std::cerr << "error: lambda must satisfy 0 < lambda < 1\n";
      return 2;
    }
    if (config.cycle_bound < 4) {
      std::cerr << "error: cycle bound must be >= 4\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  for (auto* cmd : app.get_subcommands()) config.command = cmd->get_name();
  return run(config);
}

}  // namespace systolic
