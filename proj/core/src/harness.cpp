#include "mutarc/harness.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace mutarc {

namespace fs = std::filesystem;

// ---------------------------------------------------------------- brackets

Integer ParamTerm::coeff_at(int n) const {
  Integer c = coeff.at(n);
  if (parity == Parity::N && n % 2) c = -c;
  if (parity == Parity::NPlus1 && n % 2 == 0) c = -c;
  return c;
}

BracketForm ParamBracket::lambda_at(int n) const {
  if (variable != 'a') throw DomainError("bracket is not in a and z");
  return {{low.coeff_at(n), low.z, low.exp.at(n)}, {high.coeff_at(n), high.z, high.exp.at(n)}};
}

TBracket ParamBracket::jones_at(int n) const {
  if (variable != 't') throw DomainError("bracket is not in t");
  return {low.coeff_at(n), HalfInteger(low.exp.at(n)), high.coeff_at(n), HalfInteger(high.exp.at(n))};
}

namespace {

class BracketReader {
 public:
  explicit BracketReader(std::string_view s) : s_(s) {}

  ParamBracket read() {
    ParamBracket b;
    b.variable = 0;
    expect('[');
    b.low = term(b.variable);
    expect(',');
    skip_space();
    b.high = term(b.variable);
    expect(']');
    skip_space();
    if (pos_ != s_.size()) fail("trailing input");
    if (b.variable == 0) fail("bracket has no variable");
    return b;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("bracket: " + what, pos_); }
  bool peek(std::string_view lit) const { return s_.substr(pos_, lit.size()) == lit; }
  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  int number() {
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  // (pn+q) with p or q possibly absent
  Linear linear() {
    expect('(');
    Linear l;
    int sign = 1;
    if (accept("-")) sign = -1;
    int value = 1;
    bool have_digits = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = number();
      have_digits = true;
    }
    if (accept("n")) {
      l.per_n = sign * value;
      if (peek("+") || peek("-")) {
        const int s = s_[pos_++] == '-' ? -1 : 1;
        l.constant = s * number();
      }
    } else {
      if (!have_digits) fail("expected a linear expression in n");
      l.constant = sign * value;
    }
    expect(')');
    return l;
  }

  Linear exponent() {
    if (peek("(")) return linear();
    return {0, number()};
  }

  ParamTerm term(char& variable) {
    ParamTerm t;
    int sign = 1;
    if (accept("-")) sign = -1;
    if (accept("(-1)^(n+1)*")) {
      t.parity = ParamTerm::Parity::NPlus1;
    } else if (accept("(-1)^n*")) {
      t.parity = ParamTerm::Parity::N;
    }
    if (peek("(")) {
      t.coeff = linear();
      expect('*');
    } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      t.coeff = {0, number()};
      expect('*');
    }
    t.coeff.per_n *= sign;
    t.coeff.constant *= sign;
    if (accept("z")) {
      t.z = accept("^") ? number() : 1;
      if (!accept("*")) fail("expected '*' after the z power");
    }
    if (pos_ >= s_.size() || (s_[pos_] != 'a' && s_[pos_] != 't')) fail("expected a or t");
    const char v = s_[pos_++];
    if (variable && variable != v) fail("mixed variables");
    variable = v;
    expect('^');
    t.exp = exponent();
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string render(const Linear& l) {
  if (l.per_n == 0) return std::to_string(l.constant);
  std::string out = l.per_n == 1 ? "n" : l.per_n == -1 ? "-n" : std::to_string(l.per_n) + "n";
  if (l.constant > 0) out += "+" + std::to_string(l.constant);
  if (l.constant < 0) out += std::to_string(l.constant);
  return out;
}

std::string render(const ParamTerm& t, char variable) {
  std::string out;
  Linear c = t.coeff;
  if (c.per_n == 0 && c.constant < 0) {
    out += "-";
    c.constant = -c.constant;
  }
  if (t.parity == ParamTerm::Parity::N) out += "(-1)^n*";
  if (t.parity == ParamTerm::Parity::NPlus1) out += "(-1)^(n+1)*";
  if (c.per_n != 0) {
    out += "(" + render(c) + ")*";
  } else if (c.constant != 1) {
    out += std::to_string(c.constant) + "*";
  }
  if (t.z == 1) out += "z*";
  if (t.z != 0 && t.z != 1) out += "z^" + std::to_string(t.z) + "*";
  out += variable;
  out += "^";
  out += t.exp.per_n == 0 ? render(t.exp) : "(" + render(t.exp) + ")";
  return out;
}

}  // namespace

ParamBracket parse_param_bracket(std::string_view text) { return BracketReader(text).read(); }

std::string to_string(const ParamBracket& b) {
  return "[" + render(b.low, b.variable) + ", " + render(b.high, b.variable) + "]";
}

// ---------------------------------------------------------------- golden data

const GoldenTheorem& GoldenCorpus::at(int theorem) const {
  if (theorem < 1 || theorem > static_cast<int>(theorems.size())) throw DomainError("no golden data for theorem " + std::to_string(theorem));
  return theorems[theorem - 1];
}

namespace {

std::string read_text(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw GoldenError("missing golden file " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw GoldenError(p.string() + ": empty file");
  if (s.find('\n') != std::string::npos) throw GoldenError(p.string() + ": expected a single line");
  return s;
}

template <class Parse>
auto parse_file(const fs::path& p, Parse parse) {
  const std::string text = read_text(p);
  try {
    auto value = parse(text);
    if (to_string(value) != text)
      throw GoldenError(p.string() + ":1: not in canonical form (renders as \"" + to_string(value) + "\")");
    return value;
  } catch (const ParseError& e) {
    throw GoldenError(p.string() + ":1: " + e.what());
  }
}

BiLaurent bilaurent_file(const fs::path& p) {
  BiLaurent v = parse_file(p, [](const std::string& s) { return parse_bilaurent(s); });
  if (v.is_zero()) throw GoldenError(p.string() + ": zero polynomial");
  return v;
}

LaurentPoly laurent_file(const fs::path& p) {
  LaurentPoly v = parse_file(p, [](const std::string& s) { return parse_laurent(s); });
  if (v.is_zero()) throw GoldenError(p.string() + ": zero polynomial");
  return v;
}

}  // namespace

GoldenCorpus ingest_golden(const fs::path& dir) {
  fs::path root = dir;
  if (!fs::is_directory(root / "thm1") && fs::is_directory(root / "golden")) root /= "golden";
  if (!fs::is_directory(root)) throw GoldenError("golden directory not found: " + dir.string());
  GoldenCorpus corpus;
  corpus.dir = root;
  for (int k = 1; k <= 7; ++k) {
    const fs::path d = root / ("thm" + std::to_string(k));
    if (!fs::is_directory(d)) throw GoldenError("missing golden directory " + d.string());
    GoldenTheorem g;
    g.theorem = k;
    g.lambda2n = parse_file(d / "lambda2n.bracket", [](const std::string& s) { return parse_param_bracket(s); });
    g.v2n = parse_file(d / "v2n.bracket", [](const std::string& s) { return parse_param_bracket(s); });
    if (g.lambda2n.variable != 'a') throw GoldenError((d / "lambda2n.bracket").string() + ": expected a bracket in a and z");
    if (g.v2n.variable != 't' || g.v2n.low.z || g.v2n.high.z)
      throw GoldenError((d / "v2n.bracket").string() + ": expected a bracket in t");
    g.lambda2 = bilaurent_file(d / "lambda2.poly");
    g.lambda1 = bilaurent_file(d / "lambda1.poly");
    g.lambda_dp = bilaurent_file(d / "lambdaDp.poly");
    g.v2 = laurent_file(d / "v2.poly");
    if (fs::exists(d / "vDp.poly")) g.v_dp = laurent_file(d / "vDp.poly");
    if (fs::exists(d / "vD1.poly")) g.v_d1 = laurent_file(d / "vD1.poly");
    if (!g.v_dp && !g.v_d1) throw GoldenError("missing golden file " + (d / "vDp.poly").string() + " (or vD1.poly)");

    if (bracket_form(g.lambda2) != g.lambda2n.lambda_at(1))
      throw GoldenError(d.string() + ": lambda2n.bracket at n = 1 is " + to_string(g.lambda2n.lambda_at(1)) +
                        " but lambda2.poly has " + to_string(bracket_form(g.lambda2)));
    if (t_bracket(g.v2) != g.v2n.jones_at(1))
      throw GoldenError(d.string() + ": v2n.bracket at n = 1 is " + to_string(g.v2n.jones_at(1)) + " but v2.poly has " +
                        to_string(t_bracket(g.v2)));
    corpus.theorems.push_back(std::move(g));
  }
  return corpus;
}

// ---------------------------------------------------------------- twist box

TwistBox resolve_twist_box(int theorem, int variant, int n) {
  if (n < 1) throw DomainError("the twist box needs n >= 1");
  MontesinosDiagram md = build_montesinos(family(theorem, variant, n));
  const TwistRegion& region = md.twists.back();
  TwistBox box;
  box.diagram = md.diagram;
  box.crossing = region.crossings.front();
  box.sign = md.diagram.sign(box.crossing);
  box.along = smooth(md.diagram, box.crossing, along_smoothing(region));
  box.oriented_along = oriented_smoothing(md.diagram, box.crossing) == along_smoothing(region);
  Diagram d = smooth(md.diagram, box.crossing, across_smoothing(region));
  while (auto curl = detect_curl(d)) {
    box.curl_exponent += curl->sign;
    d = remove_curl(d, curl->crossing);
  }
  box.stripped = d;
  return box;
}

RecurrenceCheck verify_lambda_recurrence(int theorem, int n, const SkeinConfig& cfg, int curl_sign) {
  const TwistBox box = resolve_twist_box(theorem, 0, n);
  const BiLaurent l2n = lambda(box.diagram, cfg);
  const BiLaurent l_odd = lambda(box.along, cfg);
  const BiLaurent l_dp = lambda(box.stripped, cfg);
  const BiLaurent l_prev = lambda(build_diagram(family(theorem, 0, n - 1)), cfg);
  RecurrenceCheck r;
  r.curl_exponent = curl_sign * box.curl_exponent;
  r.crossing_sign = box.sign;
  r.type = box.oriented_along ? 2 : 1;
  r.holds = l2n == l_odd.shifted(1, 0) + l_dp.shifted(1, r.curl_exponent) - l_prev;
  return r;
}

RecurrenceCheck verify_jones_recurrence(int theorem, int n, int threads) {
  const TwistBox box = resolve_twist_box(theorem, 0, n);
  const Diagram zero = smooth(box.diagram, box.crossing, oriented_smoothing(box.diagram, box.crossing));
  const LaurentPoly v2n = jones(box.diagram, threads);
  const LaurentPoly v0 = jones(zero, threads);
  const LaurentPoly prev = jones(build_diagram(family(theorem, 0, n - 1)), threads);
  // type 1: V = t^2 V' + (t^{3/2} - t^{1/2}) V0, type 2: the same with t -> t^{-1}
  const LaurentPoly one = prev.shifted(4) + v0 * (LaurentPoly::monomial(1, 3) - LaurentPoly::monomial(1, 1));
  const LaurentPoly two = prev.shifted(-4) + v0 * (LaurentPoly::monomial(1, -3) - LaurentPoly::monomial(1, -1));
  RecurrenceCheck r;
  r.crossing_sign = box.sign;
  if (v2n == one) {
    r.holds = true;
    r.type = 1;
  } else if (v2n == two) {
    r.holds = true;
    r.type = 2;
  }
  return r;
}

// ---------------------------------------------------------------- reports

bool NRecord::pass() const {
  if (!bracket_match || !jones_match || !arc_certified || !distinct || !f_equal || !v_equal || !obstruction_ok) return false;
  if (lambda_recurrence && !lambda_recurrence->holds) return false;
  if (jones_recurrence && !jones_recurrence->holds) return false;
  if (golden_match && !*golden_match) return false;
  return true;
}

bool TheoremReport::pass() const {
  return !records.empty() && std::all_of(records.begin(), records.end(), [](const NRecord& r) { return r.pass(); });
}

namespace {

// Runs f(0..count-1) on up to `threads` workers; results land by index.
template <class F>
void parallel_for(int count, int threads, F f) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::mutex mu;
  int next = 0;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        int i;
        {
          std::lock_guard lock(mu);
          if (next >= count || error) return;
          i = next++;
        }
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

SkeinConfig grid_config(const SkeinConfig& cfg) {
  SkeinConfig g = cfg;
  g.max_crossings = std::max(cfg.max_crossings, 4000);
  g.threads = 1;
  return g;
}

std::string difference_note(const std::string& what, const BiLaurent& golden, const BiLaurent& engine) {
  for (int s = -3; s <= 3; ++s)
    if (s != 0 && golden == engine.shifted(0, s))
      return what + " equals the engine value times a^" + std::to_string(s);
  const BiLaurent d = golden - engine;
  std::string out = what + " differs from the engine value in " + std::to_string(d.size()) + " term(s)";
  if (d.size() <= 4) out += ": golden - engine = " + to_string(d);
  return out;
}

NRecord verify_n(int theorem, int n, const GoldenTheorem& golden, const VerifyOptions& opt, std::vector<std::string>& notes) {
  NRecord rec;
  rec.n = n;
  SkeinConfig cfg = opt.skein;
  cfg.threads = 1;
  const int variants = family_size(theorem);
  const int crossings = family_crossings(theorem, n);
  std::vector<BiLaurent> fs;
  std::vector<LaurentPoly> vs;
  BiLaurent lambda0;
  for (int v = 0; v < variants; ++v) {
    rec.specs.push_back(family(theorem, v, n));
    const Diagram d = build_diagram(rec.specs.back());
    if (v == 0) lambda0 = lambda(d, cfg);
    fs.push_back(kauffman_f(d, cfg));
    vs.push_back(jones(d));
  }

  rec.distinct = true;
  for (int i = 0; i < variants; ++i)
    for (int j = i + 1; j < variants; ++j) {
      try {
        if (classify_equal(rec.specs[i], rec.specs[j])) rec.distinct = false;
      } catch (const NotClassifiable& e) {
        rec.distinct = false;
        notes.push_back("n = " + std::to_string(n) + ": " + e.what());
      }
    }
  rec.f_equal = std::all_of(fs.begin(), fs.end(), [&](const BiLaurent& f) { return f == fs[0]; });
  rec.v_equal = std::all_of(vs.begin(), vs.end(), [&](const LaurentPoly& v) { return v == vs[0]; });

  rec.lambda_bracket = bracket_form(lambda0);
  rec.breadth_a = breadth_a(lambda0);
  if (n >= 1) {
    rec.expected_bracket = golden.lambda2n.lambda_at(n);
    rec.bracket_match = rec.lambda_bracket == *rec.expected_bracket;
  }
  rec.jones_bracket = t_bracket(vs[0]);
  rec.jones_breadth = breadth_t(vs[0]);
  if (n >= 1) {
    rec.expected_jones = golden.v2n.jones_at(n);
    rec.jones_match = rec.jones_bracket == *rec.expected_jones;
  }

  rec.arc_lower = breadth_a(fs[0]) + 2;
  rec.arc_certified = rec.arc_lower == crossings;
  const SkeinConfig gcfg = grid_config(cfg);
  for (int v = 0; v < variants; ++v) {
    const GridDiagram g = family_template(theorem, v, n);
    rec.arc_upper.push_back(arc_count(g));
    if (rec.arc_upper.back() != rec.arc_lower) rec.arc_certified = false;
    if (kauffman_f(grid_to_diagram(g), gcfg) != fs[v]) {
      rec.arc_certified = false;
      notes.push_back("n = " + std::to_string(n) + ": the grid template of variant " + std::to_string(v) +
                      " does not present the knot");
    }
  }

  rec.obstruction_ok = true;
  for (const LaurentPoly& v : vs) {
    rec.obstructions.push_back(semi_alternating_obstruction(v, crossings));
    if (rec.obstructions.back().verdict != Verdict::NotSemiAlternating) rec.obstruction_ok = false;
  }

  if (n >= 1 && opt.recurrences) {
    rec.lambda_recurrence = verify_lambda_recurrence(theorem, n, cfg);
    rec.jones_recurrence = verify_jones_recurrence(theorem, n);
  }

  if (n == 1) {
    rec.golden_match = lambda0 == golden.lambda2 && vs[0] == golden.v2;
    const TwistBox box = resolve_twist_box(theorem, 0, 1);
    const BiLaurent l1 = lambda(box.along, cfg);
    const BiLaurent ldp = lambda(box.stripped, cfg);
    const LaurentPoly v0 = jones(smooth(box.diagram, box.crossing, oriented_smoothing(box.diagram, box.crossing)));
    rec.golden_aux["lambda1"] = l1 == golden.lambda1;
    rec.golden_aux["lambdaDp"] = ldp == golden.lambda_dp;
    if (l1 != golden.lambda1) notes.push_back(difference_note("lambda1.poly", golden.lambda1, l1));
    if (ldp != golden.lambda_dp) notes.push_back(difference_note("lambdaDp.poly", golden.lambda_dp, ldp));
    // Right-hand side of the Lambda recurrence from the printed polynomials
    // (only Lambda_0 comes from the engine).
    const BiLaurent l_prev = lambda(build_diagram(family(theorem, 0, 0)), cfg);
    const BiLaurent rhs = golden.lambda1.shifted(1, 0) + golden.lambda_dp.shifted(1, box.curl_exponent) - l_prev;
    rec.golden_aux["recurrence_exact"] = rhs == golden.lambda2;
    rec.golden_aux["recurrence_extremes"] = !rhs.is_zero() && bracket_form(rhs) == bracket_form(golden.lambda2);
    if (!rec.golden_aux["recurrence_extremes"].get<bool>())
      notes.push_back("the recurrence rebuilt from the printed polynomials has extreme terms " + to_string(bracket_form(rhs)) +
                      ", printed Lambda_2 has " + to_string(bracket_form(golden.lambda2)));
    const auto& gv = golden.v_dp ? golden.v_dp : golden.v_d1;
    const std::string name = golden.v_dp ? "vDp" : "vD1";
    rec.golden_aux[name] = v0 == *gv;
    if (v0 != *gv) notes.push_back(name + ".poly differs from V of the oriented smoothing");
    // The file name says which smoothing the oriented one is.
    if ((name == "vD1") != box.oriented_along)
      notes.push_back(name + ".poly is named for the other smoothing of the top crossing");
  }
  return rec;
}

}  // namespace

TheoremReport verify_theorem(int theorem, int n_max, const GoldenCorpus& corpus, const VerifyOptions& opt) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  const GoldenTheorem& golden = corpus.at(theorem);
  TheoremReport report;
  report.theorem = theorem;
  report.records.resize(n_max + 1);
  std::vector<std::vector<std::string>> notes(n_max + 1);
  parallel_for(n_max + 1, opt.threads, [&](int n) { report.records[n] = verify_n(theorem, n, golden, opt, notes[n]); });
  for (const auto& ns : notes)
    for (const auto& s : ns)
      if (std::find(report.notes.begin(), report.notes.end(), s) == report.notes.end()) report.notes.push_back(s);
  for (const NRecord& r : report.records)
    if (!r.bracket_match)
      report.notes.push_back("n = " + std::to_string(r.n) + ": bracket " + to_string(r.lambda_bracket) + ", expected " +
                             to_string(*r.expected_bracket));
  return report;
}

namespace {

nlohmann::json to_json(const RecurrenceCheck& r) {
  return {{"holds", r.holds}, {"type", r.type}, {"curl_exponent", r.curl_exponent}, {"crossing_sign", r.crossing_sign}};
}

}  // namespace

nlohmann::json to_json(const TheoremReport& r) {
  nlohmann::json records = nlohmann::json::array();
  for (const NRecord& rec : r.records) {
    nlohmann::json specs = nlohmann::json::array();
    for (const auto& s : rec.specs) specs.push_back(to_string(s));
    nlohmann::json obs = nlohmann::json::array();
    for (const auto& o : rec.obstructions) obs.push_back(to_json(o));
    nlohmann::json j = {{"n", rec.n},
                        {"specs", specs},
                        {"lambda_bracket", to_json(rec.lambda_bracket)},
                        {"bracket_match", rec.bracket_match},
                        {"breadth_a", rec.breadth_a},
                        {"jones_breadth", rec.jones_breadth.str()},
                        {"jones_bracket", to_json(rec.jones_bracket)},
                        {"jones_match", rec.jones_match},
                        {"arc_lower", rec.arc_lower},
                        {"arc_upper", rec.arc_upper},
                        {"arc_certified", rec.arc_certified},
                        {"distinct", rec.distinct},
                        {"f_equal", rec.f_equal},
                        {"v_equal", rec.v_equal},
                        {"obstructions", obs},
                        {"obstruction_ok", rec.obstruction_ok},
                        {"pass", rec.pass()}};
    if (rec.expected_bracket) j["expected_bracket"] = to_json(*rec.expected_bracket);
    if (rec.expected_jones) j["expected_jones"] = to_json(*rec.expected_jones);
    if (rec.lambda_recurrence) j["lambda_recurrence"] = to_json(*rec.lambda_recurrence);
    if (rec.jones_recurrence) j["jones_recurrence"] = to_json(*rec.jones_recurrence);
    if (rec.golden_match) {
      j["golden_match"] = *rec.golden_match;
      j["golden_aux"] = rec.golden_aux;
    }
    records.push_back(std::move(j));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"theorem", r.theorem},
          {"status", r.pass() ? "pass" : "fail"},
          {"records", records},
          {"notes", r.notes}};
}

std::string to_text(const TheoremReport& r) {
  std::ostringstream out;
  out << "theorem " << r.theorem << ": " << (r.pass() ? "pass" : "fail") << "\n";
  auto yn = [](bool b) { return b ? "ok" : "FAIL"; };
  for (const NRecord& rec : r.records) {
    out << "  n = " << rec.n << "  " << to_string(rec.specs.front()) << "\n";
    out << "    Lambda bracket " << to_string(rec.lambda_bracket);
    if (rec.expected_bracket) out << "  expected " << to_string(*rec.expected_bracket) << "  " << yn(rec.bracket_match);
    out << "\n    V bracket " << to_string(rec.jones_bracket) << "  breadth " << rec.jones_breadth.str();
    if (rec.expected_jones) out << "  expected " << to_string(*rec.expected_jones) << "  " << yn(rec.jones_match);
    out << "\n    arc index " << rec.arc_lower << " <=";
    for (int u : rec.arc_upper) out << " " << u;
    out << "  " << yn(rec.arc_certified) << "\n";
    out << "    mutants distinct " << yn(rec.distinct) << ", F equal " << yn(rec.f_equal) << ", V equal " << yn(rec.v_equal)
        << ", not semi-alternating " << yn(rec.obstruction_ok) << "\n";
    if (rec.lambda_recurrence)
      out << "    Lambda recurrence " << yn(rec.lambda_recurrence->holds) << " (curl exponent "
          << rec.lambda_recurrence->curl_exponent << ")\n";
    if (rec.jones_recurrence)
      out << "    V recurrence " << yn(rec.jones_recurrence->holds) << " (type " << rec.jones_recurrence->type << ")\n";
    if (rec.golden_match) out << "    golden Lambda_2, V_2 " << yn(*rec.golden_match) << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

std::vector<Table1Row> table1(const SkeinConfig& cfg) {
  std::vector<Table1Row> rows;
  for (int k = 1; k <= 7; ++k)
    for (int v = 0; v < family_size(k); ++v) {
      Table1Row row;
      row.theorem = k;
      row.variant = v;
      row.name = family_name(k, v);
      row.spec = family(k, v, 0);
      row.printed = k <= 2 ? 11 : 12;
      rows.push_back(row);
    }
  parallel_for(static_cast<int>(rows.size()), cfg.threads, [&](int i) {
    Table1Row& row = rows[i];
    SkeinConfig c = cfg;
    c.threads = 1;
    const BiLaurent f = kauffman_f(build_diagram(row.spec), c);
    row.lower = breadth_a(f) + 2;
    const GridDiagram g = family_template(row.theorem, row.variant, 0);
    row.upper = kauffman_f(grid_to_diagram(g), grid_config(c)) == f ? arc_count(g) : -1;
  });
  return rows;
}

nlohmann::json to_json(const std::vector<Table1Row>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"theorem", r.theorem},
                   {"variant", r.variant},
                   {"name", r.name},
                   {"spec", to_string(r.spec)},
                   {"printed", r.printed},
                   {"lower", r.lower},
                   {"upper", r.upper},
                   {"pass", r.pass()}});
  return {{"schema_version", kReportSchemaVersion}, {"rows", out}};
}

std::string to_text(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  for (const auto& r : rows)
    out << r.theorem << "  " << to_string(r.spec) << "  " << r.name << "  " << r.printed << "  [" << r.lower << ", " << r.upper
        << "]  " << (r.pass() ? "ok" : "FAIL") << "\n";
  return out.str();
}

}  // namespace mutarc
