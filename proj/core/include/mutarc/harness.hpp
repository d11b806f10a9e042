#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutarc/diagram.hpp"
#include "mutarc/grid.hpp"
#include "mutarc/jones.hpp"
#include "mutarc/kauffman.hpp"
#include "mutarc/laurent.hpp"
#include "mutarc/montesinos.hpp"

namespace mutarc {

inline constexpr int kReportSchemaVersion = 1;

// ---------------------------------------------------------------- brackets

// p*n + q
struct Linear {
  int per_n = 0;
  int constant = 0;
  int at(int n) const { return per_n * n + constant; }
  bool operator==(const Linear&) const = default;
};

// sign * c * z^z * x^exp, where the sign may alternate with n.
struct ParamTerm {
  enum class Parity { None, N, NPlus1 };  // 1, (-1)^n, (-1)^(n+1)
  Parity parity = Parity::None;
  Linear coeff{0, 1};
  int z = 0;
  Linear exp;
  Integer coeff_at(int n) const;
  bool operator==(const ParamTerm&) const = default;
};

// A bracket form whose terms depend on n, e.g. [z^3*a^(-2n-4), (-1)^n*2*z^2*a^5].
struct ParamBracket {
  char variable = 'a';  // 'a' for Lambda, 't' for V
  ParamTerm low;
  ParamTerm high;
  BracketForm lambda_at(int n) const;
  TBracket jones_at(int n) const;
  bool operator==(const ParamBracket&) const = default;
};

ParamBracket parse_param_bracket(std::string_view text);
std::string to_string(const ParamBracket& b);

// ---------------------------------------------------------------- golden data

class GoldenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GoldenTheorem {
  int theorem = 0;
  ParamBracket lambda2n;
  ParamBracket v2n;
  BiLaurent lambda2;
  BiLaurent lambda1;
  BiLaurent lambda_dp;
  LaurentPoly v2;
  std::optional<LaurentPoly> v_dp;
  std::optional<LaurentPoly> v_d1;
};

struct GoldenCorpus {
  std::filesystem::path dir;
  std::vector<GoldenTheorem> theorems;  // index k-1
  const GoldenTheorem& at(int theorem) const;
};

// Reads golden/thmK/ for K = 1..7 (dir may point at golden/ or its parent).
// Every file must be in canonical rendering; bracket forms are checked
// against the full polynomials at n = 1.
GoldenCorpus ingest_golden(const std::filesystem::path& dir);

// ---------------------------------------------------------------- twist box

// The top crossing of the last tangle's twist box and the three diagrams of
// its skein relation. Switching it cancels against the next crossing, so
// the switched diagram is the family member with n - 1.
struct TwistBox {
  Diagram diagram;
  int crossing = -1;
  int sign = 0;
  Diagram along;     // box with one crossing fewer
  Diagram stripped;  // box cut open, curls removed
  int curl_exponent = 0;  // Lambda(across) = a^curl_exponent Lambda(stripped)
  bool oriented_along = false;  // the orientation-respecting smoothing keeps the box
};

TwistBox resolve_twist_box(int theorem, int variant, int n);

struct RecurrenceCheck {
  bool holds = false;
  int type = 0;            // 1: smoothing cuts the box, 2: smoothing keeps it
  int curl_exponent = 0;   // Lambda recurrence only
  int crossing_sign = 0;
};

// Lambda_{2n} = z Lambda_odd + z a^e Lambda_D' - Lambda_{2n-2}, all four
// computed separately. curl_sign = -1 flips the curl convention (the
// identity is then expected to fail).
RecurrenceCheck verify_lambda_recurrence(int theorem, int n, const SkeinConfig& cfg = {}, int curl_sign = 1);
// V_{2n} in terms of V_{2n-2} and the oriented smoothing, by crossing sign.
RecurrenceCheck verify_jones_recurrence(int theorem, int n, int threads = 1);

// ---------------------------------------------------------------- reports

struct VerifyOptions {
  SkeinConfig skein;
  int threads = 1;
  bool recurrences = true;
};

struct NRecord {
  int n = 0;
  std::vector<MontesinosSpec> specs;
  BracketForm lambda_bracket;
  std::optional<BracketForm> expected_bracket;  // n >= 1
  bool bracket_match = true;
  int breadth_a = 0;
  HalfInteger jones_breadth;
  TBracket jones_bracket;
  std::optional<TBracket> expected_jones;
  bool jones_match = true;
  int arc_lower = 0;
  std::vector<int> arc_upper;  // per mutant
  bool arc_certified = false;
  bool distinct = false;
  bool f_equal = false;
  bool v_equal = false;
  std::vector<ObstructionReport> obstructions;
  bool obstruction_ok = false;
  std::optional<RecurrenceCheck> lambda_recurrence;
  std::optional<RecurrenceCheck> jones_recurrence;
  std::optional<bool> golden_match;  // n == 1: Lambda_2 and V_2
  nlohmann::json golden_aux;         // n == 1: the smoothed diagrams
  bool pass() const;
};

struct TheoremReport {
  int theorem = 0;
  std::vector<NRecord> records;
  std::vector<std::string> notes;
  bool pass() const;
};

TheoremReport verify_theorem(int theorem, int n_max, const GoldenCorpus& corpus, const VerifyOptions& opt = {});
nlohmann::json to_json(const TheoremReport& r);
std::string to_text(const TheoremReport& r);

struct Table1Row {
  int theorem = 0;
  int variant = 0;
  std::string name;
  MontesinosSpec spec;
  int printed = 0;  // 11 or 12
  int lower = 0;
  int upper = 0;
  bool pass() const { return lower == upper && upper == printed; }
};

std::vector<Table1Row> table1(const SkeinConfig& cfg = {});
nlohmann::json to_json(const std::vector<Table1Row>& rows);
std::string to_text(const std::vector<Table1Row>& rows);

}  // namespace mutarc
