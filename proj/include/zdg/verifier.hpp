#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zdg/analysis.hpp"
#include "zdg/semigroup.hpp"

namespace zdg {

/// Resource caps threaded through analysis entry points.
struct Caps {
  std::size_t order = kDefaultOrderCap;
  std::size_t clique = kDefaultCliqueCap;
  std::size_t iso = kDefaultIsoCap;
};

struct SemigroupSummary {
  std::string description;
  std::size_t order = 0;
  std::string zero_label;
};

struct CliqueInfo {
  std::size_t size = 0;
  std::vector<std::string> members;  // labels, ascending vertex order
};

/// One isomorphism probe of the reduced graph against G(P(n)). When the
/// vertex counts differ no search is run; the mismatch itself certifies
/// non-isomorphism.
struct IsoProbe {
  int n = 0;
  std::size_t power_set_vertex_count = 0;  // 2^n - 2
  bool vertex_count_matches = false;
  bool isomorphic = false;
};

struct NonUniqueWitness {
  std::string a, b, c;               // labels: a ⊥ b, a ⊥ c, N(b) != N(c)
  std::vector<std::string> nb_b, nb_c;  // the two neighborhoods, by label
};

/// Full invariant bundle for one semigroup. Every field re-derives from the
/// semigroup via the other modules; the report stores nothing it cannot
/// re-verify.
struct AnalysisReport {
  SemigroupSummary semigroup;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool complemented = true;
  std::optional<std::string> uncomplemented_witness;  // label
  bool uniquely_complemented = true;
  std::optional<NonUniqueWitness> nonunique_witness;
  std::optional<CliqueInfo> clique;  // absent iff the graph is empty
  std::size_t reduced_class_count = 0;
  std::vector<std::vector<std::string>> reduced_classes;  // member labels
  /// n with G_r ≅ G(P(n)) among the probes, if any.
  std::optional<int> reduced_iso_power_set_n;
  /// Probes run: n = clique number plus every n <= 12 whose 2^n − 2 matches
  /// the reduced vertex count, ascending.
  std::vector<IsoProbe> iso_probes;
};

AnalysisReport analyze(const Semigroup& s, const Caps& caps = {});

enum class Conjecture { ReducedIsoPowerSet, UniquelyComplemented };
enum class ConjectureStatus { Holds, Refuted, NotApplicable };

struct Conjecture1Facts {
  bool complemented = false;
  std::size_t clique_number = 0;
  std::size_t reduced_count = 0;
  std::vector<IsoProbe> probes;
};

struct Conjecture2Facts {
  bool complemented = false;
  std::size_t clique_number = 0;
  NonUniqueWitness triple;
};

/// Certified counter-example record. Replaying the facts against a freshly
/// built graph of the same semigroup must succeed.
struct ConjectureWitness {
  Conjecture conjecture;
  SemigroupSummary semigroup;
  std::variant<Conjecture1Facts, Conjecture2Facts> facts;
};

struct ConjectureOutcome {
  ConjectureStatus status = ConjectureStatus::NotApplicable;
  std::optional<ConjectureWitness> witness;  // present iff Refuted
  std::string detail;                        // one line, human-readable
};

/// Hypothesis for both conjectures: complemented graph with clique number
/// >= 3; NotApplicable when unmet. Conjecture 1 holds iff the reduced graph
/// is isomorphic to G(P(ω)); the probes additionally record whether any n
/// matches by vertex count.
ConjectureOutcome check_conjecture_1(const AnalysisReport& report);

/// Conjecture 2 holds iff the graph is uniquely complemented.
ConjectureOutcome check_conjecture_2(const AnalysisReport& report);

/// Re-derives every fact in the witness from s. Returns false as soon as any
/// fact fails to replay.
bool replay_witness(const ConjectureWitness& w, const Semigroup& s, const Caps& caps = {});

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string evidence;
};

/// Runs the ten named checks for the P(3) × Z_4 construction in argument
/// order and returns all evidence. Failures are data, not exceptions; output
/// is a pure function of the inputs (byte-identical across runs).
std::vector<CheckResult> verify_paper(const Caps& caps = {});

/// Same checks against a substituted semigroup (testing hook; the no-argument
/// form passes the internally built product).
std::vector<CheckResult> verify_paper(const Semigroup& s, const Caps& caps = {});

bool all_passed(const std::vector<CheckResult>& checks);

/// One generator atom of a search family: a powerset/zn parameter range or a
/// fixed semigroup loaded from a file.
struct FamilyAtom {
  enum class Kind { PowerSet, Zn, File };
  Kind kind = Kind::PowerSet;
  int lo = 0, hi = 0;        // inclusive range for PowerSet/Zn
  std::string path;          // File
  std::optional<Semigroup> fixed;  // parsed File semigroup
};

/// `powerset:2..3 x zn:2..5` — one atom, or two atoms joined by `x`.
/// Members enumerate lexicographically (left atom outer).
struct FamilySpec {
  std::vector<FamilyAtom> atoms;  // size 1 or 2
  std::string text;               // original spec, for reporting
};

/// Throws ParseError on malformed specs or out-of-range parameters.
FamilySpec parse_family(const std::string& text);

struct SearchHit {
  std::size_t member_index = 0;
  std::string member;  // e.g. "powerset:3 x zn:4"
  ConjectureWitness witness;
};

struct SearchSkip {
  std::size_t member_index = 0;
  std::string member;
  std::string reason;
};

struct SearchResult {
  std::vector<SearchHit> hits;      // ordered by (member index, conjecture)
  std::vector<SearchSkip> skipped;  // members over caps; logged, not fatal
  std::size_t analyzed = 0;
};

/// Analyzes up to `budget` family members in enumeration order and collects
/// every counter-example witness. Witnesses are replayed before being
/// returned.
SearchResult search(const FamilySpec& family, std::size_t budget, const Caps& caps = {});

}  // namespace zdg
