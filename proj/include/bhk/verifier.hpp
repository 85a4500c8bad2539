#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bhk/complex.hpp"
#include "bhk/hodge.hpp"
#include "bhk/model.hpp"
#include "bhk/unified.hpp"

namespace bhk {

using Json = nlohmann::ordered_json;

enum class Engine { Complex, Orbifold, Both };

Engine parse_engine(const std::string& name);
std::string to_string(Engine e);

struct RunOptions {
  long window_margin = 1;
  std::optional<long> degree_bound;
  Engine engine = Engine::Both;
  unsigned threads = 1;
};

struct BhInput {
  IntMatrix matrix;
  std::optional<std::vector<RatVector>> generators;  ///< absent: trivial group
  std::optional<RatVector> f;
  std::optional<RatVector> g;
};

struct UnifiedInput {
  std::size_t rank = 0;
  std::vector<RatVector> delta, delta_dual;
  RatVector deg, deg_dual;
  std::optional<RatVector> f, g;
};

struct InputSpec {
  std::string mode;  ///< "bh" or "unified"
  std::optional<BhInput> bh;
  std::optional<UnifiedInput> unified;
  RunOptions options;  ///< from the optional "options" object
};

/// Parses a JSON document. Rationals are integers or strings "p", "p/q";
/// JSON floats are rejected. Throws InputError naming the line or field.
InputSpec parse_input(const std::string& text);
InputSpec load_input(const std::string& path);

/// Potential and group of a bh-mode input; a missing group becomes the
/// trivial group and a notice is appended.
BhDatum make_datum(const InputSpec& spec, std::vector<std::string>* notices = nullptr);
ToricMirrorData make_unified(const InputSpec& spec);

Json table_json(const HodgeTable& t);

Json run_analyze(const InputSpec& spec);

/// One Hodge table. With Engine::Both both engines run and the output
/// carries an "engines agree" verdict.
Json run_rings(const InputSpec& spec, RingSide side, const RunOptions& options);

/// The mirror datum (W^v, G^v) as a bh-mode input document.
Json run_dual(const InputSpec& spec);

/// Verdicts (i)-(v) on a datum and its mirror.
Json run_verify(const InputSpec& spec, const RunOptions& options);

Json run_check_unified(const InputSpec& spec, const RunOptions& options);

/// Witness degree bound used by verify when none is given: the larger of 3 c and
/// c plus the largest ray degree of either side, which always reaches past
/// the socle for nondegenerate W.
Rat default_witness_bound(const BhDatum& datum);
inline constexpr long kDefaultUnifiedBound = 10;

/// 0 when every verdict in the report passed (SKIPPED counts as passed), 1 otherwise.
int verdict_exit_code(const Json& report);

/// Human-readable rendering of any report produced above.
std::string render_text(const Json& report);

}  // namespace bhk
