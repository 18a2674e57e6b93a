#pragma once

#include "llsem/proof.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace llsem {

/// A rewrite produced a proof whose conclusion differs from the redex.
class RewriteError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Identifiers of the reduction catalog, in priority order within a cut.
const std::vector<std::string_view>& rule_ids();

struct StepInfo {
    std::string rule;
    Path path;  // position of the rewritten cut
    std::size_t size_before = 0;
    std::size_t size_after = 0;

    friend bool operator==(const StepInfo&, const StepInfo&) = default;
};

struct Trace {
    std::vector<StepInfo> steps;
};

/// Applies the catalog to the cut at `path`. Empty when that node is not a
/// cut or no rule matches it.
std::optional<std::pair<Proof, StepInfo>> rewrite_at(const Proof& p, const Path& path);

/// One step of leftmost-innermost cut elimination. Empty when p is cut-free
/// (or, in principle, when no cut with cut-free premises is reducible).
std::optional<std::pair<Proof, StepInfo>> step(const Proof& p);

inline constexpr std::size_t kDefaultMaxSteps = 100000;

struct NormalizeResult {
    Proof proof;  // the normal form, or the last proof reached
    Trace trace;
    bool exhausted = false;  // budget ran out before the proof became cut-free
};

/// Rewrites until cut-free or until `max_steps` steps were taken; `on_step`
/// sees each step as it happens.
NormalizeResult normalize(const Proof& p, std::size_t max_steps = kDefaultMaxSteps,
                          const std::function<void(const StepInfo&)>& on_step = {});

/// Re-applies every step of `t` to `initial`; throws RewriteError when a
/// step does not match.
Proof replay(const Proof& initial, const Trace& t);

/// Canonical form for structural comparison of normal forms. Each maximal
/// run of ex/der/ctr/weak nodes is re-emitted as: exchanges (nearest the
/// leaves, a fixed bubble order), then derelictions, then contractions of
/// each merged group, then weakenings. Contraction groups are ordered by
/// premise position, which relies on cocommutativity; a dereliction of a
/// contracted or weakened formula, or a contraction involving a weakened
/// one, ends the run.
Proof exchange_normalize(const Proof& p);

/// One JSON object for a step: {"rule": ..., "path": [...], "sizes": [before, after]}.
std::string step_json(const StepInfo& s);

}  // namespace llsem
