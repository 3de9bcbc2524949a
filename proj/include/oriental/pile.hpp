#pragma once

#include <string>
#include <vector>

#include "oriental/block.hpp"
#include "oriental/faces.hpp"

namespace oriental {

/// An (m,n)-pile: levels v_0..v_m, each v_j a set of C(m,j) words of
/// dimension j in ambient n. Levels keep insertion order for display and
/// compare as sets. Piles are persistent values; transitions return new piles.
class Pile {
public:
    Pile(std::size_t n, std::vector<std::vector<CubeWord>> levels); // validates the shape

    std::size_t top() const { return levels_.size() - 1; } // m
    std::size_t ambient() const { return n_; }
    const std::vector<CubeWord>& level(std::size_t j) const { return levels_.at(j); }
    const std::vector<std::vector<CubeWord>>& levels() const { return levels_; }
    std::set<CubeWord> level_set(std::size_t j) const;

    bool contains(const CubeWord& w) const;

    /// Set equality level by level.
    bool same_sets(const Pile& other) const;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<CubeWord>> levels_;
};

/// Psi_n (source) or Omega_n (target): the canonical (n,n)-pile of face lists.
Pile face_pile(Side side, std::size_t n);

/// The pile Psi_n with psi_{n-1} replaced by omega_{n-1}: the start pile of
/// the target cocycle form. Its dual is the end pile of the source form.
Pile source_pile_with_target_top(std::size_t n);
Pile target_pile_with_source_top(std::size_t n);

/// The faces of Psi_p (resp. Omega_p) embedded into ambient n through x:
/// level j = { x * w : w in psi_j[p] }, j = 0..p-1.
struct EmbeddedFaces {
    CubeWord x;
    Side side = Side::Source;
    std::vector<std::vector<CubeWord>> levels;
};

EmbeddedFaces embedded_faces(const CubeWord& x, Side side);

/// Words of the pile missing for pi_x to apply; empty means applicable
/// (x itself is reported when absent from its level).
std::vector<CubeWord> missing_for_pi(const Pile& p, const CubeWord& x);

bool can_apply(const Pile& p, const CubeWord& x);

struct NotApplicable : Error {
    NotApplicable(std::string msg, CubeWord x, std::vector<CubeWord> missing);
    CubeWord x;
    std::vector<CubeWord> missing;
};

struct StarPreconditionFailed : Error {
    StarPreconditionFailed(std::string msg, std::size_t level, std::vector<CubeWord> offending);
    std::size_t level;
    std::vector<CubeWord> offending;
};

struct StepFailed : Error {
    StepFailed(std::size_t index, const std::string& reason);
    std::size_t index;
    std::string reason;
};

/// pi_x: replace the embedded source faces of x by its target faces.
/// Levels >= |x| are unchanged; parallel classes are preserved, and the
/// replacement keeps each class in its display slot.
Pile apply_pi(const Pile& p, const CubeWord& x); // throws NotApplicable

/// The inverse transition: replace the embedded target faces of x by its
/// source faces.
Pile apply_pi_reverse(const Pile& p, const CubeWord& x); // throws NotApplicable

/// *_k: rewrite v_j from omega_j[n] back to psi_j[n] for all j <= k-1
/// (equivalently, apply the antipodal involution levelwise; the readings
/// agree exactly under the checked precondition). *_0 is the identity.
Pile apply_star(const Pile& p, std::size_t k); // throws StarPreconditionFailed

struct TransitionLabel {
    enum class Kind { Pi, Star } kind = Kind::Pi;
    CubeWord word; // for Pi
    std::size_t k = 0; // for Star
    std::string to_string() const;
};

struct Trace {
    struct Step {
        TransitionLabel label;
        Pile state; // after the transition
    };
    Pile initial;
    std::vector<Step> steps;

    std::size_t state_count() const { return steps.size() + 1; }
    const Pile& state(std::size_t i) const { return i == 0 ? initial : steps[i - 1].state; }
    const Pile& final_state() const { return steps.empty() ? initial : steps.back().state; }
};

/// Execute a linear form left to right: each word is pi_x, each *_i the
/// star rewiring. Fails fast with the token index of the first bad step.
Trace run(const LinearForm& form, const Pile& start); // throws StepFailed

struct NestedDiskReport {
    bool ok = false;
    std::string failure; // first violating (step, level)
};

/// Trace monitor: in every state of the trace, each level is a
/// section whose cells form a disk with the same boundary as in the
/// initial state.
NestedDiskReport check_nested_disks(const Trace& t);

} // namespace oriental
