#pragma once

#include <string>

#include "oriental/block.hpp"
#include "oriental/pile.hpp"

namespace oriental {

/// The cube cocycle blocks sigma_k[n] and tau_k[n], built by triple
/// induction (on n, then k, then block level) over a write-once memo
/// table. k >= n yields the 0-block [0...0]; k = 0 the 0-source/-target.
const Block& sigma_block(std::size_t k, std::size_t n);
const Block& tau_block(std::size_t k, std::size_t n);

/// sigma_k / tau_k on arbitrary distinguished blocks: restriction for
/// levels above k, juxtaposition at level k, and distinguished stretching
/// below. Words embed their own k-source/-target through the * pairing.
/// Results are returned at level exactly k.
Block sigma_of(std::size_t k, const Block& b); // throws NotDistinguished
Block tau_of(std::size_t k, const Block& b);

/// Block transformers into ambient n+1. lambda/nu keep the level, mu
/// raises it by one; level-0 versions act leafwise by symbol append.
Block lambda_block(std::size_t k, const Block& b);
Block nu_block(std::size_t k, const Block& b);
Block mu_block(std::size_t k, const Block& b);

/// End pile of the source form: Omega_n with psi_{n-1} in place of
/// omega_{n-1}. Start pile of the target form: Psi_n with omega_{n-1}.
Pile sigma_end_pile(std::size_t n);
Pile tau_start_pile(std::size_t n);

/// The (n-1)-cocycle condition: the formal equality of the two forms.
struct CocycleCondition {
    std::size_t n = 0;
    LinearForm source_form;
    LinearForm target_form;
};

CocycleCondition cocycle(std::size_t n); // n >= 1

/// Executes both sides from their start piles and checks the final piles.
struct ExecutionReport {
    bool ok = false;
    std::string failure;
};

ExecutionReport verify_execution(std::size_t n);

Trace run_source(std::size_t n); // run(sigma_{n-1}[n], Psi_n)
Trace run_target(std::size_t n);

/// Structural coherence checks on sigma_{n-1}[n]:
/// (i) full j-sub-blocks restrict to the cube's i-sources and i-targets,
/// (ii) adjacent j-blocks glue, target-to-source, along a j-disk: the
///     j-cells of tau_j(left) and sigma_j(right) coincide and form a disk
///     (their lower stretching words legitimately differ across a *_j,
///     which rewrites the levels below j; full form equality is reported
///     separately in gluing_strict),
/// (iii) the executed trace is a nest of disks with fixed boundaries.
struct Prop62Report {
    bool ok = false;
    std::string failure;
    std::size_t restriction_checks = 0; // clause (i) instances
    std::size_t gluing_checks = 0;      // clause (ii) instances
    std::size_t gluing_strict = 0;      // of which equal token for token
};

Prop62Report verify_prop_6_2(std::size_t n); // n >= 2

} // namespace oriental
