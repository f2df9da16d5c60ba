#pragma once

#include <optional>

#include "polar/list_decoder.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

// Smallest 1-based index where the trace disagrees with the true input word
// (necessarily an unfrozen position when true_u honors the frozen set).
std::optional<int> genie_first_error(const ScTrace& trace, const BitVector& true_u);

// Genie-aided SC with up to k corrections: run SC, flip the first erroneous
// decision, redecode incrementally from there, repeat. visits accumulates the
// root pass plus every incremental redecode.
DecodeOutcome genie_sc_decode(std::span<const double> channel_llrs, const CodeConfig& cfg,
                              const BitVector& true_u, int k);

}  // namespace polar
