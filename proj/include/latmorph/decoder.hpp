#ifndef LATMORPH_DECODER_HPP
#define LATMORPH_DECODER_HPP

#include <iosfwd>
#include <vector>

#include "latmorph/lattice.hpp"

namespace latmorph {

// One spotted diphone at a 10 ms frame index. Streams are sorted by
// frame; ties are competing spottings.
struct DiphoneObservation {
  long frame = 0;
  Diphone diphone;

  auto operator<=>(const DiphoneObservation&) const = default;
};

// Maximal run of identical spottings; count is the frequency count used
// for insertion pruning.
struct DiphoneRun {
  Diphone diphone;
  long start_frame = 0;
  long end_frame = 0;
  int count = 0;

  bool overlaps(const DiphoneRun& other) const {
    return start_frame <= other.end_frame && other.start_frame <= end_frame;
  }
};

struct DecoderConfig {
  int min_count = 2;        // frequency-count floor for overlapping competitors
  int gap_frames = 2;       // max silent gap that still joins one run
  bool keep_alternatives = true;  // keep surviving competitors as parallel edges
};

struct DecodeStats {
  int inconsistent_overlaps = 0;  // alternative groups with unequal span lengths
};

// Groups a sorted observation stream into runs, ordered by start frame,
// ties by type (C1V, V, VC2, C2C1) then symbols.
std::vector<DiphoneRun> group_runs(const std::vector<DiphoneObservation>& stream,
                                   const DecoderConfig& cfg);

// Drops overlapping runs below min_count. A region never empties: when
// every competitor is below threshold the highest count survives. With
// keep_alternatives false only the best run of each overlap group stays.
std::vector<DiphoneRun> prune_insertions(const std::vector<DiphoneRun>& runs,
                                         const DecoderConfig& cfg);

// Splits runs into constituent phonemes, merging the shared phoneme of
// structurally overlapping neighbours (C1V+VC2, V+VC2, VC2+C2C1,
// C2C1+C1V) and laying temporally overlapping survivors as parallel
// edges. Span-length disagreements are counted in stats and resolved
// with per-alternative interior nodes.
PhonemeLattice merge_to_lattice(const std::vector<DiphoneRun>& runs,
                                DecodeStats* stats = nullptr);

// group_runs -> prune_insertions -> merge_to_lattice.
PhonemeLattice decode(const std::vector<DiphoneObservation>& stream,
                      const DecoderConfig& cfg, DecodeStats* stats = nullptr);

// Stream file: one observation per line, `<frame> <dtype> <symbol> [<symbol>]`.
std::vector<DiphoneObservation> read_stream(std::istream& in,
                                            const AlphabetConfig& alphabet);
std::vector<DiphoneObservation> read_stream_file(const std::string& path,
                                                 const AlphabetConfig& alphabet);
void write_stream(const std::vector<DiphoneObservation>& stream, std::ostream& out);

}  // namespace latmorph

#endif
