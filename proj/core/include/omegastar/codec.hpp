// Canonical JSON text encodings of every value type, and DOT export.
//
//   EpSet        {"prefix":[0,1],"period":2,"pattern":[1,0]}  or "evens",
//                "odds", "all", "empty", "mod k r"
//   Permutation  {"threshold":t,"exceptions":{"n":m},"period":L,"offsets":[..]}
//                for residue shifts, otherwise
//                {"exceptions":{..},"pieces":[[dom_start,dom_step,img_start,img_step],..]};
//                or "identity", "successor", "predecessor", "shift k"
//   Partition    [EpSet, ...]  or "mod k"
//   Digraph      {"n":k,"edges":[[i,j],..]}
//   Realization  {"h":perm,"f":perm,"walk":{"prelude":[..],"cycle":[..],
//                 "level_marks":[[start,level],..]}}
//   Flip         {"h":perm,"f":perm}
//   Chain        [{"partition":..,"digraph":..},..]
//
// Encoders are deterministic and their output decodes to an equal value.

#ifndef OMEGASTAR_CODEC_HPP
#define OMEGASTAR_CODEC_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "omegastar/digraph.hpp"
#include "omegastar/ep_set.hpp"
#include "omegastar/hitting.hpp"
#include "omegastar/interval_flip.hpp"
#include "omegastar/partition.hpp"
#include "omegastar/permutation.hpp"
#include "omegastar/realize.hpp"

namespace omegastar::codec {

/// Malformed text. Semantic errors (e.g. overlapping classes) surface as
/// the domain exceptions of the respective constructors instead.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string encode(const EpSet& a);
std::string encode(const Permutation& p);
std::string encode(const ClopenPartition& v);
std::string encode(const HitDigraph& g);
std::string encode(const Realization& r);
std::string encode(const IntervalFlip& r);
std::string encode(const RefinementChain& chain);

EpSet decode_ep_set(std::string_view text);
Permutation decode_permutation(std::string_view text);
ClopenPartition decode_partition(std::string_view text);
HitDigraph decode_digraph(std::string_view text);
Realization decode_realization(std::string_view text);
IntervalFlip decode_interval_flip(std::string_view text);
RefinementChain decode_chain(std::string_view text);

/// Graphviz digraph; vertices are labelled with their class when v is given.
std::string to_dot(const HitDigraph& g, const ClopenPartition* v = nullptr);

}  // namespace omegastar::codec

#endif  // OMEGASTAR_CODEC_HPP
