#pragma once

#include <memory>
#include <string>
#include <vector>

#include "orcas/bitmath.hpp"
#include "orcas/leaf_decoders.hpp"
#include "orcas/nprs.hpp"
#include "orcas/nprsd.hpp"

namespace orcas {

// Marks the information positions of a length-n code; the only persisted
// description of an ORCAS code.
struct RateProfile {
    BitVector bits;

    int n() const { return static_cast<int>(bits.size()); }
    int k() const { return static_cast<int>(bits.weight()); }
};

// Lengths reachable by the construction: odd part in {1,3,5,7,9}.
bool length_supported(int n);

// Distance value used for rate-0 subtrees in the Plotkin law min(d1, 2 d2).
inline constexpr long long kInfiniteDistance = 1LL << 60;

struct CodeTree {
    enum class Kind { Rate0, NprsLeaf, NprsdLeaf, Split };

    Kind kind = Kind::Rate0;
    int n = 0;
    int k = 0;
    long long d = kInfiniteDistance;
    std::unique_ptr<CodeTree> left, right;
    std::unique_ptr<NprsCode> nprs;
    std::unique_ptr<NprsdCode> nprsd;
};

// Deterministic classification: k = 0 -> Rate0; k <= bit_length(n) -> NPRS
// leaf; k >= n - bit_length(n) -> NPRSD leaf; otherwise split in half.
CodeTree build_tree(const RateProfile& profile);

// Recursive Plotkin encoding (u xor v | v); message bits in in-order
// traversal, left subtree first.
BitVector encode(const CodeTree& tree, const BitVector& message);

struct ScResult {
    BitVector message;
    BitVector codeword;
};

struct DecodeOptions {
    bool exact_boxplus = false;  // exact [+] instead of the min approximation at split nodes
    bool fht_for_k2 = false;     // cross-check path: FHT instead of CW at k = 2
};

// Successive cancellation decoder with reusable per-depth scratch buffers.
class OrcasDecoder {
public:
    explicit OrcasDecoder(const CodeTree& tree, DecodeOptions options = {});
    ScResult decode(std::span<const double> llr);

private:
    void decode_node(const CodeTree& node, const double* llr, std::uint8_t* cw, int depth);

    const CodeTree& tree_;
    DecodeOptions options_;
    std::vector<std::vector<double>> llr_arena_;   // one buffer per split depth
    std::vector<std::uint8_t> cw_buf_;
    std::vector<std::uint8_t> msg_buf_;
    LeafWorkspace leaf_ws_;
};

ScResult sc_decode(const CodeTree& tree, std::span<const double> llr, DecodeOptions options = {});

// In-order leaf list (left to right over the codeword).
std::vector<const CodeTree*> tree_leaves(const CodeTree& tree);

// Human-readable classification of a leaf's decoder.
std::string leaf_decoder_name(const CodeTree& leaf);

// Indented (n,k,d) rendering of the whole tree.
std::string tree_to_string(const CodeTree& tree);

}  // namespace orcas
