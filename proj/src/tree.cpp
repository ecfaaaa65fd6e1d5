#include "orcas/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orcas {

bool length_supported(int n) {
    if (n < 1) return false;
    while (n % 2 == 0) n /= 2;
    return n == 1 || n == 3 || n == 5 || n == 7 || n == 9;
}

namespace {

CodeTree build_rec(const BitVector& bits, std::size_t begin, std::size_t len) {
    CodeTree node;
    node.n = static_cast<int>(len);
    int k = 0;
    for (std::size_t i = begin; i < begin + len; ++i) k += bits.get(i);
    node.k = k;

    unsigned lb = bit_length(len);
    if (k == 0) {
        node.kind = CodeTree::Kind::Rate0;
        node.d = kInfiniteDistance;
        return node;
    }
    if (k <= static_cast<int>(lb)) {
        node.kind = CodeTree::Kind::NprsLeaf;
        node.nprs = std::make_unique<NprsCode>(nprs_generator(static_cast<int>(len), k));
        node.d = node.nprs->d;
        return node;
    }
    if (k >= static_cast<int>(len) - static_cast<int>(lb)) {
        node.kind = CodeTree::Kind::NprsdLeaf;
        node.nprsd = std::make_unique<NprsdCode>(nprsd_code(static_cast<int>(len), k));
        node.d = node.nprsd->d;
        return node;
    }
    if (len % 2 != 0)
        throw std::invalid_argument("build_tree: mid-rate node of odd length, malformed profile");
    node.kind = CodeTree::Kind::Split;
    node.left = std::make_unique<CodeTree>(build_rec(bits, begin, len / 2));
    node.right = std::make_unique<CodeTree>(build_rec(bits, begin + len / 2, len / 2));
    long long two_dr = node.right->d >= kInfiniteDistance ? kInfiniteDistance : 2 * node.right->d;
    node.d = std::min(node.left->d, two_dr);
    return node;
}

}  // namespace

CodeTree build_tree(const RateProfile& profile) {
    return build_rec(profile.bits, 0, profile.bits.size());
}

namespace {

void encode_rec(const CodeTree& node, const BitVector& message, std::size_t msg_begin,
                BitVector& out, std::size_t out_begin) {
    switch (node.kind) {
        case CodeTree::Kind::Rate0:
            return;  // all-zero
        case CodeTree::Kind::NprsLeaf:
        case CodeTree::Kind::NprsdLeaf: {
            const BitMatrix& gen =
                node.kind == CodeTree::Kind::NprsLeaf ? node.nprs->generator : node.nprsd->generator;
            for (int b = 0; b < node.k; ++b) {
                if (!message.get(msg_begin + static_cast<std::size_t>(b))) continue;
                for (int p = 0; p < node.n; ++p)
                    if (gen.get(static_cast<std::size_t>(b), static_cast<std::size_t>(p)))
                        out.flip(out_begin + static_cast<std::size_t>(p));
            }
            return;
        }
        case CodeTree::Kind::Split: {
            std::size_t half = static_cast<std::size_t>(node.n) / 2;
            encode_rec(*node.left, message, msg_begin, out, out_begin);
            encode_rec(*node.right, message, msg_begin + static_cast<std::size_t>(node.left->k),
                       out, out_begin + half);
            // (u xor v | v): fold the right half into the left.
            for (std::size_t i = 0; i < half; ++i)
                if (out.get(out_begin + half + i)) out.flip(out_begin + i);
            return;
        }
    }
}

}  // namespace

BitVector encode(const CodeTree& tree, const BitVector& message) {
    if (static_cast<int>(message.size()) != tree.k)
        throw std::invalid_argument("encode: message length does not match tree dimension");
    BitVector out(static_cast<std::size_t>(tree.n));
    encode_rec(tree, message, 0, out, 0);
    return out;
}

namespace {

int split_depth(const CodeTree& node) {
    if (node.kind != CodeTree::Kind::Split) return 0;
    return 1 + std::max(split_depth(*node.left), split_depth(*node.right));
}

}  // namespace

OrcasDecoder::OrcasDecoder(const CodeTree& tree, DecodeOptions options)
    : tree_(tree), options_(options) {
    int depth = split_depth(tree);
    llr_arena_.resize(static_cast<std::size_t>(depth));
    int size = tree.n / 2;
    for (auto& buf : llr_arena_) {
        buf.resize(static_cast<std::size_t>(std::max(size, 1)));
        size /= 2;
    }
    cw_buf_.resize(static_cast<std::size_t>(tree.n));
}

void OrcasDecoder::decode_node(const CodeTree& node, const double* llr, std::uint8_t* cw,
                               int depth) {
    switch (node.kind) {
        case CodeTree::Kind::Rate0: {
            std::fill(cw, cw + node.n, 0);
            return;
        }
        case CodeTree::Kind::NprsLeaf: {
            std::size_t msg_at = msg_buf_.size();
            msg_buf_.resize(msg_at + static_cast<std::size_t>(node.k));
            std::uint8_t* msg = msg_buf_.data() + msg_at;
            if (node.k == 1) decode_repetition_raw(llr, node.n, cw, msg);
            else if (node.k == 2 && !options_.fht_for_k2) decode_cw_raw(llr, *node.nprs, leaf_ws_, cw, msg);
            else decode_nprs_fht_raw(llr, *node.nprs, leaf_ws_, cw, msg);
            return;
        }
        case CodeTree::Kind::NprsdLeaf: {
            if (node.k == node.n) decode_rate1_raw(llr, node.n, cw);
            else if (node.k == node.n - 1) decode_spc_raw(llr, node.n, cw);
            else if (node.k == node.n - 2) decode_dual_cw_raw(llr, *node.nprsd, leaf_ws_, cw);
            else decode_nprsd_chase_raw(llr, *node.nprsd, leaf_ws_, cw);
            // Message = codeword at the systematic positions, independent of
            // which specialized decoder produced it.
            for (std::size_t mp : node.nprsd->message_positions) msg_buf_.push_back(cw[mp]);
            return;
        }
        case CodeTree::Kind::Split: {
            int half = node.n / 2;
            double* child = llr_arena_[static_cast<std::size_t>(depth)].data();
            if (options_.exact_boxplus) {
                for (int i = 0; i < half; ++i) child[i] = boxplus_exact(llr[i], llr[half + i]);
            } else {
                for (int i = 0; i < half; ++i) child[i] = boxplus_min(llr[i], llr[half + i]);
            }
            decode_node(*node.left, child, cw, depth + 1);
            for (int i = 0; i < half; ++i)
                child[i] = (1.0 - 2.0 * cw[i]) * llr[i] + llr[half + i];
            decode_node(*node.right, child, cw + half, depth + 1);
            for (int i = 0; i < half; ++i) cw[i] ^= cw[half + i];
            return;
        }
    }
}

ScResult OrcasDecoder::decode(std::span<const double> llr) {
    if (static_cast<int>(llr.size()) != tree_.n)
        throw std::invalid_argument("sc_decode: LLR length does not match tree length");
    msg_buf_.clear();
    decode_node(tree_, llr.data(), cw_buf_.data(), 0);
    ScResult res;
    res.codeword = BitVector(static_cast<std::size_t>(tree_.n));
    for (int p = 0; p < tree_.n; ++p)
        if (cw_buf_[static_cast<std::size_t>(p)]) res.codeword.set(static_cast<std::size_t>(p), true);
    res.message = BitVector(msg_buf_.size());
    for (std::size_t i = 0; i < msg_buf_.size(); ++i) res.message.set(i, msg_buf_[i]);
    return res;
}

ScResult sc_decode(const CodeTree& tree, std::span<const double> llr, DecodeOptions options) {
    OrcasDecoder dec(tree, options);
    return dec.decode(llr);
}

namespace {

void collect_leaves(const CodeTree& node, std::vector<const CodeTree*>& out) {
    if (node.kind == CodeTree::Kind::Split) {
        collect_leaves(*node.left, out);
        collect_leaves(*node.right, out);
    } else {
        out.push_back(&node);
    }
}

void render(const CodeTree& node, int indent, std::ostringstream& os) {
    os << std::string(static_cast<std::size_t>(indent) * 2, ' ');
    os << '(' << node.n << ',' << node.k << ',';
    if (node.d >= kInfiniteDistance) os << '-'; else os << node.d;
    os << ')';
    if (node.kind == CodeTree::Kind::Split) {
        os << '\n';
        render(*node.left, indent + 1, os);
        render(*node.right, indent + 1, os);
    } else {
        os << ' ' << leaf_decoder_name(node) << '\n';
    }
}

}  // namespace

std::vector<const CodeTree*> tree_leaves(const CodeTree& tree) {
    std::vector<const CodeTree*> out;
    collect_leaves(tree, out);
    return out;
}

std::string leaf_decoder_name(const CodeTree& leaf) {
    switch (leaf.kind) {
        case CodeTree::Kind::Rate0:
            return "rate-0";
        case CodeTree::Kind::NprsLeaf:
            if (leaf.k == 1) return "repetition";
            if (leaf.k == 2) return "CW";
            return "FHT";
        case CodeTree::Kind::NprsdLeaf:
            if (leaf.k == leaf.n) return "rate-1";
            if (leaf.k == leaf.n - 1) return "SPC";
            if (leaf.k == leaf.n - 2) return "CW dual";
            return "Chase-II";
        case CodeTree::Kind::Split:
            break;
    }
    return "split";
}

std::string tree_to_string(const CodeTree& tree) {
    std::ostringstream os;
    render(tree, 0, os);
    return os.str();
}

}  // namespace orcas
