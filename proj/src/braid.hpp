#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combinatorics.hpp"

namespace choreobraid {

// A word in the Artin generators of B_n.  Letters are signed generator
// indices: +i for sigma_i, -i for sigma_i^{-1}, 1 <= i <= n-1.  The empty
// word is the identity braid.
struct BraidWord {
    int strands = 2;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;
};

BraidWord make_braid(int strands, std::vector<int> letters);

// Text syntax: "s1 s2' s3" with a trailing apostrophe for inverses.
BraidWord parse_braid(const std::string& text, int strands);
std::string format_braid(const BraidWord& b);

// A freely reduced word in a rank-n free group; same signed-index letter
// encoding over generators x_1..x_n.
using FreeWord = std::vector<int>;

FreeWord free_reduce(FreeWord w);
FreeWord free_inverse(const FreeWord& w);
FreeWord free_concat(const FreeWord& a, const FreeWord& b);
std::size_t cyclic_length(const FreeWord& w);

struct Permutation {
    std::vector<int> images;  // 1-based: images[i-1] = image of i

    bool is_identity() const;
    bool is_single_cycle() const;
    bool operator==(const Permutation&) const = default;
};

Permutation compose(const Permutation& first, const Permutation& then);

// --- named braids of the construction ---

// alpha_w = sigma_1^{w_1} ... sigma_{N-1}^{w_{N-1}}.
BraidWord alpha(const SignSequence& w);

// Even-index and odd-index parts of alpha_w, stored with ascending
// generator index (the letters commute pairwise within each).
BraidWord e_braid(const SignSequence& w);
BraidWord o_braid(const SignSequence& w);

// beta_m = alpha_{theta(m)} on 1 + sum(m) strands.
BraidWord beta(const Composition& m);

BraidWord rev(const BraidWord& b);
BraidWord mirror(const BraidWord& b);
BraidWord inverse(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord power(const BraidWord& b, int k);

// Garside half twist word of length n(n-1)/2 and its square.
BraidWord half_twist(int strands);
BraidWord full_twist(int strands);

// Underlying permutation of the strand dance, position -> position.
Permutation permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);
bool is_cyclic(const BraidWord& b);

// Images of the free generators x_1..x_n under the automorphism induced by
// the braid: sigma_i sends x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i.
// Total image length is capped; exceeding it throws.
std::vector<FreeWord> artin_action(const BraidWord& b,
                                   std::size_t length_cap = 1u << 22);

// Exact word-problem decision via the faithful Artin action.
bool word_equal(const BraidWord& a, const BraidWord& b);

// Conjugator h with h^{-1} (e_w o_w) h = alpha_w, built by the block
// cascade: the even part first, then the trailing commuting blocks.
BraidWord conjugacy_witness_eo_alpha(const SignSequence& w);

// Conjugator h with h^{-1} rev(alpha_w) h = alpha_w, built from ascending
// tail products.
BraidWord conjugacy_witness_rev_alpha(const SignSequence& w);

struct GrowthEstimate {
    double estimate = 1.0;
    int iterations = 0;
    bool converged = false;
};

struct GrowthOptions {
    int max_iter = 64;
    double tol = 1e-6;
    std::size_t length_cap = 120'000'000;  // total letters across images
};

// Exponential growth rate of cyclically reduced word lengths under
// iteration of the braid's free-group automorphism, Aitken-accelerated and
// aggregated over the generator pair products by maximum.  Converges to the
// stretch factor for pseudo-Anosov braids and to 1 for periodic ones.
GrowthEstimate growth_rate_estimate(const BraidWord& b,
                                    const GrowthOptions& opt = {});

}  // namespace choreobraid
