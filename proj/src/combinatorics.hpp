#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace choreobraid {

// A composition of a positive integer n: an ordered tuple of positive parts
// summing to n.  The tuple length is k+1 with k >= 0.
struct Composition {
    std::vector<int> parts;

    int total() const;
    int block_count() const { return static_cast<int>(parts.size()); }
    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;
};

// An element of Omega_N: signs (w_1, ..., w_{N-1}), each +1 or -1.  The
// strand count N is length+1.
struct SignSequence {
    std::vector<int> signs;

    int strand_count() const { return static_cast<int>(signs.size()) + 1; }
    bool all_equal() const;
    bool operator==(const SignSequence&) const = default;
};

SignSequence make_sign_sequence(std::vector<int> signs);

// Parses "+-+" style spellings.
SignSequence parse_sign_sequence(const std::string& text);
std::string format_sign_sequence(const SignSequence& w);

// All compositions of n in lexicographic order of the part tuples.
// There are 2^{n-1} of them.
std::vector<Composition> enumerate_compositions(int n);

// Block bijection Psi_{N-1} -> Omega_N^+: parts become runs of equal signs,
// starting positive and alternating.
SignSequence theta(const Composition& m);

// Inverse of theta; requires the first sign to be +1.
Composition theta_inverse(const SignSequence& w);

SignSequence negate(const SignSequence& w);
SignSequence reverse(const SignSequence& w);

// Equivalence class {w, -w, rev(w), -rev(w)}, deduplicated, canonical
// representative first.  Order +1 < -1 for the lexicographic choice.
std::vector<SignSequence> equivalence_class(const SignSequence& w);
SignSequence canonical_representative(const SignSequence& w);

// Number of classes in Omega_N; equals 2^{N-3} + 2^{floor((N-3)/2)}.
std::uint64_t count_classes(int n_bodies);
std::uint64_t class_count_formula(int n_bodies);

// All class representatives for Omega_N, sorted canonically.
std::vector<SignSequence> class_representatives(int n_bodies);

SignSequence omega_max(int n_bodies);
SignSequence omega_min(int n_bodies);

// Loops of the choreography curve: 1 + #{j : w_j w_{j+1} = -1}.
int loop_count(const SignSequence& w);

// Guard for exhaustive enumerations; 2^{N-1} growth.
inline constexpr int kDefaultBodyCap = 24;

}  // namespace choreobraid
