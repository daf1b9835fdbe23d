#include "combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace choreobraid {

int Composition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool SignSequence::all_equal() const {
    return std::all_of(signs.begin(), signs.end(),
                       [&](int s) { return s == signs.front(); });
}

SignSequence make_sign_sequence(std::vector<int> signs) {
    if (signs.size() < 2)
        throw std::invalid_argument("sign sequence needs at least 2 entries (N >= 3)");
    for (int s : signs)
        if (s != 1 && s != -1)
            throw std::invalid_argument("sign sequence entries must be +1 or -1");
    return SignSequence{std::move(signs)};
}

SignSequence parse_sign_sequence(const std::string& text) {
    std::vector<int> signs;
    for (char c : text) {
        if (c == '+')
            signs.push_back(1);
        else if (c == '-')
            signs.push_back(-1);
        else if (c != ' ' && c != ',')
            throw std::invalid_argument(std::string("bad sign character '") + c + "'");
    }
    return make_sign_sequence(std::move(signs));
}

std::string format_sign_sequence(const SignSequence& w) {
    std::string out;
    for (int s : w.signs) out.push_back(s > 0 ? '+' : '-');
    return out;
}

std::vector<Composition> enumerate_compositions(int n) {
    if (n < 1) throw std::invalid_argument("compositions need n >= 1");
    if (n > kDefaultBodyCap)
        throw std::invalid_argument("composition enumeration capped at n = 24");
    std::vector<Composition> out;
    out.reserve(std::size_t{1} << (n - 1));
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem) -> void {
        if (rem == 0) {
            out.push_back(Composition{cur});
            return;
        }
        for (int p = 1; p <= rem; ++p) {
            cur.push_back(p);
            self(self, rem - p);
            cur.pop_back();
        }
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

SignSequence theta(const Composition& m) {
    if (m.parts.empty()) throw std::invalid_argument("empty composition");
    std::vector<int> signs;
    signs.reserve(m.total());
    int s = 1;
    for (int p : m.parts) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        signs.insert(signs.end(), p, s);
        s = -s;
    }
    return make_sign_sequence(std::move(signs));
}

Composition theta_inverse(const SignSequence& w) {
    if (w.signs.front() != 1)
        throw std::invalid_argument("theta_inverse needs first sign +1 (Omega_N^+)");
    std::vector<int> parts;
    int run = 1;
    for (std::size_t i = 1; i < w.signs.size(); ++i) {
        if (w.signs[i] == w.signs[i - 1]) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    parts.push_back(run);
    return Composition{std::move(parts)};
}

SignSequence negate(const SignSequence& w) {
    std::vector<int> signs(w.signs);
    for (int& s : signs) s = -s;
    return SignSequence{std::move(signs)};
}

SignSequence reverse(const SignSequence& w) {
    std::vector<int> signs(w.signs.rbegin(), w.signs.rend());
    return SignSequence{std::move(signs)};
}

namespace {

// +1 sorts before -1.
bool lex_less(const SignSequence& a, const SignSequence& b) {
    for (std::size_t i = 0; i < a.signs.size(); ++i) {
        if (a.signs[i] != b.signs[i]) return a.signs[i] > b.signs[i];
    }
    return false;
}

}  // namespace

std::vector<SignSequence> equivalence_class(const SignSequence& w) {
    std::vector<SignSequence> members{w, negate(w), reverse(w), negate(reverse(w))};
    std::sort(members.begin(), members.end(), lex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

SignSequence canonical_representative(const SignSequence& w) {
    return equivalence_class(w).front();
}

std::uint64_t class_count_formula(int n_bodies) {
    if (n_bodies < 3) throw std::invalid_argument("need N >= 3");
    return (std::uint64_t{1} << (n_bodies - 3)) +
           (std::uint64_t{1} << ((n_bodies - 3) / 2));
}

std::vector<SignSequence> class_representatives(int n_bodies) {
    if (n_bodies < 3 || n_bodies > kDefaultBodyCap)
        throw std::invalid_argument("class enumeration needs 3 <= N <= 24");
    const int len = n_bodies - 1;
    std::set<std::vector<int>> reps;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        std::vector<int> signs(len);
        for (int i = 0; i < len; ++i)
            signs[i] = (bits >> i) & 1 ? -1 : 1;
        reps.insert(canonical_representative(SignSequence{std::move(signs)}).signs);
    }
    std::vector<SignSequence> out;
    out.reserve(reps.size());
    for (const auto& r : reps) out.push_back(SignSequence{r});
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::uint64_t count_classes(int n_bodies) {
    return class_representatives(n_bodies).size();
}

SignSequence omega_max(int n_bodies) {
    if (n_bodies < 3) throw std::invalid_argument("need N >= 3");
    std::vector<int> signs(n_bodies - 1);
    for (int i = 0; i < n_bodies - 1; ++i) signs[i] = (i % 2 == 0) ? 1 : -1;
    return SignSequence{std::move(signs)};
}

SignSequence omega_min(int n_bodies) {
    if (n_bodies < 3) throw std::invalid_argument("need N >= 3");
    std::vector<int> signs(n_bodies - 1);
    const int half = n_bodies / 2;
    for (int i = 0; i < n_bodies - 1; ++i) signs[i] = (i < half) ? 1 : -1;
    return SignSequence{std::move(signs)};
}

int loop_count(const SignSequence& w) {
    int flips = 0;
    for (std::size_t j = 0; j + 1 < w.signs.size(); ++j)
        if (w.signs[j] != w.signs[j + 1]) ++flips;
    return 1 + flips;
}

}  // namespace choreobraid
