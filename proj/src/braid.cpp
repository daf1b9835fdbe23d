#include "braid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace choreobraid {

BraidWord make_braid(int strands, std::vector<int> letters) {
    if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
    for (int l : letters) {
        const int i = std::abs(l);
        if (l == 0 || i > strands - 1)
            throw std::invalid_argument("braid letter index out of range");
    }
    return BraidWord{strands, std::move(letters)};
}

BraidWord parse_braid(const std::string& text, int strands) {
    std::vector<int> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool inv = false;
        if (!tok.empty() && tok.back() == '\'') {
            inv = true;
            tok.pop_back();
        }
        if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
            throw std::invalid_argument("bad braid token '" + tok + "'");
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (...) {
            throw std::invalid_argument("bad braid token '" + tok + "'");
        }
        if (idx < 1) throw std::invalid_argument("bad braid token '" + tok + "'");
        letters.push_back(inv ? -idx : idx);
    }
    return make_braid(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
    std::string out;
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out += ' ';
        const int l = b.letters[i];
        out += 's' + std::to_string(std::abs(l));
        if (l < 0) out += '\'';
    }
    return out;
}

FreeWord free_reduce(FreeWord w) {
    FreeWord out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

FreeWord free_inverse(const FreeWord& w) {
    FreeWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
    FreeWord out(a);
    out.reserve(a.size() + b.size());
    for (int x : b) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

std::size_t cyclic_length(const FreeWord& w) {
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i] == -w[j - 1]) {
        ++i;
        --j;
    }
    return j - i;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != static_cast<int>(i) + 1) return false;
    return true;
}

bool Permutation::is_single_cycle() const {
    const int n = static_cast<int>(images.size());
    int pos = 1, steps = 0;
    do {
        pos = images[pos - 1];
        ++steps;
    } while (pos != 1 && steps <= n);
    return steps == n;
}

Permutation compose(const Permutation& first, const Permutation& then) {
    Permutation out;
    out.images.resize(first.images.size());
    for (std::size_t i = 0; i < first.images.size(); ++i)
        out.images[i] = then.images[first.images[i] - 1];
    return out;
}

BraidWord alpha(const SignSequence& w) {
    std::vector<int> letters;
    letters.reserve(w.signs.size());
    for (std::size_t i = 0; i < w.signs.size(); ++i)
        letters.push_back(w.signs[i] * static_cast<int>(i + 1));
    return BraidWord{w.strand_count(), std::move(letters)};
}

BraidWord e_braid(const SignSequence& w) {
    std::vector<int> letters;
    for (std::size_t i = 1; i < w.signs.size(); i += 2)
        letters.push_back(w.signs[i] * static_cast<int>(i + 1));
    return BraidWord{w.strand_count(), std::move(letters)};
}

BraidWord o_braid(const SignSequence& w) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < w.signs.size(); i += 2)
        letters.push_back(w.signs[i] * static_cast<int>(i + 1));
    return BraidWord{w.strand_count(), std::move(letters)};
}

BraidWord beta(const Composition& m) {
    return alpha(theta(m));
}

BraidWord rev(const BraidWord& b) {
    std::vector<int> letters(b.letters.rbegin(), b.letters.rend());
    return BraidWord{b.strands, std::move(letters)};
}

BraidWord mirror(const BraidWord& b) {
    std::vector<int> letters(b.letters);
    for (int& l : letters) l = -l;
    return BraidWord{b.strands, std::move(letters)};
}

BraidWord inverse(const BraidWord& b) {
    std::vector<int> letters;
    letters.reserve(b.letters.size());
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        letters.push_back(-*it);
    return BraidWord{b.strands, std::move(letters)};
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("strand count mismatch in concat");
    std::vector<int> letters(a.letters);
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return BraidWord{a.strands, std::move(letters)};
}

BraidWord power(const BraidWord& b, int k) {
    if (k < 0) throw std::invalid_argument("power needs k >= 0");
    std::vector<int> letters;
    letters.reserve(b.letters.size() * k);
    for (int r = 0; r < k; ++r)
        letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    return BraidWord{b.strands, std::move(letters)};
}

BraidWord half_twist(int strands) {
    if (strands < 2) throw std::invalid_argument("braid needs at least 2 strands");
    std::vector<int> letters;
    letters.reserve(strands * (strands - 1) / 2);
    for (int top = strands - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) letters.push_back(i);
    return BraidWord{strands, std::move(letters)};
}

BraidWord full_twist(int strands) {
    return power(half_twist(strands), 2);
}

Permutation permutation(const BraidWord& b) {
    Permutation p;
    p.images.resize(b.strands);
    for (int start = 1; start <= b.strands; ++start) {
        int pos = start;
        for (int l : b.letters) {
            const int i = std::abs(l);
            if (pos == i)
                pos = i + 1;
            else if (pos == i + 1)
                pos = i;
        }
        p.images[start - 1] = pos;
    }
    return p;
}

bool is_pure(const BraidWord& b) {
    return permutation(b).is_identity();
}

bool is_cyclic(const BraidWord& b) {
    return permutation(b).is_single_cycle();
}

std::vector<FreeWord> artin_action(const BraidWord& b, std::size_t length_cap) {
    const int n = b.strands;
    std::vector<FreeWord> img(n);
    for (int j = 0; j < n; ++j) img[j] = {j + 1};
    for (int l : b.letters) {
        const int i = std::abs(l) - 1;
        if (l > 0) {
            FreeWord xi = free_concat(free_concat(img[i], img[i + 1]), free_inverse(img[i]));
            img[i + 1] = std::move(img[i]);
            img[i] = std::move(xi);
        } else {
            FreeWord xi1 = free_concat(free_concat(free_inverse(img[i + 1]), img[i]), img[i + 1]);
            img[i] = std::move(img[i + 1]);
            img[i + 1] = std::move(xi1);
        }
        std::size_t total = 0;
        for (const auto& w : img) total += w.size();
        if (total > length_cap)
            throw std::runtime_error("artin_action image length cap exceeded");
    }
    return img;
}

bool word_equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands)
        throw std::invalid_argument("strand count mismatch in word_equal");
    return artin_action(a) == artin_action(b);
}

BraidWord conjugacy_witness_eo_alpha(const SignSequence& w) {
    const int n = w.strand_count();
    // Blocks B_s = sigma_{2s-1} sigma_{2s} (exponents from w); the last block
    // is a single letter when N is even.
    auto block = [&](int s) {
        std::vector<int> letters;
        const int a = 2 * s - 1;
        letters.push_back(w.signs[a - 1] * a);
        if (a + 1 <= n - 1) letters.push_back(w.signs[a] * (a + 1));
        return BraidWord{n, std::move(letters)};
    };
    const int r = (n - 1 + 1) / 2;  // number of blocks covering 1..N-1
    BraidWord h = e_braid(w);
    for (int step = 1; step <= r - 1; ++step) {
        for (int s = r - step + 1; s <= r; ++s) h = concat(h, block(s));
    }
    return h;
}

BraidWord conjugacy_witness_rev_alpha(const SignSequence& w) {
    const int n = w.strand_count();
    BraidWord h{n, {}};
    // Tail products T_j = sigma_j ... sigma_{N-1}, applied for j = N-1 down to 2.
    for (int j = n - 1; j >= 2; --j) {
        std::vector<int> tail;
        for (int i = j; i <= n - 1; ++i) tail.push_back(w.signs[i - 1] * i);
        h = concat(h, BraidWord{n, std::move(tail)});
    }
    return h;
}

namespace {

// Compact word type for the growth iteration; generator indices stay small
// and the image lengths run to ~1e8 letters.
using PackedWord = std::vector<std::int8_t>;

// Substitute the letters of the short word through the given images,
// reducing on the fly.
PackedWord substitute(const PackedWord& word, const std::vector<PackedWord>& img,
                      std::size_t reserve_hint) {
    PackedWord out;
    out.reserve(reserve_hint);
    auto push = [&](std::int8_t y) {
        if (!out.empty() && out.back() == -y)
            out.pop_back();
        else
            out.push_back(y);
    };
    for (std::int8_t x : word) {
        const PackedWord& piece = img[std::abs(x) - 1];
        if (x > 0)
            for (std::int8_t y : piece) push(y);
        else
            for (auto it = piece.rbegin(); it != piece.rend(); ++it) push(static_cast<std::int8_t>(-*it));
    }
    return out;
}

std::size_t packed_cyclic_pair_length(const PackedWord& a, const PackedWord& b) {
    PackedWord prod;
    prod.reserve(a.size() + b.size());
    prod = a;
    for (std::int8_t y : b) {
        if (!prod.empty() && prod.back() == -y)
            prod.pop_back();
        else
            prod.push_back(y);
    }
    std::size_t i = 0, j = prod.size();
    while (j - i >= 2 && prod[i] == -prod[j - 1]) {
        ++i;
        --j;
    }
    return std::max<std::size_t>(1, j - i);
}

}  // namespace

GrowthEstimate growth_rate_estimate(const BraidWord& b, const GrowthOptions& opt) {
    if (opt.max_iter < 2) throw std::invalid_argument("growth estimate needs max_iter >= 2");
    if (b.strands > 120)
        throw std::invalid_argument("growth estimate supports up to 120 strands");
    const int n = b.strands;
    std::vector<PackedWord> base(n);
    {
        const std::vector<FreeWord> wide = artin_action(b);
        for (int j = 0; j < n; ++j)
            base[j].assign(wide[j].begin(), wide[j].end());
    }
    std::vector<PackedWord> cur = base;

    // Test classes: products of cyclically adjacent generators.  Images of a
    // single generator are conjugates of a generator, so their cyclic length
    // is constant; the pair products carry the expansion.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back(i, i + 1);
    pairs.emplace_back(n, 1);

    auto measure = [&](const std::vector<PackedWord>& img) {
        std::vector<double> lens;
        lens.reserve(pairs.size());
        for (auto [a, c] : pairs)
            lens.push_back(static_cast<double>(packed_cyclic_pair_length(img[a - 1], img[c - 1])));
        return lens;
    };

    std::deque<std::vector<double>> hist;
    hist.push_back(measure(cur));

    GrowthEstimate result;
    result.estimate = 1.0;
    result.iterations = 1;
    double prev_est = -1.0;
    double last_change = 1.0;
    int stable = 0;
    int k = 1;
    while (k < opt.max_iter) {
        // Predicted next size; free reduction only shrinks it.
        std::size_t next_total = 0;
        for (int j = 0; j < n; ++j)
            for (std::int8_t x : base[j]) next_total += cur[std::abs(x) - 1].size();
        if (next_total > opt.length_cap) break;

        std::vector<PackedWord> nxt(n);
        for (int j = 0; j < n; ++j) {
            std::size_t hint = 0;
            for (std::int8_t x : base[j]) hint += cur[std::abs(x) - 1].size();
            nxt[j] = substitute(base[j], cur, hint);
        }
        cur = std::move(nxt);
        ++k;
        hist.push_back(measure(cur));
        if (hist.size() > 16) hist.pop_front();

        // Bounded cyclic lengths signal a periodic braid type: growth 1.
        if (hist.size() >= 12) {
            double recent = 0, older = 0;
            for (std::size_t h = hist.size() - 6; h < hist.size(); ++h)
                for (double v : hist[h]) recent = std::max(recent, v);
            for (std::size_t h = hist.size() - 12; h < hist.size() - 6; ++h)
                for (double v : hist[h]) older = std::max(older, v);
            if (recent <= older) {
                result.estimate = 1.0;
                result.iterations = k;
                result.converged = true;
                return result;
            }
        }

        if (hist.size() >= 4) {
            const auto& l0 = hist[hist.size() - 4];
            const auto& l1 = hist[hist.size() - 3];
            const auto& l2 = hist[hist.size() - 2];
            const auto& l3 = hist[hist.size() - 1];
            double est = 0;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const double r1 = l1[i] / l0[i];
                const double r2 = l2[i] / l1[i];
                const double r3 = l3[i] / l2[i];
                const double d2 = (r3 - r2) - (r2 - r1);
                double a = r3;
                if (std::abs(d2) > 1e-12) {
                    const double acc = r3 - (r3 - r2) * (r3 - r2) / d2;
                    if (acc >= 0.5 * r3 && acc <= 2.0 * r3) a = acc;
                }
                est = std::max(est, a);
            }
            if (prev_est >= 0) {
                last_change = std::abs(est - prev_est);
                stable = last_change < opt.tol ? stable + 1 : 0;
            }
            result.estimate = est;
            result.iterations = k;
            prev_est = est;
            if (stable >= 3 && k >= 16) {
                result.converged = true;
                return result;
            }
        }
    }
    result.iterations = k;
    result.converged = prev_est >= 0 && last_change < opt.tol;
    return result;
}

}  // namespace choreobraid
