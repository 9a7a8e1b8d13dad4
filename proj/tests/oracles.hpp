// Independent reference implementations used only by the tests.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "ks/lattice.hpp"

namespace oracle {

using ks::Integer;
using ks::QMat;
using ks::Rational;

// Minimum of x^t G x over a box that provably contains every minimal vector.
// The bound |x_i| <= sqrt(m (G^-1)_ii) holds for any m >= the true minimum; the least diagonal entry is one.
struct BoxMinimum {
    Rational min_norm;
    size_t pairs = 0;
};

inline BoxMinimum box_minimum(const QMat& g) {
    const size_t n = g.rows;
    Rational m = g(0, 0);
    for (size_t i = 1; i < n; ++i) m = std::min(m, Rational(g(i, i)));
    QMat inv = ks::inverse(g);
    std::vector<long> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = ks::isqrt_floor(m * inv(i, i)).get_si();
    BoxMinimum best{m, 0};
    std::vector<long> x(n);
    std::map<Rational, size_t> count;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == n) {
            if (std::all_of(x.begin(), x.end(), [](long v) { return v == 0; })) return;
            Rational q = 0;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) q += g(i, j) * x[i] * x[j];
            ++count[q];
            return;
        }
        for (long v = -r[k]; v <= r[k]; ++v) x[k] = v, rec(k + 1);
    };
    rec(0);
    best.min_norm = count.begin()->first;
    best.pairs = count.begin()->second / 2;
    return best;
}

// Clifford product by rewriting words in the tensor algebra: adjacent out-of-order letters are swapped
// using e_a e_b = -e_b e_a + 2 b_ab, and repeated letters collapse to b_aa.
class WordReducer {
  public:
    explicit WordReducer(QMat b) : b_(std::move(b)) {}

    using Word = std::vector<size_t>;
    using Poly = std::map<Word, Rational>;

    Poly reduce(const Word& w) const {
        Poly out;
        std::vector<std::pair<Word, Rational>> stack{{w, Rational(1)}};
        while (!stack.empty()) {
            auto [cur, c] = stack.back();
            stack.pop_back();
            if (sgn(c) == 0) continue;
            size_t k = 0;
            while (k + 1 < cur.size() && cur[k] < cur[k + 1]) ++k;
            if (k + 1 >= cur.size()) {
                out[cur] += c;
                continue;
            }
            size_t a = cur[k], bb = cur[k + 1];
            Word shorter(cur);
            shorter.erase(shorter.begin() + long(k), shorter.begin() + long(k) + 2);
            if (a == bb) {
                stack.push_back({shorter, c * b_(a, a)});
            } else {
                Word swapped(cur);
                std::swap(swapped[k], swapped[k + 1]);
                stack.push_back({swapped, -c});
                stack.push_back({shorter, 2 * c * b_(a, bb)});
            }
        }
        for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    static Word word_of(uint32_t mask, size_t n) {
        Word w;
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) w.push_back(i);
        return w;
    }

  private:
    QMat b_;
};

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261018);
    return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace oracle
