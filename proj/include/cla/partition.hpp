#pragma once

#include <algorithm>
#include <vector>

#include "cla/algebra.hpp"

namespace cla {

// Partitions: weakly decreasing sequences of positive integers.
using Partition = std::vector<long>;

inline long weight(const Partition& p) {
    long s = 0;
    for (long x : p) s += x;
    return s;
}

// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.resize(static_cast<std::size_t>(p.front()));
    for (std::size_t j = 0; j < q.size(); ++j) {
        long cnt = 0;
        for (long part : p)
            if (part > static_cast<long>(j)) ++cnt;
        q[j] = cnt;
    }
    return q;
}

namespace detail {
inline void enum_partitions(long n, long maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        enum_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All partitions of n, lexicographically decreasing: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    Partition cur;
    detail::enum_partitions(n, n, cur, out);
    return out;
}

// Y_{-lambda} = Y_{-l1} Y_{-l2} ... ; the Ystar variant analogously.
inline Word word_Y_neg(const Partition& p) {
    Word w;
    for (long x : p) w.push_back(Y(-x));
    return w;
}

inline Word word_Ys_neg(const Partition& p) {
    Word w;
    for (long x : p) w.push_back(Ys(-x));
    return w;
}

}  // namespace cla
