#include "hla/tuples.hpp"

#include <algorithm>

#include "hla/error.hpp"

namespace hla {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t k) {
    std::vector<Tuple> out;
    if (k > n) return out;
    Tuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        if (k == 0) break;
        // advance to the next combination
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

std::size_t tuple_index(std::size_t n, const Tuple& t) {
    // Count combinations preceding t lexicographically.
    std::size_t idx = 0;
    std::size_t prev = 0;
    const std::size_t k = t.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t v = prev; v < t[i]; ++v) idx += binomial(n - v - 1, k - i - 1);
        prev = t[i] + 1;
    }
    return idx;
}

int sort_with_sign(Tuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && t[j - 1] > t[j]) {
            std::swap(t[j - 1], t[j]);
            sign = -sign;
            --j;
        }
    }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i - 1] == t[i]) return 0;
    return sign;
}

std::vector<Unshuffle> unshuffles(std::size_t a, std::size_t b) {
    const std::size_t total = a + b;
    std::vector<Unshuffle> out;
    for (const Tuple& first : increasing_tuples(total, a)) {
        Unshuffle u;
        u.perm = first;
        std::vector<bool> used(total, false);
        for (std::size_t v : first) used[v] = true;
        for (std::size_t v = 0; v < total; ++v)
            if (!used[v]) u.perm.push_back(v);
        // parity by inversion count
        int sign = 1;
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = i + 1; j < total; ++j)
                if (u.perm[i] > u.perm[j]) sign = -sign;
        u.sign = sign;
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace hla
