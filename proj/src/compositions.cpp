#include "pebbling/compositions.hpp"

#include <limits>

#include "pebbling/errors.hpp"

namespace pebbling {

namespace {

constexpr unsigned long long kCap = std::numeric_limits<unsigned long long>::max();

unsigned long long mul_capped(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a == kCap || b == kCap) return kCap;
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    return p > kCap ? kCap : static_cast<unsigned long long>(p);
}

// Compositions of k into m parts with exactly q positive parts (m fixed
// support patterns are NOT chosen here; this is the suffix-count helper, so
// it does include the C(m, q) support choice).
unsigned long long count_exact_support(long long m, long long k, long long q) {
    if (q < 0 || q > m) return 0;
    if (k == 0) return q == 0 ? 1 : 0;
    if (q == 0) return 0;          // k > 0 needs at least one positive part
    if (q > k) return 0;
    return mul_capped(binomial_capped(m, q), binomial_capped(k - 1, q - 1));
}

} // namespace

unsigned long long binomial_capped(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;   // exact: divides a product of i consecutive ints
        if (result > kCap) return kCap;
    }
    return static_cast<unsigned long long>(result);
}

unsigned long long count_compositions(int parts, long long total, std::optional<int> support) {
    if (parts < 1) throw InvalidParameter("count_compositions: parts must be >= 1");
    if (total < 0) throw InvalidParameter("count_compositions: total must be >= 0");
    if (!support)
        return binomial_capped(static_cast<unsigned long long>(total) + parts - 1, parts - 1);
    return count_exact_support(parts, total, *support);
}

void unrank_composition(int parts, long long total, std::optional<int> support,
                        unsigned long long rank, std::vector<int>& out) {
    const unsigned long long n = count_compositions(parts, total, support);
    if (n == kCap) throw InvalidParameter("unrank_composition: space too large");
    if (rank >= n) throw InvalidParameter("unrank_composition: rank out of range");

    out.assign(static_cast<std::size_t>(parts), 0);
    long long k = total;
    long long q = support.value_or(-1);
    for (int i = 0; i + 1 < parts; ++i) {
        const long long m = parts - 1 - i;   // parts after position i
        for (long long a = 0;; ++a) {
            unsigned long long block;
            if (!support) {
                block = binomial_capped(static_cast<unsigned long long>(k - a) + m - 1, m - 1);
            } else if (a == 0) {
                block = count_exact_support(m, k, q);
            } else {
                block = count_exact_support(m, k - a, q - 1);
            }
            if (rank < block) {
                out[i] = static_cast<int>(a);
                k -= a;
                if (support && a > 0) --q;
                break;
            }
            rank -= block;
            if (a >= k) throw InvalidParameter("unrank_composition: internal walk overran");
        }
    }
    out[parts - 1] = static_cast<int>(k);
}

namespace {

// Ascending lex successor over weak compositions; false at the end.
bool next_plain(std::vector<int>& c) {
    const int m = static_cast<int>(c.size());
    long long suffix = 0;   // sum of entries strictly after position j
    for (int j = m - 2; j >= 0; --j) {
        suffix += c[j + 1];
        if (suffix > 0) {
            c[j] += 1;
            for (int i = j + 1; i < m; ++i) c[i] = 0;
            c[m - 1] = static_cast<int>(suffix - 1);
            return true;
        }
    }
    return false;
}

// Same, restricted to exactly q positive parts.
bool next_exact_support(std::vector<int>& c, int q) {
    const int m = static_cast<int>(c.size());
    int positives = 0;
    for (int v : c) positives += v > 0;

    long long after = 0;    // sum strictly after j
    int pos_at_or_after = 0;
    for (int j = m - 1; j >= 0; --j) {
        after += j + 1 < m ? c[j + 1] : 0;
        pos_at_or_after += c[j] > 0;
        if (j == m - 1) continue;    // last position can never be incremented

        const long long avail = after + c[j];              // mass at or after j
        const int q_pre = positives - pos_at_or_after;     // positives before j
        const int qq = q - q_pre - 1;                      // positives needed after j
        const int m_after = m - 1 - j;

        long long a = -1;
        if (qq >= 1) {
            if (m_after >= qq && c[j] + 1 <= avail - qq) a = c[j] + 1;
        } else if (qq == 0) {
            if (avail >= c[j] + 1) a = avail;
        }
        if (a < 0) continue;

        c[j] = static_cast<int>(a);
        long long rest = avail - a;
        // minimal suffix: zeros, then qq-1 ones, then the remainder
        for (int i = j + 1; i < m; ++i) c[i] = 0;
        if (qq > 0) {
            for (int i = 0; i < qq - 1; ++i) c[m - 1 - qq + 1 + i] = 1;
            c[m - 1] = static_cast<int>(rest - (qq - 1));
        }
        return true;
    }
    return false;
}

} // namespace

ConfigCursor::ConfigCursor(int parts, long long total, std::optional<int> support)
    : ConfigCursor(parts, total, support, 0, count_compositions(parts, total, support)) {}

ConfigCursor::ConfigCursor(int parts, long long total, std::optional<int> support,
                           unsigned long long begin_rank, unsigned long long end_rank)
    : parts_(parts), total_(total), support_(support), begin_(begin_rank) {
    if (parts < 1) throw InvalidParameter("ConfigCursor: parts must be >= 1");
    if (total < 0) throw InvalidParameter("ConfigCursor: total must be >= 0");
    if (support && (*support < 1 || *support > parts ||
                    static_cast<long long>(*support) > total))
        throw InvalidParameter("ConfigCursor: support must satisfy 1 <= q <= min(parts, total)");
    const unsigned long long n = count_compositions(parts, total, support);
    if (begin_rank > end_rank || end_rank > n)
        throw InvalidParameter("ConfigCursor: rank window out of range");
    size_ = end_rank - begin_rank;
}

bool ConfigCursor::next(std::vector<int>& out) {
    if (produced_ >= size_) return false;
    if (produced_ == 0) {
        unrank_composition(parts_, total_, support_, begin_, current_);
    } else {
        bool ok = support_ ? next_exact_support(current_, *support_) : next_plain(current_);
        if (!ok) return false;   // unreachable while produced_ < size_
    }
    ++produced_;
    out = current_;
    return true;
}

} // namespace pebbling
