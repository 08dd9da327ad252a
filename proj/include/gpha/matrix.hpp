#pragma once

#include <string>
#include <vector>

#include "gpha/cyclotomic.hpp"
#include "gpha/errors.hpp"

namespace gpha {

/// Square matrix over the k-th roots of unity in logarithmic form:
/// entry e stands for zeta_k^e.
struct ExpMatrix {
    long long n = 0;
    int k = 2;
    std::vector<int> entries; // n * n, row major, each in [0, k)

    ExpMatrix() = default;

    ExpMatrix(long long order, int modulus)
        : n(order), k(modulus), entries(static_cast<std::size_t>(order) * order, 0) {
        if (order < 1 || modulus < 1) throw std::invalid_argument("bad matrix dimensions");
    }

    int at(long long r, long long c) const {
        return entries[static_cast<std::size_t>(r) * n + c];
    }

    int& at(long long r, long long c) {
        return entries[static_cast<std::size_t>(r) * n + c];
    }

    bool operator==(const ExpMatrix& o) const {
        return n == o.n && k == o.k && entries == o.entries;
    }
};

inline bool is_symmetric(const ExpMatrix& m) {
    for (long long r = 0; r < m.n; ++r)
        for (long long c = r + 1; c < m.n; ++c)
            if (m.at(r, c) != m.at(c, r)) return false;
    return true;
}

/// MM* = nI, decided exactly: every off-diagonal pair of rows must have
/// inner product sum_j zeta_k^{m_aj - m_bj} equal to zero in Z[zeta_k].
inline bool is_butson(const ExpMatrix& m) {
    std::vector<long long> cnt(static_cast<std::size_t>(m.k));
    for (long long a = 0; a < m.n; ++a) {
        const int* ra = &m.entries[static_cast<std::size_t>(a) * m.n];
        for (long long b = a + 1; b < m.n; ++b) {
            const int* rb = &m.entries[static_cast<std::size_t>(b) * m.n];
            std::fill(cnt.begin(), cnt.end(), 0);
            for (long long j = 0; j < m.n; ++j) {
                int d = ra[j] - rb[j];
                if (d < 0) d += m.k;
                ++cnt[d];
            }
            if (!CycInt(m.k, cnt).is_zero()) return false;
        }
    }
    return true;
}

/// Text form: n rows of n space-separated exponents.
inline std::string matrix_to_text(const ExpMatrix& m) {
    std::string out;
    for (long long r = 0; r < m.n; ++r) {
        for (long long c = 0; c < m.n; ++c) {
            if (c > 0) out += ' ';
            out += std::to_string(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

inline ExpMatrix matrix_from_text(const std::string& text, int k) {
    std::vector<std::vector<int>> rows;
    std::vector<int> row;
    long long cur = 0;
    bool inNum = false;
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            cur = cur * 10 + (ch - '0');
            inNum = true;
        } else {
            if (inNum) { row.push_back(static_cast<int>(cur)); cur = 0; inNum = false; }
            if (ch == '\n' && !row.empty()) { rows.push_back(row); row.clear(); }
        }
    }
    if (inNum) row.push_back(static_cast<int>(cur));
    if (!row.empty()) rows.push_back(row);
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    const long long n = static_cast<long long>(rows.size());
    ExpMatrix m(n, k);
    for (long long r = 0; r < n; ++r) {
        if (static_cast<long long>(rows[static_cast<std::size_t>(r)].size()) != n)
            throw std::invalid_argument("matrix text is not square");
        for (long long c = 0; c < n; ++c) {
            int e = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (e < 0 || e >= k) throw std::invalid_argument("matrix exponent out of range");
            m.at(r, c) = e;
        }
    }
    return m;
}

} // namespace gpha
