#pragma once

#include <string>
#include <vector>

#include "gpha/group.hpp"

namespace gpha {

/// h-ary array: a map from a finite abelian group to Z_h, stored densely
/// in rank order.
struct ExponentArray {
    Group group;
    int h = 2;
    std::vector<int> values; // values[rank], each in [0, h)

    ExponentArray() = default;

    ExponentArray(Group g, int modulus, std::vector<int> vals)
        : group(std::move(g)), h(modulus), values(std::move(vals)) {
        if (h < 2) throw std::invalid_argument("array modulus must be >= 2");
        if (static_cast<long long>(values.size()) != group.size)
            throw std::invalid_argument("value vector length must equal the group order");
        for (int v : values)
            if (v < 0 || v >= h) throw std::invalid_argument("array value out of range");
    }

    int at(long long rank) const { return values[static_cast<std::size_t>(rank)]; }

    bool is_normalized() const { return values.empty() || values[0] == 0; }

    /// shift all values by -phi(0); autocorrelation and spectra are
    /// insensitive to this, coboundary-based paths require it
    ExponentArray normalized() const {
        if (is_normalized()) return *this;
        ExponentArray r(*this);
        int c = values[0];
        for (int& v : r.values) v = (v - c % h + h) % h;
        return r;
    }
};

/// Expansion of type z: the array on E given by
///   phi'(g) = phi(g mod s) + sum_i floor(g_i / s_i)  (mod h).
inline ExponentArray expand(const ExponentArray& phi, const std::vector<int>& z) {
    ExpansionContext ctx = expansion_context(phi.group, z, phi.h);
    const Group& e = ctx.big;
    const Group& g = phi.group;
    std::vector<int> vals(static_cast<std::size_t>(e.size));
    Coords c(e.arity());
    for (long long r = 0; r < e.size; ++r) {
        c = e.unrank(r);
        long long baseRank = 0;
        long long carry = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            baseRank += g.strides[i] * (c[i] % g.orders[i]);
            carry += c[i] / g.orders[i];
        }
        vals[static_cast<std::size_t>(r)] =
            static_cast<int>((phi.at(baseRank) + carry) % phi.h);
    }
    return ExponentArray(e, phi.h, std::move(vals));
}

/// Layer display: the last two coordinates form a grid, earlier
/// coordinates select the layer. One-dimensional arrays print as a row.
inline std::string pretty_layers(const ExponentArray& a) {
    std::string out;
    const Group& g = a.group;
    const std::size_t m = g.arity();
    if (m == 0) {
        out += std::to_string(a.at(0));
        out += '\n';
        return out;
    }
    long long rows = m >= 2 ? g.orders[m - 2] : 1;
    long long cols = g.orders[m - 1];
    long long layers = g.size / (rows * cols);
    for (long long l = 0; l < layers; ++l) {
        if (l > 0) out += '\n';
        if (layers > 1) {
            out += "layer ";
            Coords c = g.unrank(l * rows * cols);
            for (std::size_t i = 0; i + 2 < m; ++i) {
                if (i > 0) out += ',';
                out += std::to_string(c[i]);
            }
            out += '\n';
        }
        for (long long r = 0; r < rows; ++r) {
            for (long long c = 0; c < cols; ++c) {
                if (c > 0) out += ' ';
                out += std::to_string(a.at((l * rows + r) * cols + c));
            }
            out += '\n';
        }
    }
    return out;
}

} // namespace gpha
