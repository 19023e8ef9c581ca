#pragma once

#include <map>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * BigInt(n - i) / BigInt(i + 1);
    return r;
}

inline std::size_t binomial_sz(std::size_t n, std::size_t k) {
    return static_cast<std::size_t>(binomial(n, k));
}

// Ascending k-element subsets of {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        std::size_t i = k;
        while (i-- > 0) {
            if (cur[i] != i + n - k) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
    return out;
}

// Non-decreasing k-tuples over {0..n-1} (degree-k monomials), lexicographic.
inline std::vector<std::vector<std::size_t>> k_multisets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<std::size_t> cur(k, 0);
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        std::size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (cur[i] != n - 1) {
                ++cur[i];
                for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[i];
                done = false;
                break;
            }
        }
        if (done) break;
    }
    return out;
}

// k-th exterior power: C(rows,k) x C(cols,k) matrix of k x k minors, rows and
// columns indexed by ascending index subsets in lexicographic order.  k larger
// than a dimension just yields a zero-row or zero-column matrix.
template <Field F>
Matrix<F> exterior_power(const Matrix<F>& m, std::size_t k) {
    auto rsets = k_subsets(m.rows(), k);
    auto csets = k_subsets(m.cols(), k);
    Matrix<F> out(rsets.size(), csets.size());
    for (std::size_t i = 0; i < rsets.size(); ++i) {
        Matrix<F> rows = m.select_rows(rsets[i]);
        for (std::size_t j = 0; j < csets.size(); ++j)
            out(i, j) = det(rows.select_cols(csets[j]));
    }
    return out;
}

// k-th symmetric power on the degree-k monomial basis in lexicographic order.
// Column I is the expansion of prod_{i in I} (m e_i) as a polynomial in the
// target coordinates.
template <Field F>
Matrix<F> symmetric_power(const Matrix<F>& m, std::size_t k) {
    auto rsets = k_multisets(m.rows(), k);
    auto csets = k_multisets(m.cols(), k);
    std::map<std::vector<std::size_t>, std::size_t> row_index;
    for (std::size_t i = 0; i < rsets.size(); ++i) row_index[rsets[i]] = i;
    Matrix<F> out(rsets.size(), csets.size());
    for (std::size_t j = 0; j < csets.size(); ++j) {
        // multiply the linear forms one factor at a time
        std::map<std::vector<std::size_t>, F> poly;
        poly[{}] = F(1);
        for (std::size_t idx : csets[j]) {
            std::map<std::vector<std::size_t>, F> next;
            for (const auto& [mon, coef] : poly) {
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    const F& c = m(r, idx);
                    if (c == F(0)) continue;
                    std::vector<std::size_t> nm = mon;
                    nm.insert(std::lower_bound(nm.begin(), nm.end(), r), r);
                    auto it = next.find(nm);
                    if (it == next.end())
                        next.emplace(std::move(nm), coef * c);
                    else
                        it->second = it->second + coef * c;
                }
            }
            poly = std::move(next);
        }
        for (const auto& [mon, coef] : poly) out(row_index.at(mon), j) = coef;
    }
    return out;
}

}  // namespace qrep
