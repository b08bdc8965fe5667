#pragma once

// Unitriangular matrices, the MacLaurin linear system and its bordered
// (Cramer) determinant, and the closed-form cofactors of a unitriangular
// matrix together with a brute-force oracle.
//
// Index convention: every public function takes 1-based (row, column)
// indices. Storage is 0-based and the translation happens only inside
// UniTriangular::at and the packed-offset helper below.

#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gendawson/errors.hpp"
#include "gendawson/scalar.hpp"
#include "gendawson/series.hpp"

namespace gendawson {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Lower triangular square matrix with unit diagonal. Only the strictly lower
/// part is stored; the diagonal reads 1 and the upper part reads 0.
template <class T>
class UniTriangular {
public:
    /// Identity of the given order.
    explicit UniTriangular(int order) : order_(order) {
        if (order < 0) throw DomainError("matrix order must be nonnegative");
        lower_.assign(packed_size(order), T(0));
    }

    /// Builds from fill(r, s) evaluated for every 1 <= s < r <= order.
    UniTriangular(int order, const std::function<T(int, int)>& fill) : UniTriangular(order) {
        for (int r = 2; r <= order_; ++r)
            for (int s = 1; s < r; ++s) lower_[offset(r, s)] = fill(r, s);
    }

    /// From a full square matrix; rejects a non-unit diagonal or nonzero upper part.
    static UniTriangular from_dense(const DenseMatrix<T>& m) {
        const int k = static_cast<int>(m.size());
        for (int r = 1; r <= k; ++r) {
            if (static_cast<int>(m[r - 1].size()) != k)
                throw DomainError("matrix row " + std::to_string(r) + " has wrong length");
            for (int s = r; s <= k; ++s) {
                const T& v = m[r - 1][s - 1];
                if (s == r && v != T(1))
                    throw DomainError("diagonal entry " + std::to_string(r) + " is not 1");
                if (s > r && v != T(0))
                    throw DomainError("upper entry (" + std::to_string(r) + "," +
                                      std::to_string(s) + ") is not 0");
            }
        }
        return UniTriangular(k, [&](int r, int s) -> T { return m[r - 1][s - 1]; });
    }

    int order() const noexcept { return order_; }

    /// Entry c_{r,s}, 1-based.
    T at(int r, int s) const {
        check_index(r, s);
        if (s > r) return T(0);
        if (s == r) return T(1);
        return lower_[offset(r, s)];
    }

    DenseMatrix<T> dense() const {
        DenseMatrix<T> m(order_, std::vector<T>(order_, T(0)));
        for (int r = 1; r <= order_; ++r)
            for (int s = 1; s <= r; ++s) m[r - 1][s - 1] = at(r, s);
        return m;
    }

    friend bool operator==(const UniTriangular&, const UniTriangular&) = default;

private:
    static std::size_t packed_size(int k) {
        return k > 1 ? static_cast<std::size_t>(k) * (k - 1) / 2 : 0;
    }
    // Row r (1-based) holds r-1 entries, rows packed one after another.
    static std::size_t offset(int r, int s) {
        return static_cast<std::size_t>(r - 1) * (r - 2) / 2 + static_cast<std::size_t>(s - 1);
    }
    void check_index(int r, int s) const {
        if (r < 1 || r > order_ || s < 1 || s > order_)
            throw DomainError("index (" + std::to_string(r) + "," + std::to_string(s) +
                              ") outside matrix of order " + std::to_string(order_));
    }

    int order_;
    std::vector<T> lower_;
};

/// Matrix A_k and constants column B_k of the MacLaurin system.
template <class T>
struct LinearSystem {
    UniTriangular<T> matrix;
    std::vector<T> constants;
};

/// Core matrix bordered by a column alpha, a row beta and a corner scalar:
///   [ core  alpha ]
///   [ beta  corner ]
template <class T>
struct BorderedSystem {
    UniTriangular<T> core;
    std::vector<T> alpha;
    std::vector<T> beta;
    T corner;

    BorderedSystem(UniTriangular<T> c, std::vector<T> a, std::vector<T> b, T corner_value)
        : core(std::move(c)), alpha(std::move(a)), beta(std::move(b)), corner(std::move(corner_value)) {
        const auto n = static_cast<std::size_t>(core.order());
        if (alpha.size() != n || beta.size() != n)
            throw DomainError("bordered system: border length does not match core order");
    }

    int order() const noexcept { return core.order() + 1; }

    DenseMatrix<T> assembled() const {
        const int n = core.order();
        DenseMatrix<T> m = core.dense();
        for (int r = 0; r < n; ++r) m[r].push_back(alpha[r]);
        std::vector<T> last(beta);
        last.push_back(corner);
        m.push_back(std::move(last));
        return m;
    }
};

/// A_k with a_{i,j} = C(i, j+1) b^{(i-j-1)}(0) for i > j, and b_i = -i b^{(i-1)}(0).
/// Needs b^{(0..k-1)}(0).
template <class T>
LinearSystem<T> build_system(const DerivativeSeq<T>& b_derivs, int k) {
    if (k < 1) throw DomainError("system size must be at least 1");
    if (static_cast<int>(b_derivs.size()) < k)
        throw InputLengthError("system of size " + std::to_string(k) + " needs " +
                               std::to_string(k) + " derivatives of b, got " +
                               std::to_string(b_derivs.size()));
    const BinomialTable binom(k);
    UniTriangular<T> a(k, [&](int i, int j) -> T {
        return binom.as<T>(i, j + 1) * b_derivs[static_cast<std::size_t>(i - j - 1)];
    });
    std::vector<T> constants;
    constants.reserve(k);
    for (int i = 1; i <= k; ++i) constants.push_back(-T(i) * b_derivs[static_cast<std::size_t>(i - 1)]);
    return {std::move(a), std::move(constants)};
}

/// Solves A x = rhs top-down. Never fails: the diagonal is one.
template <class T>
std::vector<T> forward_solve(const UniTriangular<T>& a, std::span<const T> rhs) {
    const int k = a.order();
    if (static_cast<int>(rhs.size()) != k)
        throw DomainError("forward_solve: right-hand side length does not match order");
    std::vector<T> x(rhs.begin(), rhs.end());
    for (int r = 1; r <= k; ++r) {
        for (int s = 1; s < r; ++s) {
            const T c = a.at(r, s);
            if (!ScalarTraits<T>::is_zero(c)) x[r - 1] -= c * x[s - 1];
        }
    }
    return x;
}

/// Depth-first enumeration of the strictly decreasing index chains
/// n = p_0 > p_1 > ... > p_s = 0 used by the cofactor formula.
/// visit receives the full chain (p_0, ..., p_s); its length is s + 1.
template <class Visit>
void enumerate_chains(int n, Visit&& visit) {
    if (n < 1) return;
    std::vector<int> chain{n};
    std::function<void()> descend = [&]() {
        const int top = chain.back();
        chain.push_back(0);
        visit(std::span<const int>(chain));
        chain.pop_back();
        for (int p = top - 1; p >= 1; --p) {
            chain.push_back(p);
            descend();
            chain.pop_back();
        }
    };
    descend();
}

/// Cofactor Delta_{i,i+n} of a unitriangular matrix by the closed chain formula
///   C(i,n) = sum_s (-1)^s sum_{n > p_1 > ... > p_s = 0} c_{i+n,i+p_1} ... c_{i+p_{s-1},i+p_s}.
/// Requires 1 <= i <= order-1 and 1 <= n <= order-i.
template <class T>
T cofactor_closed_form(const UniTriangular<T>& c, int i, int n) {
    const int k = c.order();
    if (i < 1 || i > k - 1 || n < 1 || n > k - i)
        throw DomainError("cofactor_closed_form: (i,n) = (" + std::to_string(i) + "," +
                          std::to_string(n) + ") out of range for order " + std::to_string(k));
    T total(0);
    enumerate_chains(n, [&](std::span<const int> chain) {
        T term(1);
        for (std::size_t q = 1; q < chain.size(); ++q) {
            term *= c.at(i + chain[q - 1], i + chain[q]);
            if (ScalarTraits<T>::is_zero(term)) return;
        }
        const std::size_t s = chain.size() - 1;
        if (s % 2 == 1) total -= term;
        else total += term;
    });
    return total;
}

/// Full cofactor table entry Delta_{r,s} via the closed form: 1 on the
/// diagonal, 0 below it, C(r, s-r) above.
template <class T>
T cofactor(const UniTriangular<T>& c, int r, int s) {
    if (r < 1 || s < 1 || r > c.order() || s > c.order())
        throw DomainError("cofactor: index out of range");
    if (r == s) return T(1);
    if (r > s) return T(0);
    return cofactor_closed_form(c, r, s - r);
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Exact over Rational; any field works.
template <class T>
T dense_determinant(DenseMatrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("dense_determinant: matrix is not square");
    T sign(1);
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (ScalarTraits<T>::is_zero(m[k][k])) {
            std::size_t p = k + 1;
            while (p < n && ScalarTraits<T>::is_zero(m[p][k])) ++p;
            if (p == n) return T(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// (-1)^{r+s} times the minor with row r and column s deleted, by dense elimination.
template <class T>
T cofactor_oracle(const UniTriangular<T>& c, int r, int s) {
    const int k = c.order();
    if (r < 1 || r > k || s < 1 || s > k)
        throw DomainError("cofactor_oracle: (" + std::to_string(r) + "," + std::to_string(s) +
                          ") out of range for order " + std::to_string(k));
    DenseMatrix<T> minor;
    minor.reserve(k - 1);
    for (int row = 1; row <= k; ++row) {
        if (row == r) continue;
        std::vector<T> line;
        line.reserve(k - 1);
        for (int col = 1; col <= k; ++col)
            if (col != s) line.push_back(c.at(row, col));
        minor.push_back(std::move(line));
    }
    T det = dense_determinant(std::move(minor));
    return (r + s) % 2 == 0 ? det : T(-det);
}

/// det = corner * det(core) - sum_{r,s} alpha_r beta_s Delta_{r,s}, with
/// det(core) = 1 and the cofactors from the closed form. An empty core
/// returns the corner.
template <class T>
T bordered_det(const BorderedSystem<T>& sys) {
    const int n = sys.core.order();
    T det = sys.corner;
    for (int r = 1; r <= n; ++r) {
        if (ScalarTraits<T>::is_zero(sys.alpha[r - 1])) continue;
        for (int s = r; s <= n; ++s) {
            if (ScalarTraits<T>::is_zero(sys.beta[s - 1])) continue;
            det -= sys.alpha[r - 1] * sys.beta[s - 1] * cofactor(sys.core, r, s);
        }
    }
    return det;
}

/// P_k: core A_{k-1}, alpha = first k-1 constants of B_k, beta = last row of
/// A_k left of the diagonal, corner = -k b^{(k-1)}(0).
template <class T>
BorderedSystem<T> cramer_matrix(const DerivativeSeq<T>& b_derivs, int k) {
    LinearSystem<T> full = build_system(b_derivs, k);
    UniTriangular<T> core(k - 1, [&](int r, int s) -> T { return full.matrix.at(r, s); });
    std::vector<T> alpha(full.constants.begin(), full.constants.end() - 1);
    std::vector<T> beta;
    beta.reserve(k - 1);
    for (int s = 1; s < k; ++s) beta.push_back(full.matrix.at(k, s));
    return BorderedSystem<T>(std::move(core), std::move(alpha), std::move(beta), full.constants.back());
}

/// D_b^{(k+1)}(0) = det P_k evaluated through the bordered-determinant formula.
template <class T>
T dawson_derivative_cramer(const DerivativeSeq<T>& b_derivs, int k) {
    return bordered_det(cramer_matrix(b_derivs, k));
}

/// Plain-text matrix dump: first line the order k, then k lines of
/// space-separated entries (full rows, rationals as "p/q").
std::string to_text(const UniTriangular<Rational>& m);

/// Parses the dump format; the diagonal must be 1 and the upper part 0.
UniTriangular<Rational> unitriangular_from_text(std::string_view text);

}  // namespace gendawson
