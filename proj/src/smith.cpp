#include "quandlekit/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace quandlekit {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& other) const {
    if (cols != other.rows) throw std::invalid_argument("shape mismatch in mul");
    IntMat out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const mpz_class& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < other.cols; ++j) out.at(i, j) += x * other.at(k, j);
        }
    return out;
}

namespace {

struct Worker {
    IntMat a, u, v;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void add_row(int dst, int src, const mpz_class& f) {  // row dst += f * row src
        for (int c = 0; c < a.cols; ++c) a.at(dst, c) += f * a.at(src, c);
        for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    }
    void add_col(int dst, int src, const mpz_class& f) {
        for (int r = 0; r < a.rows; ++r) a.at(r, dst) += f * a.at(r, src);
        for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    Worker w{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
    const int nd = std::min(m.rows, m.cols);

    for (int k = 0; k < nd; ++k) {
        // pivot: smallest nonzero absolute value in the trailing submatrix
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = k; i < m.rows; ++i)
            for (int j = k; j < m.cols; ++j) {
                if (w.a.at(i, j) == 0) continue;
                mpz_class mag = abs(w.a.at(i, j));
                if (pi < 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < m.rows; ++i) {
                if (w.a.at(i, k) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(i, k).get_mpz_t(), w.a.at(k, k).get_mpz_t());
                w.add_row(i, k, -q);
                if (w.a.at(i, k) != 0) {  // remainder became the smaller pivot
                    w.swap_rows(k, i);
                    clean = false;
                }
            }
            for (int j = k + 1; j < m.cols; ++j) {
                if (w.a.at(k, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.a.at(k, j).get_mpz_t(), w.a.at(k, k).get_mpz_t());
                w.add_col(j, k, -q);
                if (w.a.at(k, j) != 0) {
                    w.swap_cols(k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility fixup: pivot must divide every remaining entry
            for (int i = k + 1; i < m.rows && clean; ++i)
                for (int j = k + 1; j < m.cols; ++j)
                    if (w.a.at(i, j) % w.a.at(k, k) != 0) {
                        w.add_row(k, i, 1);
                        clean = false;
                        break;
                    }
        }
        if (w.a.at(k, k) < 0) w.negate_row(k);
    }

    SmithResult out;
    out.d = std::move(w.a);
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    out.diagonal.reserve(nd);
    for (int k = 0; k < nd; ++k) {
        out.diagonal.push_back(out.d.at(k, k));
        if (out.d.at(k, k) != 0) out.rank = k + 1;
    }
    return out;
}

std::vector<std::vector<int>> kernel_spanning_mod(const SmithResult& s, int mod) {
    const int cols = s.v.cols;
    std::vector<std::vector<int>> out;
    auto push_scaled_basis_col = [&](int i, long scale) {
        std::vector<int> x(cols);
        bool nonzero = false;
        for (int r = 0; r < cols; ++r) {
            mpz_class val = ((s.v.at(r, i) * scale) % mod + mod) % mod;
            int e = static_cast<int>(val.get_si());
            x[r] = e;
            nonzero = nonzero || e != 0;
        }
        if (nonzero) out.push_back(std::move(x));
    };
    for (int i = 0; i < static_cast<int>(s.diagonal.size()) && s.diagonal[i] != 0; ++i) {
        mpz_class g_mpz;
        mpz_gcd_ui(g_mpz.get_mpz_t(), s.diagonal[i].get_mpz_t(), mod);
        long g = g_mpz.get_si();
        if (g > 1) push_scaled_basis_col(i, mod / g);
    }
    for (int i = s.rank; i < cols; ++i) push_scaled_basis_col(i, 1);
    return out;
}

bool in_image_mod(const SmithResult& s, const std::vector<int>& w, int mod) {
    if (static_cast<int>(w.size()) != s.u.cols)
        throw std::invalid_argument("vector length mismatch in in_image_mod");
    for (int i = 0; i < s.u.rows; ++i) {
        mpz_class uw = 0;
        for (int j = 0; j < s.u.cols; ++j) uw += s.u.at(i, j) * w[j];
        uw = ((uw % mod) + mod) % mod;
        mpz_class di = i < static_cast<int>(s.diagonal.size()) ? s.diagonal[i] : 0;
        if (di != 0) {
            mpz_class g;
            mpz_gcd_ui(g.get_mpz_t(), di.get_mpz_t(), mod);
            if (uw % g != 0) return false;
        } else if (uw != 0) {
            return false;
        }
    }
    return true;
}

std::vector<mpz_class> class_signature(const SmithResult& s, const std::vector<mpz_class>& z) {
    if (static_cast<int>(z.size()) != s.u.cols)
        throw std::invalid_argument("vector length mismatch in class_signature");
    std::vector<mpz_class> out(s.u.rows);
    for (int i = 0; i < s.u.rows; ++i) {
        mpz_class uz = 0;
        for (int j = 0; j < s.u.cols; ++j) uz += s.u.at(i, j) * z[j];
        if (i < static_cast<int>(s.diagonal.size()) && s.diagonal[i] != 0) {
            mpz_class d = s.diagonal[i];
            uz = ((uz % d) + d) % d;
        }
        out[i] = uz;
    }
    return out;
}

}  // namespace quandlekit
