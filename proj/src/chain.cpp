#include "quandlekit/chain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace quandlekit {

Theory theory_from_string(const std::string& s) {
    if (s == "R") return Theory::R;
    if (s == "D") return Theory::D;
    if (s == "Q") return Theory::Q;
    throw std::invalid_argument("theory must be R, D or Q, got: " + s);
}

bool is_degenerate_tuple(const std::vector<int>& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

int default_degree_bound(int n) {
    if (n <= 6) return 4;
    if (n <= 10) return 3;
    return 2;
}

std::string HomologyGroup::to_string() const {
    if (trivial()) return "0";
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (long long d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(d);
    }
    return out;
}

std::vector<long long> invariant_factors(std::vector<long long> orders) {
    std::map<long long, std::vector<int>> exponents;  // prime -> sorted desc exponents
    for (long long o : orders) {
        for (long long p = 2; p * p <= o; ++p)
            if (o % p == 0) {
                int e = 0;
                while (o % p == 0) {
                    o /= p;
                    ++e;
                }
                exponents[p].push_back(e);
            }
        if (o > 1) exponents[o].push_back(1);
    }
    size_t k = 0;
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        k = std::max(k, es.size());
    }
    std::vector<long long> factors(k, 1);
    for (auto& [p, es] : exponents)
        for (size_t i = 0; i < es.size(); ++i) {
            long long pw = 1;
            for (int j = 0; j < es[i]; ++j) pw *= p;
            factors[i] *= pw;
        }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility d1 | d2 | ...
    return factors;
}

namespace {

long long encode(const std::vector<int>& t, int n) {
    long long code = 0;
    for (int v : t) code = code * n + v;
    return code;
}

std::vector<std::vector<int>> all_tuples(int n, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(degree, 0);
    while (true) {
        out.push_back(t);
        int i = degree - 1;
        while (i >= 0 && t[i] == n - 1) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    if (degree == 0) out.resize(1);  // single empty tuple
    return out;
}

// Signed targets of the free boundary of t, accumulated so that cancelling
// pairs vanish.
std::map<std::vector<int>, long> free_boundary(const Rack& x, const std::vector<int>& t) {
    std::map<std::vector<int>, long> acc;
    const int d = static_cast<int>(t.size());
    for (int i = 2; i <= d; ++i) {  // 1-based entry index
        long sign = (i % 2 == 0) ? 1 : -1;
        std::vector<int> dropped;
        dropped.reserve(d - 1);
        for (int j = 0; j < d; ++j)
            if (j != i - 1) dropped.push_back(t[j]);
        acc[dropped] += sign;
        std::vector<int> acted;
        acted.reserve(d - 1);
        for (int j = 0; j < i - 1; ++j) acted.push_back(x.op(t[j], t[i - 1]));
        for (int j = i; j < d; ++j) acted.push_back(t[j]);
        acc[acted] -= sign;
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

std::string tuple_to_string(const std::vector<int>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

// The degenerate span is boundary-closed iff the table is a quandle; the
// check reports the first escaping tuple for the error message.
void check_degenerate_closure(const Rack& x, int max_degree) {
    for (int d = 2; d <= max_degree; ++d)
        for (const auto& t : all_tuples(x.size(), d)) {
            if (!is_degenerate_tuple(t)) continue;
            for (const auto& [target, coeff] : free_boundary(x, t))
                if (!is_degenerate_tuple(target))
                    throw std::invalid_argument(
                        "degenerate span is not a subcomplex: boundary of " + tuple_to_string(t) +
                        " has coefficient " + std::to_string(coeff) + " on " +
                        tuple_to_string(target));
        }
}

}  // namespace

int ChainComplex::index_of(int degree, const std::vector<int>& tuple) const {
    if (degree < 0 || degree > max_degree) return -1;
    auto it = index_[degree].find(encode(tuple, 64));
    return it == index_[degree].end() ? -1 : it->second;
}

IntMat rack_boundary_matrix(const Rack& x, int degree) {
    const int n = x.size();
    auto lower = all_tuples(n, std::max(degree - 1, 0));
    auto upper = all_tuples(n, degree);
    if (degree < 1) return IntMat(0, degree == 0 ? 1 : 0);
    std::unordered_map<long long, int> index;
    for (size_t i = 0; i < lower.size(); ++i) index[encode(lower[i], 64)] = static_cast<int>(i);
    IntMat m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (size_t j = 0; j < upper.size(); ++j)
        for (const auto& [target, coeff] : free_boundary(x, upper[j]))
            m.at(index.at(encode(target, 64)), static_cast<int>(j)) = coeff;
    return m;
}

ChainComplex build_complex(const Rack& x, Theory theory, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be nonnegative");
    if (theory != Theory::R) check_degenerate_closure(x, max_degree);

    ChainComplex cx;
    cx.theory = theory;
    cx.max_degree = max_degree;
    cx.basis.resize(max_degree + 1);
    cx.index_.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        for (auto& t : all_tuples(x.size(), d)) {
            bool deg = is_degenerate_tuple(t);
            if (theory == Theory::D && !deg) continue;
            if (theory == Theory::Q && deg) continue;
            cx.index_[d][encode(t, 64)] = static_cast<int>(cx.basis[d].size());
            cx.basis[d].push_back(std::move(t));
        }
    }
    cx.boundary.resize(max_degree + 1);
    cx.boundary[0] = IntMat(0, cx.dim(0));
    for (int d = 1; d <= max_degree; ++d) {
        IntMat m(cx.dim(d - 1), cx.dim(d));
        for (int j = 0; j < cx.dim(d); ++j)
            for (const auto& [target, coeff] : free_boundary(x, cx.basis[d][j])) {
                int i = cx.index_of(d - 1, target);
                if (i >= 0)
                    m.at(i, j) = coeff;
                else if (theory == Theory::D)
                    throw std::logic_error("degenerate boundary escaped after closure check");
                // theory Q: projection kills degenerate targets
            }
        cx.boundary[d] = std::move(m);
    }
    return cx;
}

namespace {

int resolve_bound(const Rack& x, int bound) {
    return bound < 0 ? default_degree_bound(x.size()) : bound;
}

long long small(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("torsion divisor does not fit a word");
    return v.get_si();
}

struct DegreeData {
    long long dim = 0;
    int rank_out = 0;                     // rank of boundary leaving this degree
    int rank_in = 0;                      // rank of boundary entering
    std::vector<long long> torsion_in;    // diagonal > 1 of SNF(entering boundary)
    std::vector<long long> torsion_out;   // diagonal > 1 of SNF(leaving boundary)
};

DegreeData degree_data(const Rack& x, Theory theory, int degree, int bound) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (degree + 1 > bound)
        throw std::out_of_range("degree " + std::to_string(degree) +
                                " needs boundary at degree " + std::to_string(degree + 1) +
                                " above the bound " + std::to_string(bound));
    ChainComplex cx = build_complex(x, theory, degree + 1);
    DegreeData out;
    out.dim = cx.dim(degree);
    SmithResult in = smith_normal_form(cx.boundary[degree + 1]);
    SmithResult outb = smith_normal_form(cx.boundary[degree]);
    out.rank_in = in.rank;
    out.rank_out = outb.rank;
    for (const auto& d : in.diagonal)
        if (d > 1) out.torsion_in.push_back(small(d));
    for (const auto& d : outb.diagonal)
        if (d > 1) out.torsion_out.push_back(small(d));
    return out;
}

}  // namespace

HomologyGroup homology(const Rack& x, Theory theory, int degree, int coefficients_mod,
                       int bound) {
    DegreeData dd = degree_data(x, theory, degree, resolve_bound(x, bound));
    long long betti = dd.dim - dd.rank_out - dd.rank_in;
    HomologyGroup g;
    if (coefficients_mod == 0) {
        g.free_rank = betti;
        g.torsion = invariant_factors(dd.torsion_in);
        return g;
    }
    const long long m = coefficients_mod;
    std::vector<long long> orders(betti, m);
    for (long long d : dd.torsion_in) orders.push_back(std::gcd(d, m));   // H_n ⊗ Z_m
    for (long long d : dd.torsion_out) orders.push_back(std::gcd(d, m));  // Tor(H_{n-1}, Z_m)
    g.torsion = invariant_factors(std::move(orders));
    return g;
}

HomologyGroup cohomology(const Rack& x, Theory theory, int degree, int coefficients_mod,
                         int bound) {
    DegreeData dd = degree_data(x, theory, degree, resolve_bound(x, bound));
    long long betti = dd.dim - dd.rank_out - dd.rank_in;
    HomologyGroup g;
    if (coefficients_mod == 0) {
        g.free_rank = betti;
        g.torsion = invariant_factors(dd.torsion_out);  // Ext(H_{n-1}, Z)
        return g;
    }
    const long long m = coefficients_mod;
    std::vector<long long> orders(betti, m);
    for (long long d : dd.torsion_in) orders.push_back(std::gcd(d, m));   // Hom(H_n, Z_m)
    for (long long d : dd.torsion_out) orders.push_back(std::gcd(d, m));  // Ext(H_{n-1}, Z_m)
    g.torsion = invariant_factors(std::move(orders));
    return g;
}

CocycleBasis cocycle_spanning_set(const Rack& x, Theory theory, int degree, int mod, int bound) {
    if (mod < 2) throw std::invalid_argument("modulus must be at least 2");
    int b = resolve_bound(x, bound);
    if (degree + 1 > b)
        throw std::out_of_range("cocycle degree " + std::to_string(degree) +
                                " above the bound " + std::to_string(b));
    ChainComplex cx = build_complex(x, theory, degree + 1);

    auto transpose = [](const IntMat& m) {
        IntMat t(m.cols, m.rows);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
        return t;
    };
    SmithResult delta_n = smith_normal_form(transpose(cx.boundary[degree + 1]));
    SmithResult delta_prev = smith_normal_form(transpose(cx.boundary[degree]));

    CocycleBasis out;
    out.theory = theory;
    out.degree = degree;
    out.mod = mod;
    out.vectors = kernel_spanning_mod(delta_n, mod);
    for (const auto& v : out.vectors) out.coboundary.push_back(in_image_mod(delta_prev, v, mod));
    return out;
}

ClassCalculator::ClassCalculator(const Rack& x, Theory theory, int degree, int bound)
    : degree_(degree) {
    int b = resolve_bound(x, bound);
    if (degree + 1 > b)
        throw std::out_of_range("class degree " + std::to_string(degree) + " above the bound " +
                                std::to_string(b));
    cx_ = build_complex(x, theory, degree + 1);
    snf_in_ = smith_normal_form(cx_.boundary[degree + 1]);
}

bool ClassCalculator::is_cycle(const std::vector<mpz_class>& z) const {
    const IntMat& b = cx_.boundary[degree_];
    if (static_cast<int>(z.size()) != b.cols) throw std::invalid_argument("cycle length mismatch");
    for (int i = 0; i < b.rows; ++i) {
        mpz_class acc = 0;
        for (int j = 0; j < b.cols; ++j)
            if (z[j] != 0) acc += b.at(i, j) * z[j];
        if (acc != 0) return false;
    }
    return true;
}

std::vector<mpz_class> ClassCalculator::signature(const std::vector<mpz_class>& z) const {
    return class_signature(snf_in_, z);
}

std::string matrix_to_triplet_json(const IntMat& m) {
    nlohmann::json j;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    auto& trip = j["entries"] = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(i, c) != 0) trip.push_back({i, c, small(m.at(i, c))});
    return j.dump();
}

}  // namespace quandlekit
