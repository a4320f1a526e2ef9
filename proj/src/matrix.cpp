#include "rbident/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rbident {

namespace {

void clearDenominators(RatVec& row) {
    BigInt l = 1;
    for (const Rat& x : row) {
        BigInt d = boost::multiprecision::denominator(x);
        l = boost::multiprecision::lcm(l, d);
    }
    if (l != 1) {
        Rat f(l);
        for (Rat& x : row) x *= f;
    }
}

}  // namespace

RrefResult rref(RatMat m) {
    const size_t nr = m.size();
    if (nr == 0) return {};
    const size_t nc = m[0].size();
    for (const auto& row : m)
        if (row.size() != nc) throw std::invalid_argument("ragged matrix");
    for (auto& row : m) clearDenominators(row);

    std::vector<int> pivots;
    Rat prev(1);
    size_t r = 0;
    for (size_t c = 0; c < nc && r < nr; ++c) {
        size_t pr = r;
        while (pr < nr && m[pr][c] == 0) ++pr;
        if (pr == nr) continue;
        if (pr != r) std::swap(m[pr], m[r]);
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = c + 1; j < nc; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(static_cast<int>(c));
        ++r;
    }

    const size_t rank = pivots.size();
    for (size_t k = rank; k-- > 0;) {
        const size_t pc = static_cast<size_t>(pivots[k]);
        Rat pv = m[k][pc];
        for (size_t j = pc; j < nc; ++j) m[k][j] /= pv;
        for (size_t i = 0; i < k; ++i) {
            Rat f = m[i][pc];
            if (f == 0) continue;
            for (size_t j = pc; j < nc; ++j) m[i][j] -= f * m[k][j];
        }
    }
    m.resize(rank);
    return {std::move(m), std::move(pivots)};
}

int rankOf(const RatMat& m) { return static_cast<int>(rref(m).pivots.size()); }

RatMat kernelBasis(const RrefResult& r, int ncols) {
    std::vector<bool> isPivot(static_cast<size_t>(ncols), false);
    for (int p : r.pivots) isPivot[static_cast<size_t>(p)] = true;
    RatMat out;
    for (int f = 0; f < ncols; ++f) {
        if (isPivot[static_cast<size_t>(f)]) continue;
        RatVec v(static_cast<size_t>(ncols), Rat(0));
        v[static_cast<size_t>(f)] = Rat(1);
        for (size_t row = 0; row < r.pivots.size(); ++row)
            v[static_cast<size_t>(r.pivots[row])] = -r.rows[row][static_cast<size_t>(f)];
        out.push_back(std::move(v));
    }
    return out;
}

CanonicalKernel canonicalKernel(const RatMat& m, int ncols) {
    RrefResult red = m.empty() ? RrefResult{} : rref(m);
    if (m.empty()) {
        // No constraints: the kernel is everything; canonical basis = identity.
        RatMat rows;
        std::vector<int> free;
        for (int i = 0; i < ncols; ++i) {
            RatVec v(static_cast<size_t>(ncols), Rat(0));
            v[static_cast<size_t>(i)] = Rat(1);
            rows.push_back(std::move(v));
            free.push_back(i);
        }
        return {std::move(rows), std::move(free)};
    }
    RatMat ker = kernelBasis(red, ncols);
    if (ker.empty()) return {};
    RrefResult canon = rref(std::move(ker));
    return {std::move(canon.rows), std::move(canon.pivots)};
}

RatMat Echelon::matrix() const {
    RatMat out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

bool Echelon::add(RatVec v) {
    for (const auto& [p, row] : rows_) {
        const size_t pc = static_cast<size_t>(p);
        if (pc >= v.size()) break;
        Rat f = v[pc];
        if (f == 0) continue;
        for (size_t j = pc; j < v.size(); ++j) v[j] -= f * row[j];
    }
    size_t lead = v.size();
    for (size_t j = 0; j < v.size(); ++j) {
        if (v[j] != 0) {
            lead = j;
            break;
        }
    }
    if (lead == v.size()) return false;
    Rat pv = v[lead];
    for (size_t j = lead; j < v.size(); ++j) v[j] /= pv;
    rows_.emplace(static_cast<int>(lead), std::move(v));
    return true;
}

std::optional<RatVec> solveExact(const RatMat& gens, const RatVec& target) {
    const size_t nc = gens.size();
    const size_t len = target.size();
    for (const auto& g : gens)
        if (g.size() != len) throw std::invalid_argument("generator length mismatch");
    RatMat rows(len, RatVec(nc + 1, Rat(0)));
    for (size_t pos = 0; pos < len; ++pos) {
        for (size_t k = 0; k < nc; ++k) rows[pos][k] = gens[k][pos];
        rows[pos][nc] = target[pos];
    }
    RrefResult red = rref(std::move(rows));
    for (int p : red.pivots)
        if (p == static_cast<int>(nc)) return std::nullopt;
    RatVec sol(nc, Rat(0));
    for (size_t r = 0; r < red.pivots.size(); ++r)
        sol[static_cast<size_t>(red.pivots[r])] = red.rows[r][nc];
    for (size_t pos = 0; pos < len; ++pos) {
        Rat s(0);
        for (size_t k = 0; k < nc; ++k)
            if (sol[k] != 0) s += sol[k] * gens[k][pos];
        if (s != target[pos]) return std::nullopt;
    }
    return sol;
}

}  // namespace rbident
