#include "omegacalc/characters.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace omegacalc {

void SL2Character::add(int m, const Integer& count) {
    if (m < 0) throw std::invalid_argument("SL2Character: negative highest weight");
    if (count == 0) return;
    auto [it, inserted] = mults.try_emplace(m, count);
    if (!inserted) {
        it->second += count;
        if (it->second == 0) mults.erase(it);
    }
}

Integer SL2Character::mult(int m) const {
    auto it = mults.find(m);
    return it == mults.end() ? Integer(0) : it->second;
}

Integer SL2Character::dim() const {
    Integer total(0);
    for (const auto& [m, c] : mults) total += c * (m + 1);
    return total;
}

bool SL2Character::nonnegative() const {
    for (const auto& [m, c] : mults)
        if (c < 0) return false;
    return true;
}

SL2Character& SL2Character::operator+=(const SL2Character& o) {
    for (const auto& [m, c] : o.mults) add(m, c);
    return *this;
}

SL2Character& SL2Character::operator-=(const SL2Character& o) {
    for (const auto& [m, c] : o.mults) add(m, -c);
    return *this;
}

std::string SL2Character::str() const {
    if (mults.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = mults.rbegin(); it != mults.rend(); ++it) {
        Integer c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (c < 0) c = -c;
        if (c != 1) os << c.get_str() << "*";
        os << "S" << it->first;
        first = false;
    }
    return os.str();
}

// N(r, d, s) satisfies N(r, d, s) = N(r-1, d, s) + N(r, d-1, s-r): split on
// whether the partition has fewer than r parts, else strip the first column.
std::vector<Integer> box_partitions(int r, int d) {
    if (r < 0 || d < 0) throw std::invalid_argument("box_partitions: negative box side");
    const int smax = r * d;
    // prev[j][s] = N(j, dd-1, s), cur[j][s] = N(j, dd, s)
    std::vector<std::vector<Integer>> prev(r + 1, std::vector<Integer>(smax + 1, Integer(0)));
    for (int j = 0; j <= r; ++j) prev[j][0] = 1;
    auto cur = prev;
    for (int dd = 1; dd <= d; ++dd) {
        for (int j = 1; j <= r; ++j)
            for (int s = 1; s <= smax; ++s) {
                cur[j][s] = cur[j - 1][s];
                if (s >= j) cur[j][s] += prev[j][s - j];
            }
        std::swap(prev, cur);
    }
    return prev[r];
}

SL2Character plethysm(int r, int d) {
    if (r < 0 || d < 0) throw std::invalid_argument("plethysm: negative argument");
    auto counts = box_partitions(r, d);
    SL2Character out;
    for (int p = 0; 2 * p <= r * d; ++p) {
        Integer m = counts[static_cast<size_t>(p)];
        if (p > 0) m -= counts[static_cast<size_t>(p - 1)];
        out.add(r * d - 2 * p, m);
    }
    return out;
}

std::vector<int> a_set(int e, int r) {
    std::vector<int> out{0};
    for (int p = 2; p <= r * e; ++p) out.push_back(p);
    return out;
}

SL2Character ox_character(int d, int e, int r) {
    if (e < 1 || 2 * e >= d) throw std::invalid_argument("ox_character: need 1 <= e < d/2");
    if (r < 1) throw std::invalid_argument("ox_character: need r >= 1");
    SL2Character out;
    for (int p : a_set(e, r)) out.add(r * d - 2 * p, 1);
    Integer expect = Integer(r * (d - e) + 1) * Integer(r * e + 1) - Integer(r * d - 1);
    if (out.dim() != expect)
        throw std::logic_error("ox_character: dimension bookkeeping failed");
    return out;
}

SL2Character ideal_character(int d, int e, int r) {
    if (e < 1 || 2 * e >= d) throw std::invalid_argument("ideal_character: need 1 <= e < d/2");
    if (r < 2) throw std::invalid_argument("ideal_character: need r >= 2");
    SL2Character out;
    if (r == 2) {
        for (int p = e + 1; 2 * p <= d; ++p) out.add(2 * d - 4 * p, 1);
        return out;
    }
    out = plethysm(r, d) - ox_character(d, e, r);
    if (!out.nonnegative()) {
        std::ostringstream os;
        os << "ideal_character: negative multiplicity at (d=" << d << ", e=" << e
           << ", r=" << r << ")";
        throw std::domain_error(os.str());
    }
    return out;
}

Integer regularity_m0(int n, int d, int e) {
    if (n < 1) throw std::invalid_argument("regularity_m0: need n >= 1");
    if (e < 1 || 2 * e >= d) throw std::invalid_argument("regularity_m0: need 1 <= e < d/2");
    Rational best(4);
    Rational mid = Rational(n + 2) + Rational(Integer(1 - n), Integer(d));
    Rational top = Rational(2 * n + 1) - Rational(Integer(n), Integer(e));
    if (mid > best) best = mid;
    if (top > best) best = top;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), best.num().get_mpz_t(), best.den().get_mpz_t());
    return q;
}

} // namespace omegacalc
