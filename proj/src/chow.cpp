#include "eulab/chow.hpp"

#include <algorithm>

#include "eulab/errors.hpp"

namespace eulab {

void Divisor::add(Subset s, const Rat& c) {
    if (c == 0) return;
    auto it = coeffs.find(s);
    if (it == coeffs.end()) {
        coeffs.emplace(s, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

namespace {

void check_divisor_index(int m, int i) {
    if (m < 2 || i < 1 || i > m - 1)
        throw invalid_parameters_error("divisor index must satisfy 1 <= i <= m-1");
}

}  // namespace

Divisor divisor_L(int m, int i) {
    check_divisor_index(m, i);
    Divisor d{m, {}};
    Subset full = (Subset(1) << m) - 1;
    for (Subset s = 1; s < full; ++s) {
        int c = std::min(m - i, Matroid::popcount(s));
        if (s >> (m - 1) & 1) c -= m - i;
        d.add(s, c);
    }
    return d;
}

Divisor divisor_S(int m, int i) {
    check_divisor_index(m, i);
    Divisor d{m, {}};
    Subset full = (Subset(1) << m) - 1;
    for (Subset s = 1; s < full; ++s)
        if (Matroid::popcount(s) == m - i) d.add(s, 1);
    return d;
}

Divisor divisor_M_factor(const Matroid& mat, int i) {
    if (!mat.loopless()) throw invalid_parameters_error("divisor_M_factor: matroid has a loop");
    if (i < 1 || i > mat.corank())
        throw invalid_parameters_error("divisor_M_factor: index must satisfy 1 <= i <= corank");
    int m = mat.elements();
    Divisor d{m, {}};
    Subset full = mat.full_set();
    for (Subset s = 1; s < full; ++s) {
        int nul = mat.nullity(s);
        if (s & 1) {
            if (nul < i) d.add(s, 1);
        } else {
            if (nul >= i) d.add(s, -1);
        }
    }
    return d;
}

Divisor canonical_divisor(Divisor d) {
    // subtracting c * (sum_{F containing e} x_F - sum_{F containing m-1} x_F)
    // clears the singleton {e} coordinate and preserves the divisor class
    Subset full = (Subset(1) << d.m) - 1;
    for (int e = 0; e + 1 < d.m; ++e) {
        auto it = d.coeffs.find(Subset(1) << e);
        if (it == d.coeffs.end()) continue;
        Rat c = it->second;
        for (Subset s = 1; s < full; ++s) {
            if (s >> e & 1) d.add(s, -c);
            if (s >> (d.m - 1) & 1) d.add(s, c);
        }
    }
    return d;
}

std::string divisor_fingerprint(const Divisor& d) {
    std::string out = std::to_string(d.m) + ":";
    for (const auto& [s, c] : d.coeffs) {
        out += std::to_string(s);
        out += "=";
        out += numerator_string(c);
        out += "/";
        out += denominator_string(c);
        out += ";";
    }
    return out;
}

std::pair<Divisor, Divisor> restrict_divisor(const Divisor& d, Subset f) {
    Subset full = (Subset(1) << d.m) - 1;
    if (f == 0 || f == full) throw invalid_parameters_error("restrict: F must be proper nonempty");
    std::vector<int> inside, outside;
    for (int e = 0; e < d.m; ++e)
        (f >> e & 1 ? inside : outside).push_back(e);
    int fb = static_cast<int>(inside.size());
    int ft = d.m - fb;

    auto relabel = [](Subset s, const std::vector<int>& elems) {
        Subset out = 0;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (s >> elems[i] & 1) out |= Subset(1) << i;
        return out;
    };

    Divisor bottom{fb, {}};
    Divisor top{ft, {}};
    Rat cf = 0;
    for (const auto& [s, c] : d.coeffs) {
        if (s == f) {
            cf = c;
        } else if ((s & f) == s) {
            bottom.add(relabel(s, inside), c);
        } else if ((s & f) == f) {
            top.add(relabel(s & ~f, outside), c);
        }
        // incomparable rays restrict to zero
    }
    if (cf != 0) {
        // the self-restriction of x_F contributes -L_1 below and -L_top above;
        // on a one-element factor the corresponding divisor is zero
        if (fb >= 2) {
            Divisor l1 = divisor_L(fb, 1);
            for (const auto& [s, c] : l1.coeffs) bottom.add(s, -cf * c);
        }
        if (ft >= 2) {
            Divisor lt = divisor_L(ft, ft - 1);
            for (const auto& [s, c] : lt.coeffs) top.add(s, -cf * c);
        }
    }
    return {std::move(bottom), std::move(top)};
}

Rat Integrator::integral(int m, const std::vector<IntegrandFactor>& factors) {
    std::optional<Matroid> cls;
    std::vector<Divisor> divisors;
    for (const auto& f : factors) {
        if (std::holds_alternative<Matroid>(f)) {
            if (cls) throw invalid_parameters_error("integral: at most one matroid class allowed");
            cls = std::get<Matroid>(f);
            if (cls->elements() != m)
                throw invalid_parameters_error("integral: matroid ground set size mismatch");
        } else {
            const Divisor& d = std::get<Divisor>(f);
            if (d.m != m) throw invalid_parameters_error("integral: divisor ground set size mismatch");
            divisors.push_back(d);
        }
    }
    int degree = static_cast<int>(divisors.size()) + (cls ? cls->corank() : 0);
    if (degree != m - 1)
        throw invalid_parameters_error("integral: total degree must equal m-1, got " +
                                       std::to_string(degree));
    return run(m, cls, std::move(divisors));
}

Rat Integrator::run(int m, const std::optional<Matroid>& cls, std::vector<Divisor> divisors) {
    if (cls && !cls->loopless()) return 0;
    if (m == 1) return divisors.empty() ? Rat(1) : Rat(0);
    if (divisors.empty()) return 1;  // remaining class has rank 1 by the degree invariant

    for (auto& d : divisors) d = canonical_divisor(std::move(d));
    std::sort(divisors.begin(), divisors.end(), [](const Divisor& a, const Divisor& b) {
        if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
        return divisor_fingerprint(a) < divisor_fingerprint(b);
    });

    std::string key;
    if (cls) {
        key.reserve(64);
        for (Subset s = 0; s <= cls->full_set(); ++s) key += char('0' + cls->rank(s));
    }
    key += "#";
    for (const auto& d : divisors) key += divisor_fingerprint(d) + "|";
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Divisor& branch = divisors.front();
    std::vector<Divisor> rest(divisors.begin() + 1, divisors.end());
    int nrest = static_cast<int>(rest.size());

    Rat acc = 0;
    for (const auto& [f, cf] : branch.coeffs) {
        if (cls && cls->closure(f) != f) continue;  // x_F kills the class off its flats
        int fb = Matroid::popcount(f);
        int ft = m - fb;
        int need_bottom = cls ? cls->rank(f) - 1 : fb - 1;
        if (need_bottom < 0 || need_bottom > nrest) continue;

        std::vector<std::pair<Divisor, Divisor>> split;
        split.reserve(rest.size());
        for (const auto& d : rest) split.push_back(restrict_divisor(d, f));

        std::optional<Matroid> bottom_cls, top_cls;
        if (cls) {
            bottom_cls = cls->minor(f, 0);
            top_cls = cls->minor(cls->full_set(), f);
        }

        // binomial expansion of the restricted product across the two factors
        for (Subset pick = 0; pick < (Subset(1) << nrest); ++pick) {
            if (Matroid::popcount(pick) != need_bottom) continue;
            bool dead = false;
            std::vector<Divisor> bots, tops;
            for (int i = 0; i < nrest && !dead; ++i) {
                if (pick >> i & 1) {
                    if (split[i].first.zero()) dead = true;
                    bots.push_back(split[i].first);
                } else {
                    if (split[i].second.zero()) dead = true;
                    tops.push_back(split[i].second);
                }
            }
            if (dead) continue;
            Rat lower = run(fb, bottom_cls, std::move(bots));
            if (lower == 0) continue;
            Rat upper = run(ft, top_cls, std::move(tops));
            acc += cf * lower * upper;
        }
    }

    memo_.emplace(std::move(key), acc);
    return acc;
}

Rat integral(int m, const std::vector<IntegrandFactor>& factors) {
    Integrator integ;
    return integ.integral(m, factors);
}

Rat integral_pure_matroid(const Matroid& mat, const Composition& a) {
    int m = mat.elements();
    if (static_cast<int>(a.size()) != m - 1)
        throw invalid_parameters_error("integral_pure_matroid: composition length must be m-1");
    int total = 0;
    for (int v : a) {
        if (v < 0) throw invalid_parameters_error("integral_pure_matroid: negative entry");
        total += v;
    }
    if (total != mat.rank() - 1)
        throw invalid_parameters_error("integral_pure_matroid: degree must equal rank-1");
    if (!mat.loopless()) return 0;
    std::vector<IntegrandFactor> factors;
    for (int i = 1; i <= mat.corank(); ++i) factors.emplace_back(divisor_M_factor(mat, i));
    for (int i = 1; i <= m - 1; ++i)
        for (int p = 0; p < a[i - 1]; ++p) factors.emplace_back(divisor_L(m, i));
    Integrator integ;
    return integ.integral(m, factors);
}

}  // namespace eulab
