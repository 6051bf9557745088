#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "eulab/errors.hpp"
#include "eulab/rational.hpp"

namespace eulab {

using Exponents = std::vector<int>;
using Composition = std::vector<int>;

// sparse multivariate polynomial with exact rational coefficients;
// every stored exponent vector has length arity(), zero coefficients are dropped
class MultiPoly {
public:
    explicit MultiPoly(int arity) : arity_(arity) {
        if (arity < 0) throw invalid_parameters_error("negative arity");
    }

    int arity() const { return arity_; }
    bool empty() const { return terms_.empty(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }

    void add_term(const Exponents& exp, const Rat& coeff) {
        if (static_cast<int>(exp.size()) != arity_)
            throw invalid_parameters_error("exponent vector arity mismatch");
        if (coeff == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff(const Exponents& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    static MultiPoly constant(int arity, const Rat& c) {
        MultiPoly p(arity);
        p.add_term(Exponents(arity, 0), c);
        return p;
    }

    static MultiPoly monomial(int arity, const Exponents& exp, const Rat& c) {
        MultiPoly p(arity);
        p.add_term(exp, c);
        return p;
    }

    MultiPoly& operator+=(const MultiPoly& other) {
        if (other.arity_ != arity_) throw invalid_parameters_error("arity mismatch in +");
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly operator+(const MultiPoly& other) const {
        MultiPoly out = *this;
        out += other;
        return out;
    }

    MultiPoly operator*(const MultiPoly& other) const {
        if (other.arity_ != arity_) throw invalid_parameters_error("arity mismatch in *");
        MultiPoly out(arity_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : other.terms_) {
                Exponents e(arity_);
                for (int i = 0; i < arity_; ++i) e[i] = e1[i] + e2[i];
                out.add_term(e, c1 * c2);
            }
        }
        return out;
    }

    MultiPoly operator*(const Rat& s) const {
        MultiPoly out(arity_);
        if (s == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
        return out;
    }

    bool operator==(const MultiPoly& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }

    int total_degree() const {
        int deg = 0;
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int v : e) d += v;
            deg = std::max(deg, d);
        }
        return deg;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_) {
            int d = 0;
            for (int v : e) d += v;
            if (d != degree) return false;
        }
        return true;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != arity_)
            throw invalid_parameters_error("evaluation point arity mismatch");
        Rat out = 0;
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            for (int i = 0; i < arity_; ++i)
                for (int p = 0; p < e[i]; ++p) term *= point[i];
            out += term;
        }
        return out;
    }

    // substitute variable i by the given polynomial, for all variables at once
    MultiPoly substitute(const std::vector<MultiPoly>& images) const {
        if (static_cast<int>(images.size()) != arity_)
            throw invalid_parameters_error("substitution arity mismatch");
        int out_arity = arity_ == 0 ? 0 : images.front().arity();
        MultiPoly out(out_arity);
        for (const auto& [e, c] : terms_) {
            MultiPoly term = MultiPoly::constant(out_arity, c);
            for (int i = 0; i < arity_; ++i)
                for (int p = 0; p < e[i]; ++p) term = term * images[i];
            out += term;
        }
        return out;
    }

private:
    int arity_;
    std::map<Exponents, Rat> terms_;
};

}  // namespace eulab
