#pragma once

#include <map>
#include <string>

// Integer Laurent polynomials in one variable, just enough for graded Euler
// characteristics and the torus-knot cross-checks in the tests.

namespace tw {

class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long long constant) {
        if (constant != 0) c_[0] = constant;
    }
    static Laurent monomial(long long coeff, int exp) {
        Laurent p;
        if (coeff != 0) p.c_[exp] = coeff;
        return p;
    }

    void add(long long coeff, int exp) {
        if (coeff == 0) return;
        auto it = c_.find(exp);
        if (it == c_.end()) {
            c_[exp] = coeff;
        } else if ((it->second += coeff) == 0) {
            c_.erase(it);
        }
    }

    long long coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? 0 : it->second;
    }

    const std::map<int, long long>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (auto [e, k] : o.c_) r.add(k, e);
        return r;
    }
    Laurent operator-(const Laurent& o) const {
        Laurent r = *this;
        for (auto [e, k] : o.c_) r.add(-k, e);
        return r;
    }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto [e1, k1] : c_)
            for (auto [e2, k2] : o.c_) r.add(k1 * k2, e1 + e2);
        return r;
    }

    // exact division; throws if the remainder is nonzero
    Laurent divide_exact(const Laurent& divisor) const;

    Laurent reciprocal() const {  // x -> 1/x
        Laurent r;
        for (auto [e, k] : c_) r.add(k, -e);
        return r;
    }

    long long eval_at_one() const {
        long long s = 0;
        for (auto [e, k] : c_) s += k;
        return s;
    }

    bool palindromic() const { return *this == reciprocal(); }

    bool operator==(const Laurent& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "x") const;

private:
    std::map<int, long long> c_;  // exponent -> coefficient, no zeros
};

}  // namespace tw
