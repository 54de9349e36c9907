#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "moebius/rational.hpp"

namespace mg {

// Polynomial in the refinement parameter b with exact rational coefficients,
// stored dense (coeffs[k] is the coefficient of b^k) and normalized so the
// trailing coefficient is nonzero.
class BPoly {
  public:
    BPoly() = default;
    explicit BPoly(const Rat& c) {
        if (c != 0) coeffs_.push_back(c);
    }
    explicit BPoly(long c) : BPoly(Rat(c)) {}
    static BPoly b(unsigned power = 1) {
        BPoly p;
        p.coeffs_.assign(power + 1, Rat(0));
        p.coeffs_[power] = 1;
        return p;
    }
    static BPoly from_coeffs(std::vector<Rat> cs) {
        BPoly p;
        p.coeffs_ = std::move(cs);
        p.normalize();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }

    BPoly& operator+=(const BPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }
    BPoly& operator-=(const BPoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
        for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }
    friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
    friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
    friend BPoly operator*(const BPoly& a, const BPoly& b) {
        if (a.is_zero() || b.is_zero()) return BPoly();
        BPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.normalize();
        return r;
    }
    BPoly& operator*=(const BPoly& o) { return *this = *this * o; }
    BPoly& operator*=(const Rat& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& x : coeffs_) x *= c;
        return *this;
    }
    friend BPoly operator*(BPoly a, const Rat& c) { return a *= c; }
    friend BPoly operator*(const Rat& c, BPoly a) { return a *= c; }
    BPoly& operator/=(const Rat& c) {
        for (auto& x : coeffs_) x /= c;
        return *this;
    }
    friend BPoly operator/(BPoly a, const Rat& c) { return a /= c; }

    bool operator==(const BPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BPoly& o) const { return !(*this == o); }
    bool operator<(const BPoly& o) const {
        if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
        for (size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
        return false;
    }

    Rat eval(const Rat& b) const {
        Rat r(0);
        for (size_t i = coeffs_.size(); i-- > 0;) r = r * b + coeffs_[i];
        return r;
    }

    // "0", "1/2", "b", "1/8 + 1/8 b + 3/8 b^2"
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0)
                s += rat_str(coeffs_[i]);
            else {
                if (coeffs_[i] != 1) s += rat_str(coeffs_[i]) + " ";
                s += (i == 1) ? "b" : "b^" + std::to_string(i);
            }
        }
        return s;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

inline BPoly bpoly_one() { return BPoly(1); }

}  // namespace mg
