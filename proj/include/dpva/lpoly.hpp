#pragma once

#include <string>
#include <vector>

#include "dpva/scalar.hpp"

namespace dpva {

// Dense polynomial in lambda with coefficients in T (T has is_zero, +=, -=, *= Scalar).
template <class T>
class LPoly {
public:
    LPoly() = default;
    explicit LPoly(T c0) {
        c_.push_back(std::move(c0));
        trim();
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }

    const T& at(int n) const {
        static const T zero{};
        return n >= 0 && n < static_cast<int>(c_.size()) ? c_[n] : zero;
    }
    // grows as needed; call trim() after writes
    T& mut(int n) {
        if (n >= static_cast<int>(c_.size())) c_.resize(n + 1);
        return c_[n];
    }
    void add(int n, const T& v) {
        if (v.is_zero()) return;
        mut(n) += v;
        trim();
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    const std::vector<T>& coeffs() const { return c_; }

    LPoly& operator+=(const LPoly& o) {
        for (int n = 0; n <= o.degree(); ++n)
            if (!o.c_[n].is_zero()) mut(n) += o.c_[n];
        trim();
        return *this;
    }
    LPoly& operator-=(const LPoly& o) {
        for (int n = 0; n <= o.degree(); ++n)
            if (!o.c_[n].is_zero()) mut(n) -= o.c_[n];
        trim();
        return *this;
    }
    LPoly& operator*=(const Scalar& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }
    friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
    friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
    friend LPoly operator-(LPoly a) { return a *= Scalar(-1); }
    friend LPoly operator*(const Scalar& s, LPoly a) { return a *= s; }
    friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }

    // multiply by lambda^k
    LPoly shifted(int k) const {
        LPoly r;
        if (is_zero()) return r;
        r.c_.resize(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        LPoly<U> r;
        for (int n = 0; n <= degree(); ++n) r.mut(n) = f(c_[n]);
        r.trim();
        return r;
    }

private:
    std::vector<T> c_;
};

// Polynomial in (lambda, mu): coefficient [i][j] of lambda^i mu^j.
template <class T>
class LMPoly {
public:
    const T& at(int i, int j) const {
        static const T zero{};
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        const auto& row = c_[i];
        return j >= 0 && j < static_cast<int>(row.size()) ? row[j] : zero;
    }
    T& mut(int i, int j) {
        if (i >= static_cast<int>(c_.size())) c_.resize(i + 1);
        auto& row = c_[i];
        if (j >= static_cast<int>(row.size())) row.resize(j + 1);
        return row[j];
    }
    void add(int i, int j, const T& v) {
        if (!v.is_zero()) mut(i, j) += v;
    }
    void trim() {
        for (auto& row : c_)
            while (!row.empty() && row.back().is_zero()) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
    }
    bool is_zero() const {
        for (const auto& row : c_)
            for (const auto& v : row)
                if (!v.is_zero()) return false;
        return true;
    }
    int lambda_degree() const { return static_cast<int>(c_.size()) - 1; }
    int mu_degree() const {
        int d = -1;
        for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }
    LMPoly& operator+=(const LMPoly& o) {
        for (int i = 0; i <= o.lambda_degree(); ++i)
            for (int j = 0; j < static_cast<int>(o.c_[i].size()); ++j) add(i, j, o.c_[i][j]);
        trim();
        return *this;
    }
    LMPoly& operator-=(const LMPoly& o) {
        for (int i = 0; i <= o.lambda_degree(); ++i)
            for (int j = 0; j < static_cast<int>(o.c_[i].size()); ++j)
                if (!o.c_[i][j].is_zero()) mut(i, j) -= o.c_[i][j];
        trim();
        return *this;
    }
    friend LMPoly operator-(LMPoly a, const LMPoly& b) { return a -= b; }
    friend bool operator==(const LMPoly& a, const LMPoly& b) {
        LMPoly d = a;
        d -= b;
        return d.is_zero();
    }

private:
    std::vector<std::vector<T>> c_;
};

}  // namespace dpva
