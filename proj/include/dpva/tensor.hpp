#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpva/scalar.hpp"
#include "dpva/word.hpp"

namespace dpva {

// Sparse element of A^{(x)N} over a path algebra; N = 1 is A itself.
template <std::size_t N>
class Tensor {
public:
    using Key = std::array<Word, N>;
    using Map = std::map<Key, Scalar>;

    Tensor() = default;
    explicit Tensor(QuiverPtr q) : q_(std::move(q)) {}

    const QuiverPtr& quiver() const { return q_; }
    void set_quiver(QuiverPtr q) { q_ = std::move(q); }
    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    // key must already be in normal form
    void add(const Key& k, const Scalar& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = t_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) t_.erase(it);
        }
    }
    void add(Key&& k, const Scalar& c) {
        if (sgn(c) == 0) return;
        auto [it, fresh] = t_.try_emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (sgn(it->second) == 0) t_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& o) {
        if (!q_) q_ = o.q_;
        for (const auto& [k, c] : o.t_) add(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        if (!q_) q_ = o.q_;
        for (const auto& [k, c] : o.t_) add(k, -c);
        return *this;
    }
    Tensor& operator*=(const Scalar& s) {
        if (sgn(s) == 0) {
            t_.clear();
            return *this;
        }
        for (auto& kv : t_) kv.second *= s;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator-(Tensor a) { return a *= Scalar(-1); }
    friend Tensor operator*(const Scalar& s, Tensor a) { return a *= s; }
    friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.t_ == b.t_; }

private:
    QuiverPtr q_;
    Map t_;
};

using NCPoly = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

// builders
NCPoly nc_word(QuiverPtr q, const Word& w, const Scalar& c = Scalar(1));
NCPoly nc_letter(QuiverPtr q, Letter l, const Scalar& c = Scalar(1));
NCPoly nc_idem(QuiverPtr q, int vertex);
NCPoly nc_one(QuiverPtr q);  // sum of all e_s
NCPoly nc_scalar(QuiverPtr q, const Scalar& c);
Tensor2 t2_pure(QuiverPtr q, const Word& a, const Word& b, const Scalar& c = Scalar(1));
Tensor2 t2_pure(const NCPoly& a, const NCPoly& b);  // a (x) b
Tensor3 t3_pure(const NCPoly& a, const NCPoly& b, const NCPoly& c);

template <std::size_t N>
Tensor<N> rehome(const Tensor<N>& t, QuiverPtr q) {
    Tensor<N> r(std::move(q));
    for (const auto& [k, c] : t.terms()) r.add(k, c);
    return r;
}

struct RawTerm {
    Scalar coeff;
    std::vector<Token> word;
};

NCPoly nc_normalize(QuiverPtr q, const std::vector<RawTerm>& raw);
NCPoly nc_mul(const NCPoly& p, const NCPoly& q);
inline NCPoly operator*(const NCPoly& p, const NCPoly& q) { return nc_mul(p, q); }

// k-fold jet derivation; zero derivation on non-jet quivers
NCPoly apply_del(const NCPoly& p, int k = 1);
Word del_shift(const Word& w, std::size_t pos, int by = 1);

enum class ActMode { Outer, Inner };
Tensor2 t2_act(const NCPoly& a, const Tensor2& d, const NCPoly& b, ActMode mode);
Tensor2 t2_act_left(const NCPoly& a, const Tensor2& d, ActMode mode);
Tensor2 t2_act_right(const Tensor2& d, const NCPoly& b, ActMode mode);

Tensor2 t2_sigma(const Tensor2& d);
Tensor3 t3_sigma(const Tensor3& t);

enum class DelSide { L, R, Full };
Tensor2 t2_del(const Tensor2& d, DelSide side, int k = 1);
Tensor3 t3_del(const Tensor3& t, int k = 1);  // full derivation on every slot

Tensor3 t2_otimes1(const NCPoly& a, const Tensor2& d);  // d' (x) a (x) d''

enum class Twist { Plain, Sigma };
NCPoly t2_fuse(const Tensor2& d, Twist twist);

// tensor with one more slot: t (x) p  or  p (x) t
Tensor3 t2_append(const Tensor2& t, const NCPoly& p);
Tensor3 t2_prepend(const NCPoly& p, const Tensor2& t);

// the quiver of whichever operand carries one
const QuiverPtr& pick_quiver(const QuiverPtr& a, const QuiverPtr& b);

// DSL-style text (re-parseable): "c * w (x) w + ..."
template <std::size_t N>
std::string tensor_str(const Tensor<N>& t);
extern template std::string tensor_str<1>(const Tensor<1>&);
extern template std::string tensor_str<2>(const Tensor<2>&);
extern template std::string tensor_str<3>(const Tensor<3>&);

}  // namespace dpva
