#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

#include "binhopf/rational.hpp"
#include "binhopf/tree.hpp"

namespace binhopf {

/// Finitely supported map from basis keys to exact rationals. Zero
/// coefficients are never stored, so equality of combinations is equality of
/// the underlying maps. Iteration follows the key order.
template<class Key>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;

    static LinearCombination basis(Key key, Rational coef = 1)
    {
        LinearCombination out;
        out.add(std::move(key), coef);
        return out;
    }

    void add(const Key& key, const Rational& coef)
    {
        if (coef == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(key, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add(Key&& key, const Rational& coef)
    {
        if (coef == 0)
            return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coef);
            return;
        }
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }

    Rational coefficient(const Key& key) const
    {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    /// Sum of all coefficients.
    Rational mass() const
    {
        Rational out = 0;
        for (const auto& [key, coef] : terms_)
            out += coef;
        return out;
    }

    Rational abs_mass() const
    {
        Rational out = 0;
        for (const auto& [key, coef] : terms_)
            out += coef < 0 ? Rational(-coef) : coef;
        return out;
    }

    LinearCombination& operator+=(const LinearCombination& other)
    {
        for (const auto& [key, coef] : other.terms_)
            add(key, coef);
        return *this;
    }

    LinearCombination& operator-=(const LinearCombination& other)
    {
        for (const auto& [key, coef] : other.terms_)
            add(key, -coef);
        return *this;
    }

    LinearCombination& operator*=(const Rational& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [key, coef] : terms_)
            coef *= c;
        return *this;
    }

    /// Adds c * other without materializing the scaled copy.
    void add_scaled(const LinearCombination& other, const Rational& c)
    {
        if (c == 0)
            return;
        for (const auto& [key, coef] : other.terms_)
            add(key, coef * c);
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
    friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

/// Element of H: combination of forests.
using LinComb = LinearCombination<Forest>;
/// Element of H (x) H.
using Tensor2 = LinearCombination<std::array<Forest, 2>>;
/// Element of H (x) H (x) H.
using Tensor3 = LinearCombination<std::array<Forest, 3>>;
/// Tensor of arbitrary rank, used by the iterated coproduct.
using TensorN = LinearCombination<std::vector<Forest>>;

inline LinComb lc_add(const LinComb& a, const LinComb& b) { return a + b; }
inline LinComb lc_scale(const Rational& c, const LinComb& a) { return c * a; }
inline Rational coefficient_of(const LinComb& a, const Forest& f) { return a.coefficient(f); }

inline LinComb basis(const Forest& f, Rational coef = 1) { return LinComb::basis(f, std::move(coef)); }
inline LinComb basis(const Tree& t, Rational coef = 1) { return LinComb::basis(single(t), std::move(coef)); }
inline LinComb unit() { return LinComb::basis(Forest{}); }

/// Bilinear extension of disjoint union.
inline LinComb lc_multiply(const LinComb& a, const LinComb& b)
{
    LinComb out;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b)
            out.add(disjoint_union(fa, fb), ca * cb);
    return out;
}

inline Tensor2 tensor(const LinComb& a, const LinComb& b)
{
    Tensor2 out;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b)
            out.add({fa, fb}, ca * cb);
    return out;
}

inline Tensor3 tensor3(const LinComb& a, const LinComb& b, const LinComb& c)
{
    Tensor3 out;
    for (const auto& [fa, ca] : a)
        for (const auto& [fb, cb] : b)
            for (const auto& [fc, cc] : c)
                out.add({fa, fb, fc}, ca * cb * cc);
    return out;
}

/// Componentwise product in H (x) H: (a (x) b)(c (x) d) = ac (x) bd.
inline Tensor2 tensor_multiply(const Tensor2& x, const Tensor2& y)
{
    Tensor2 out;
    for (const auto& [kx, cx] : x)
        for (const auto& [ky, cy] : y)
            out.add({disjoint_union(kx[0], ky[0]), disjoint_union(kx[1], ky[1])}, cx * cy);
    return out;
}

/// Applies a linear map, given on basis forests, to the left leg of t. A map
/// into H yields a Tensor2; a map into H (x) H yields a Tensor3.
template<class Op>
auto t2_apply_left(Op&& op, const Tensor2& t)
{
    using Result = std::decay_t<std::invoke_result_t<Op&, const Forest&>>;
    if constexpr (std::is_same_v<Result, LinComb>) {
        Tensor2 out;
        for (const auto& [key, coef] : t)
            for (const auto& [f, c] : op(key[0]))
                out.add({f, key[1]}, coef * c);
        return out;
    } else {
        static_assert(std::is_same_v<Result, Tensor2>, "operator must map into H or H (x) H");
        Tensor3 out;
        for (const auto& [key, coef] : t)
            for (const auto& [k2, c] : op(key[0]))
                out.add({k2[0], k2[1], key[1]}, coef * c);
        return out;
    }
}

template<class Op>
auto t2_apply_right(Op&& op, const Tensor2& t)
{
    using Result = std::decay_t<std::invoke_result_t<Op&, const Forest&>>;
    if constexpr (std::is_same_v<Result, LinComb>) {
        Tensor2 out;
        for (const auto& [key, coef] : t)
            for (const auto& [f, c] : op(key[1]))
                out.add({key[0], f}, coef * c);
        return out;
    } else {
        static_assert(std::is_same_v<Result, Tensor2>, "operator must map into H or H (x) H");
        Tensor3 out;
        for (const auto& [key, coef] : t)
            for (const auto& [k2, c] : op(key[1]))
                out.add({key[0], k2[0], k2[1]}, coef * c);
        return out;
    }
}

/// Extends a map defined on basis forests linearly.
template<class Op>
auto apply_linear(Op&& op, const LinComb& a)
{
    using Result = std::decay_t<std::invoke_result_t<Op&, const Forest&>>;
    Result out;
    for (const auto& [f, c] : a)
        out.add_scaled(op(f), c);
    return out;
}

/// True when every forest in the support has exactly `degree` leaves.
inline bool is_homogeneous(const LinComb& a, std::size_t degree)
{
    for (const auto& [f, c] : a)
        if (f.n_leaves() != degree)
            return false;
    return true;
}

/// "c1 F1 + c2 F2 - c3 F3" in key order; the zero combination prints as "0".
inline std::string to_string(const LinComb& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [f, c] : a) {
        if (first)
            out += to_string(c);
        else
            out += c < 0 ? " - " + to_string(Rational(-c)) : " + " + to_string(c);
        out += ' ';
        out += to_string(f);
        first = false;
    }
    return out;
}

inline std::string to_string(const Tensor2& t)
{
    if (t.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t) {
        if (first)
            out += to_string(c);
        else
            out += c < 0 ? " - " + to_string(Rational(-c)) : " + " + to_string(c);
        out += ' ' + to_string(key[0]) + " ⨂ " + to_string(key[1]);
        first = false;
    }
    return out;
}

} // namespace binhopf
