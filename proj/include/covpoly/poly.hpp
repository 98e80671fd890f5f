#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "covpoly/errors.hpp"

namespace covpoly {

/// Sparse polynomial in N variables with exact integer coefficients.
/// Terms are kept in ascending lexicographic order of the exponent tuple,
/// which makes every serialized form canonical. Negative exponents are
/// permitted only when the Laurent flag is set.
template <int N>
class SparsePoly {
public:
    using Exponents = std::array<int, N>;
    using TermMap = std::map<Exponents, mpz_class>;

    SparsePoly() = default;
    explicit SparsePoly(bool laurent) : laurent_(laurent) {}

    static SparsePoly zero(bool laurent = false) { return SparsePoly(laurent); }

    static SparsePoly constant(mpz_class c) {
        SparsePoly p;
        p.add_term(Exponents{}, std::move(c));
        return p;
    }

    static SparsePoly monomial(const Exponents& e, mpz_class c = 1, bool laurent = false) {
        SparsePoly p(laurent);
        p.add_term(e, std::move(c));
        return p;
    }

    /// Monomial in a single variable, e.g. variable(0) == x.
    static SparsePoly variable(int var, int exp = 1, bool laurent = false) {
        Exponents e{};
        e[var] = exp;
        return monomial(e, 1, laurent);
    }

    bool laurent() const { return laurent_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const mpz_class& c) {
        if (c == 0) return;
        if (!laurent_) {
            for (int v = 0; v < N; ++v)
                if (e[v] < 0)
                    throw LaurentViolationError("negative exponent in non-Laurent polynomial");
        }
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    mpz_class coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    /// Degree in one variable; empty for the zero polynomial (minus infinity).
    std::optional<int> degree(int var) const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first[var];
        for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }

    std::optional<int> min_exponent(int var) const {
        if (terms_.empty()) return std::nullopt;
        int d = terms_.begin()->first[var];
        for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
        return d;
    }

    /// Terms whose exponent of `var` equals `e`, with that variable zeroed out.
    SparsePoly coefficient_slice(int var, int e) const {
        SparsePoly out(laurent_);
        for (const auto& [exp, c] : terms_) {
            if (exp[var] != e) continue;
            Exponents e2 = exp;
            e2[var] = 0;
            out.add_term(e2, c);
        }
        return out;
    }

    SparsePoly operator-() const {
        SparsePoly out(laurent_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        laurent_ = laurent_ || o.laurent_;
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o) {
        laurent_ = laurent_ || o.laurent_;
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out(a.laurent_ || b.laurent_);
        if (a.is_zero() || b.is_zero()) return out;
        mpz_class v;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                v = ca * cb;
                out.add_term(e, v);
            }
        }
        return out;
    }

    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly& operator*=(const mpz_class& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend SparsePoly operator*(SparsePoly a, const mpz_class& s) { return a *= s; }
    friend SparsePoly operator*(const mpz_class& s, SparsePoly a) { return a *= s; }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    /// p^k by repeated squaring, k >= 0.
    SparsePoly pow(unsigned k) const {
        SparsePoly result = constant(1);
        if (laurent_) result.laurent_ = true;
        SparsePoly base = *this;
        while (k > 0) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k > 0) base *= base;
        }
        return result;
    }

    /// Formal composition: every occurrence of `var` is replaced by `repl`.
    /// Negative exponents of `var` require `repl` to be a single unit-coefficient
    /// monomial, since the result must stay in an integer coefficient ring.
    SparsePoly substitute(int var, const SparsePoly& repl) const {
        std::map<int, SparsePoly> groups;
        for (const auto& [e, c] : terms_) {
            Exponents e2 = e;
            e2[var] = 0;
            auto [it, inserted] = groups.try_emplace(e[var], SparsePoly(laurent_));
            it->second.add_term(e2, c);
        }
        SparsePoly out(laurent_ || repl.laurent_);
        // ascending powers, reusing the previous one
        SparsePoly power = constant(1);
        int power_exp = 0;
        for (const auto& [k, g] : groups) {
            if (k < 0) {
                out += g * inverse_monomial_power(repl, -k);
                continue;
            }
            if (k < power_exp) {  // cannot happen for sorted non-negative keys
                power = repl.pow(static_cast<unsigned>(k));
                power_exp = k;
            }
            while (power_exp < k) {
                power *= repl;
                ++power_exp;
            }
            out += g * power;
        }
        return out;
    }

    /// Partial evaluation at an exact integer, e.g. y := -1.
    SparsePoly evaluate_at(int var, const mpz_class& value) const {
        SparsePoly out(laurent_);
        mpz_class pw, v;
        for (const auto& [e, c] : terms_) {
            int k = e[var];
            if (k < 0) {
                if (value == 0) throw DivisionByZeroError("0 raised to a negative exponent");
                if (value != 1 && value != -1)
                    throw LaurentViolationError("integer evaluation of a negative exponent");
                pw = (value == 1 || k % 2 == 0) ? 1 : -1;
            } else {
                mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(k));
            }
            Exponents e2 = e;
            e2[var] = 0;
            v = c * pw;
            out.add_term(e2, v);
        }
        return out;
    }

    /// Exact evaluation at a rational point.
    mpq_class evaluate(const std::array<mpq_class, N>& point) const {
        mpq_class total = 0;
        for (const auto& [e, c] : terms_) {
            mpq_class term(c);
            for (int v = 0; v < N; ++v) term *= rational_pow(point[v], e[v]);
            total += term;
        }
        return total;
    }

    /// Asserts that no negative exponents remain and returns the plain form.
    /// Used after Laurent-mode identities whose poles must cancel.
    SparsePoly checked_nonneg() const {
        SparsePoly out(false);
        for (const auto& [e, c] : terms_) {
            for (int v = 0; v < N; ++v)
                if (e[v] < 0)
                    throw CancellationError("negative exponents survived a Laurent identity");
            out.terms_.emplace(e, c);
        }
        return out;
    }

    SparsePoly as_laurent() const {
        SparsePoly out = *this;
        out.laurent_ = true;
        return out;
    }

    /// Keep the listed exponent slots, requiring all dropped slots to be zero.
    template <int M>
    SparsePoly<M> project(const std::array<int, M>& keep) const {
        SparsePoly<M> out(laurent_);
        for (const auto& [e, c] : terms_) {
            std::array<int, N> used{};
            std::array<int, M> e2{};
            for (int i = 0; i < M; ++i) {
                e2[i] = e[keep[i]];
                used[keep[i]] = 1;
            }
            for (int v = 0; v < N; ++v)
                if (!used[v] && e[v] != 0)
                    throw MalformedPolynomialError("projection drops a used variable");
            out.add_term(e2, c);
        }
        return out;
    }

    /// Place this polynomial's variables into the given slots of a wider ring.
    template <int M>
    SparsePoly<M> embed(const std::array<int, N>& slots) const {
        SparsePoly<M> out(laurent_);
        for (const auto& [e, c] : terms_) {
            std::array<int, M> e2{};
            for (int v = 0; v < N; ++v) e2[slots[v]] = e[v];
            out.add_term(e2, c);
        }
        return out;
    }

    nlohmann::ordered_json to_json(const std::array<std::string, N>& vars) const {
        nlohmann::ordered_json j;
        j["vars"] = vars;
        j["terms"] = nlohmann::ordered_json::array();
        for (const auto& [e, c] : terms_) {
            nlohmann::ordered_json t;
            t["e"] = e;
            t["c"] = c.get_str();
            j["terms"].push_back(std::move(t));
        }
        return j;
    }

    std::string to_json_string(const std::array<std::string, N>& vars) const {
        return to_json(vars).dump();
    }

    static SparsePoly from_json(const nlohmann::json& j, bool laurent = false) {
        SparsePoly p(laurent);
        for (const auto& t : j.at("terms")) {
            const auto& ev = t.at("e");
            if (ev.size() != N) throw MalformedPolynomialError("exponent arity mismatch");
            Exponents e{};
            for (int i = 0; i < N; ++i) e[i] = ev[i].get<int>();
            p.add_term(e, mpz_class(t.at("c").get<std::string>()));
        }
        return p;
    }

    std::string to_text(const std::array<std::string, N>& vars) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            mpz_class a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
                first = false;
            } else if (a < 0) {
                out += " - ";
                a = -a;
            } else {
                out += " + ";
            }
            std::string mono;
            for (int v = 0; v < N; ++v) {
                if (e[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars[v];
                if (e[v] != 1) mono += "^" + std::to_string(e[v]);
            }
            if (mono.empty()) {
                out += a.get_str();
            } else if (a == 1) {
                out += mono;
            } else {
                out += a.get_str() + "*" + mono;
            }
        }
        return out;
    }

private:
    static mpq_class rational_pow(const mpq_class& base, int e) {
        if (e == 0) return 1;
        bool neg = e < 0;
        unsigned long k = static_cast<unsigned long>(neg ? -static_cast<long>(e) : e);
        if (neg && base == 0) throw DivisionByZeroError("pole at zero in Laurent evaluation");
        mpq_class r;
        mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), k);
        mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), k);
        r.canonicalize();
        if (neg) r = 1 / r;
        return r;
    }

    static SparsePoly inverse_monomial_power(const SparsePoly& repl, int k) {
        if (repl.term_count() != 1)
            throw LaurentViolationError("negative power of a non-monomial substitution");
        const auto& [e, c] = *repl.terms_.begin();
        if (c != 1 && c != -1)
            throw LaurentViolationError("negative power of a non-unit coefficient");
        Exponents e2;
        for (int i = 0; i < N; ++i) e2[i] = -e[i] * k;
        mpz_class cc = (c == 1 || k % 2 == 0) ? 1 : -1;
        return monomial(e2, cc, true);
    }

    TermMap terms_;
    bool laurent_ = false;
};

using UniPoly = SparsePoly<1>;
using BiPoly = SparsePoly<2>;
using TriPoly = SparsePoly<3>;

inline const std::array<std::string, 3> kXYZ = {"x", "y", "z"};
inline const std::array<std::string, 2> kXY = {"x", "y"};
inline const std::array<std::string, 1> kX = {"x"};

}  // namespace covpoly
