#pragma once

// The contracted algebra g^a = b + n*: diagonal h, strictly upper part on the
// units E_ij (i<j) and the dual part on the units F_ij (i>j). Elements are
// stored as a flat n x n board: entry (i,i) is h_i, entry (i,j) is the
// coefficient of E_ij or F_ij. Products follow
//   (t1 + l1)(t2 + l2) = t1 t2 + t1 l2 + l1 t2,
// i.e. the matrix product with every lower x lower term dropped and the dual
// components projected onto the strictly lower board.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"
#include "roots.hpp"

namespace borelsc {

class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(int n) : n_(n), e_(static_cast<std::size_t>(n * n), FieldElem(0)) {}

    static AlgebraElement identity(int n) {
        AlgebraElement a(n);
        for (int i = 1; i <= n; ++i) a.set_diag(i, FieldElem(1));
        return a;
    }
    static AlgebraElement unit(int n, Root r, FieldElem c = FieldElem(1)) {
        AlgebraElement a(n);
        a.set(r, c);
        return a;
    }
    static AlgebraElement diagonal(const TorusElement& h) {
        AlgebraElement a(static_cast<int>(h.entries.size()));
        for (int i = 1; i <= a.n_; ++i) a.set_diag(i, h.at(i));
        return a;
    }

    int n() const { return n_; }

    FieldElem diag(int i) const { return e_[idx(i, i)]; }
    void set_diag(int i, FieldElem v) { e_[idx(i, i)] = v; }
    /// Coefficient of E_r (positive r) or F_r (negative r).
    FieldElem coef(Root r) const { return e_[idx(r.i, r.j)]; }
    void set(Root r, FieldElem v) { e_[idx(r.i, r.j)] = v; }
    /// Raw board access, 1-based.
    FieldElem at(int i, int j) const { return e_[idx(i, j)]; }
    FieldElem& at(int i, int j) { return e_[idx(i, j)]; }
    const std::vector<FieldElem>& board() const { return e_; }

    TorusElement diagonal_part() const {
        TorusElement h;
        for (int i = 1; i <= n_; ++i) h.entries.push_back(diag(i));
        return h;
    }

    bool in_radical() const {
        for (int i = 1; i <= n_; ++i)
            if (!diag(i).is_zero()) return false;
        return true;
    }
    bool in_borel() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j < i; ++j)
                if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool in_torus() const {
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && !at(i, j).is_zero()) return false;
        return true;
    }
    bool upper_only() const { return in_radical() && in_borel(); }
    bool lower_only() const {
        if (!in_radical()) return false;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool invertible() const {
        for (int i = 1; i <= n_; ++i)
            if (diag(i).is_zero()) return false;
        return true;
    }
    bool unipotent() const {
        for (int i = 1; i <= n_; ++i)
            if (diag(i).value != 1) return false;
        return true;
    }

    /// Off-diagonal support as a sorted root list.
    std::vector<Root> support() const {
        std::vector<Root> s;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j && !at(i, j).is_zero()) s.push_back({i, j});
        return s;
    }

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
    friend auto operator<=>(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(), b.e_.end());
    }

  private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }

    int n_ = 0;
    std::vector<FieldElem> e_;
};

/// 1 + X with X in the radical.
class GroupElementU {
  public:
    explicit GroupElementU(AlgebraElement a) : a_(std::move(a)) {
        if (!a_.unipotent()) throw DomainError("element of U^a must have identity diagonal");
    }
    const AlgebraElement& element() const { return a_; }
    friend bool operator==(const GroupElementU&, const GroupElementU&) = default;

  private:
    AlgebraElement a_;
};

/// Invertible element of g^a.
class GroupElementG {
  public:
    explicit GroupElementG(AlgebraElement a) : a_(std::move(a)) {
        if (!a_.invertible()) throw DomainError("element of G^a must have nonzero diagonal");
    }
    GroupElementG(const GroupElementU& u) : a_(u.element()) {}  // NOLINT: U^a is a subgroup
    const AlgebraElement& element() const { return a_; }
    friend bool operator==(const GroupElementG&, const GroupElementG&) = default;

  private:
    AlgebraElement a_;
};

/// Linear functional on the radical, Lambda(Y) = (dual_rep, Y).
struct Functional {
    AlgebraElement dual_rep;
    friend bool operator==(const Functional&, const Functional&) = default;
};

enum class Side { left, right };

/// The algebra g^a for fixed (n, q).
class ContractedAlgebra {
  public:
    ContractedAlgebra(int n, std::uint32_t q) : n_(n), f_(q) {
        if (n < 1 || n > 16) throw DomainError("board size must satisfy 1 <= n <= 16");
    }

    int n() const { return n_; }
    const FieldSpec& field() const { return f_; }
    std::uint32_t q() const { return f_.q(); }

    AlgebraElement zero() const { return AlgebraElement(n_); }
    AlgebraElement one() const { return AlgebraElement::identity(n_); }
    AlgebraElement unit(Root r, FieldElem c = FieldElem(1)) const {
        check_root(r);
        return AlgebraElement::unit(n_, r, c);
    }

    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const {
        check(a), check(b);
        AlgebraElement c(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) c.at(i, j) = f_.add(a.at(i, j), b.at(i, j));
        return c;
    }
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const {
        check(a), check(b);
        AlgebraElement c(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) c.at(i, j) = f_.sub(a.at(i, j), b.at(i, j));
        return c;
    }
    AlgebraElement scale(FieldElem s, const AlgebraElement& a) const {
        check(a);
        AlgebraElement c(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) c.at(i, j) = f_.mul(s, a.at(i, j));
        return c;
    }

    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const {
        check(a), check(b);
        const std::uint64_t q = f_.q();
        const auto& x = a.board();
        const auto& y = b.board();
        AlgebraElement c(n_);
        const int n = n_;
        for (int i = 0; i < n; ++i) {
            for (int m = 0; m < n; ++m) {
                std::uint64_t s = 0;
                if (i <= m) {
                    for (int j = i; j <= m; ++j) s += std::uint64_t{x[i * n + j].value} * y[j * n + m].value;
                } else {
                    for (int j = 0; j <= m; ++j) s += std::uint64_t{x[i * n + j].value} * y[j * n + m].value;
                    for (int j = i; j < n; ++j) s += std::uint64_t{x[i * n + j].value} * y[j * n + m].value;
                }
                c.at(i + 1, m + 1) = FieldElem(static_cast<std::uint32_t>(s % q));
            }
        }
        return c;
    }

    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) const {
        return mul(mul(a, b), c);
    }

    /// Inverse in g^a: h^{-1} on the diagonal, Neumann series for the unipotent factor.
    AlgebraElement invert(const AlgebraElement& g) const {
        check(g);
        if (!g.invertible()) throw DomainError("element is not invertible (zero on the diagonal)");
        AlgebraElement hinv(n_);
        for (int i = 1; i <= n_; ++i) hinv.set_diag(i, f_.inv(g.diag(i)));
        AlgebraElement u = mul(hinv, g);
        AlgebraElement neg_y = sub(one(), u);  // -(u - 1)
        AlgebraElement sum = one(), term = one();
        for (int k = 0; k <= 2 * n_; ++k) {
            term = mul(term, neg_y);
            if (term == zero()) return mul(sum, hinv);
            sum = add(sum, term);
        }
        throw DomainError("radical part failed to be nilpotent");
    }
    GroupElementG invert(const GroupElementG& g) const { return GroupElementG(invert(g.element())); }
    GroupElementU invert(const GroupElementU& u) const { return GroupElementU(invert(u.element())); }

    GroupElementG mul(const GroupElementG& a, const GroupElementG& b) const {
        return GroupElementG(mul(a.element(), b.element()));
    }
    GroupElementU mul(const GroupElementU& a, const GroupElementU& b) const {
        return GroupElementU(mul(a.element(), b.element()));
    }

    /// (X1, X2) = l2(x1) + l1(x2) with (E_ij, F_km) = delta(j,k) delta(i,m).
    FieldElem bilinear_form(const AlgebraElement& x1, const AlgebraElement& x2) const {
        check(x1), check(x2);
        if (!x1.in_radical() || !x2.in_radical()) throw DomainError("bilinear form is defined on the radical");
        std::uint64_t s = 0;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                s += std::uint64_t{x1.at(i, j).value} * x2.at(j, i).value +
                     std::uint64_t{x2.at(i, j).value} * x1.at(j, i).value;
        return FieldElem(static_cast<std::uint32_t>(s % f_.q()));
    }

    /// X_{D,phi} = sum phi(g+) E_{g+} + sum phi(g-) F_{g-}.
    AlgebraElement build_X(const RookPlacement& d, const Decoration& phi) const {
        check_label(d, phi);
        AlgebraElement x(n_);
        for (std::size_t k = 0; k < d.size(); ++k) x.set(d.roots()[k], phi.values[k]);
        return x;
    }
    GroupElementU build_u(const RookPlacement& d, const Decoration& phi) const {
        return GroupElementU(add(one(), build_X(d, phi)));
    }

    /// Lambda_{D,phi}(Y) = (X_{D^t, phi^t}, Y).
    Functional lambda_functional(const RookPlacement& d, const Decoration& phi) const {
        check_label(d, phi);
        AlgebraElement m(n_);
        for (std::size_t k = 0; k < d.size(); ++k) m.set(d.roots()[k].opposite(), phi.values[k]);
        return {m};
    }
    FieldElem evaluate(const Functional& l, const AlgebraElement& y) const { return bilinear_form(l.dual_rep, y); }

    /// Functional given by its values on the basis units.
    Functional functional_from_values(const std::function<FieldElem(Root)>& value_on_unit) const {
        AlgebraElement m(n_);
        for (auto r : all_roots(n_)) m.set(r.opposite(), value_on_unit(r));
        return {m};
    }

    /// Left: (t.L)(Y) = L(Y t). Right: (L.t)(Y) = L(t Y). Realized on the dual
    /// representative as M -> t M and M -> M t respectively.
    Functional dual_action(const AlgebraElement& t, const Functional& l, Side side) const {
        return {side == Side::left ? mul(t, l.dual_rep) : mul(l.dual_rep, t)};
    }

    // ---- enumeration ----------------------------------------------------

    static constexpr std::uint64_t default_budget = 10'000'000;

    std::uint64_t order_U() const { return ipow(f_.q(), static_cast<unsigned>(n_ * (n_ - 1))); }
    std::uint64_t order_G() const { return ipow(f_.q() - 1, static_cast<unsigned>(n_)) * order_U(); }

    /// Position of a unipotent element in enumerate_U order.
    std::uint64_t index_U(const AlgebraElement& u) const {
        std::uint64_t k = 0;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (i != j) k = k * f_.q() + u.at(i, j).value;
        return k;
    }
    AlgebraElement element_U(std::uint64_t k) const {
        AlgebraElement u = one();
        for (int i = n_; i >= 1; --i)
            for (int j = n_; j >= 1; --j)
                if (i != j) {
                    u.at(i, j) = FieldElem(static_cast<std::uint32_t>(k % f_.q()));
                    k /= f_.q();
                }
        return u;
    }
    /// Diagonal digits (h_i - 1) are the most significant.
    std::uint64_t index_G(const AlgebraElement& g) const {
        std::uint64_t k = 0;
        for (int i = 1; i <= n_; ++i) k = k * (f_.q() - 1) + (g.diag(i).value - 1);
        return k * order_U() + index_U(g);
    }
    AlgebraElement element_G(std::uint64_t k) const {
        AlgebraElement g = element_U(k % order_U());
        k /= order_U();
        for (int i = n_; i >= 1; --i) {
            g.set_diag(i, FieldElem(static_cast<std::uint32_t>(k % (f_.q() - 1) + 1)));
            k /= (f_.q() - 1);
        }
        return g;
    }

    void for_each_U(const std::function<void(const AlgebraElement&)>& f,
                    std::uint64_t budget = default_budget) const {
        check_budget(order_U(), budget);
        for (std::uint64_t k = 0; k < order_U(); ++k) f(element_U(k));
    }
    void for_each_G(const std::function<void(const AlgebraElement&)>& f,
                    std::uint64_t budget = default_budget) const {
        check_budget(order_G(), budget);
        for (std::uint64_t k = 0; k < order_G(); ++k) f(element_G(k));
    }
    std::vector<GroupElementU> enumerate_U(std::uint64_t budget = default_budget) const {
        std::vector<GroupElementU> out;
        for_each_U([&](const AlgebraElement& a) { out.emplace_back(a); }, budget);
        return out;
    }
    std::vector<GroupElementG> enumerate_G(std::uint64_t budget = default_budget) const {
        std::vector<GroupElementG> out;
        for_each_G([&](const AlgebraElement& a) { out.emplace_back(a); }, budget);
        return out;
    }

    static void check_budget(std::uint64_t size, std::uint64_t budget) {
        if (size > budget)
            throw BudgetError("enumeration of " + std::to_string(size) + " elements exceeds the budget of " +
                              std::to_string(budget));
    }

    static std::uint64_t ipow(std::uint64_t b, unsigned e) {
        std::uint64_t r = 1;
        for (unsigned k = 0; k < e; ++k) {
            if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
            r *= b;
        }
        return r;
    }

    // ---- text format ----------------------------------------------------

    /// "E i j = v; ...; F i j = v; ...; H = h1,...,hn". E terms first, then F
    /// terms, each in root order; H only when the diagonal is not the identity.
    std::string format(const AlgebraElement& a) const {
        check(a);
        std::string s;
        auto term = [&](const std::string& t) {
            if (!s.empty()) s += "; ";
            s += t;
        };
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 1; i <= n_; ++i)
                for (int j = 1; j <= n_; ++j) {
                    if (i == j || (pass == 0) != (i < j) || a.at(i, j).is_zero()) continue;
                    term(std::string(pass == 0 ? "E " : "F ") + std::to_string(i) + " " + std::to_string(j) +
                         " = " + std::to_string(a.at(i, j).value));
                }
        if (!a.unipotent()) {
            std::string h = "H = ";
            for (int i = 1; i <= n_; ++i) h += (i > 1 ? "," : "") + std::to_string(a.diag(i).value);
            term(h);
        }
        return s;
    }

    AlgebraElement parse(std::string_view text) const;

  private:
    void check(const AlgebraElement& a) const {
        if (a.n() != n_) throw DomainError("element size " + std::to_string(a.n()) + " does not match n = " +
                                           std::to_string(n_));
    }
    void check_root(Root r) const {
        if (!valid_root(r, n_)) throw DomainError("root " + to_string(r) + " is not valid for n = " + std::to_string(n_));
    }
    void check_label(const RookPlacement& d, const Decoration& phi) const {
        if (!d.fits(n_)) throw DomainError("placement does not fit the board");
        check_decoration(d, phi);
    }

    int n_;
    FieldSpec f_;
};

inline AlgebraElement ContractedAlgebra::parse(std::string_view text) const {
    AlgebraElement a = one();
    std::size_t pos = 0;
    bool seen_h = false;
    std::vector<bool> seen(static_cast<std::size_t>(n_ * n_), false);

    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    };
    auto number = [&]() -> std::uint64_t {
        skip_ws();
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
            if (v > (1ull << 32)) throw ParseError("number too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError("expected a number", start);
        return v;
    };
    auto residue = [&]() {
        std::size_t start = (skip_ws(), pos);
        auto v = number();
        if (v >= q()) throw ParseError("coefficient must lie in [0, q)", start);
        return FieldElem(static_cast<std::uint32_t>(v));
    };
    auto index = [&]() {
        std::size_t start = (skip_ws(), pos);
        auto v = number();
        if (v < 1 || v > static_cast<std::uint64_t>(n_)) throw ParseError("index out of range 1..n", start);
        return static_cast<int>(v);
    };

    skip_ws();
    if (pos == text.size()) return a;
    while (true) {
        skip_ws();
        std::size_t term_start = pos;
        if (pos >= text.size()) throw ParseError("expected a term", pos);
        char kind = text[pos++];
        if (kind == 'E' || kind == 'F') {
            int i = index();
            int j = index();
            if (i == j) throw ParseError("root requires i != j", term_start);
            if ((kind == 'E') != (i < j))
                throw ParseError(kind == 'E' ? "E units need i < j" : "F units need i > j", term_start);
            expect('=');
            auto v = residue();
            auto slot = static_cast<std::size_t>((i - 1) * n_ + (j - 1));
            if (seen[slot]) throw ParseError("duplicate term", term_start);
            seen[slot] = true;
            a.at(i, j) = v;
        } else if (kind == 'H') {
            if (seen_h) throw ParseError("duplicate H term", term_start);
            seen_h = true;
            expect('=');
            for (int i = 1; i <= n_; ++i) {
                if (i > 1) expect(',');
                a.set_diag(i, residue());
            }
        } else {
            throw ParseError("expected 'E', 'F' or 'H'", term_start);
        }
        skip_ws();
        if (pos == text.size()) break;
        expect(';');
    }
    return a;
}

}  // namespace borelsc
