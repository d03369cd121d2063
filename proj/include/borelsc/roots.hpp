#pragma once

// Roots (i,j), i != j, of the n x n board, rook placements and their
// decorations, and the shadow sets S(D), S*(D), R(D,D'), R(D,h) that govern
// stabilizers and supercharacter values. All indices are 1-based.

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"

namespace borelsc {

struct Root {
    int i = 0;
    int j = 0;

    constexpr bool positive() const { return i < j; }
    constexpr bool negative() const { return i > j; }
    constexpr Root opposite() const { return {j, i}; }
    constexpr int row() const { return i; }
    constexpr int col() const { return j; }

    friend constexpr bool operator==(Root, Root) = default;
    friend constexpr auto operator<=>(Root, Root) = default;
};

inline bool valid_root(Root r, int n) { return r.i != r.j && r.i >= 1 && r.j >= 1 && r.i <= n && r.j <= n; }

/// Partial addition (i,j)+(j,k) = (i,k); empty when the indices do not chain or i == k.
inline std::optional<Root> root_sum(Root a, Root b) {
    if (a.j != b.i || a.i == b.j) return std::nullopt;
    return Root{a.i, b.j};
}

/// Product of the basis units attached to a and b (E for positive roots, F for
/// negative ones), following the structure relations of the contracted radical:
///   E_ij E_jm = E_im,  F F = 0,  E_ij F_jm = F_im and F_ij E_jm = F_im when i > m.
/// Returns the root of the resulting unit (coefficient is always 1) or nothing.
inline std::optional<Root> basis_product(Root a, Root b) {
    if (a.j != b.i) return std::nullopt;
    if (a.negative() && b.negative()) return std::nullopt;
    Root r{a.i, b.j};
    if (r.i == r.j) return std::nullopt;
    if (a.positive() && b.positive()) return r;
    if (r.i > r.j) return r;
    return std::nullopt;
}

inline std::vector<Root> all_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.push_back({i, j});
    return out;
}

class RookPlacement {
  public:
    RookPlacement() = default;
    explicit RookPlacement(std::vector<Root> roots) : roots_(std::move(roots)) {
        std::sort(roots_.begin(), roots_.end());
        std::set<int> rows, cols;
        for (const auto& r : roots_) {
            if (r.i == r.j || r.i < 1 || r.j < 1) throw DomainError("invalid root in rook placement");
            if (!rows.insert(r.i).second || !cols.insert(r.j).second)
                throw DomainError("two rooks share a row or a column");
        }
    }

    const std::vector<Root>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    bool empty() const { return roots_.empty(); }
    bool contains(Root r) const { return std::binary_search(roots_.begin(), roots_.end(), r); }
    /// Position of r in the sorted root list, or -1.
    int index_of(Root r) const {
        auto it = std::lower_bound(roots_.begin(), roots_.end(), r);
        return (it != roots_.end() && *it == r) ? static_cast<int>(it - roots_.begin()) : -1;
    }
    bool fits(int n) const {
        return std::all_of(roots_.begin(), roots_.end(), [n](Root r) { return valid_root(r, n); });
    }

    std::vector<Root> positive_part() const {
        std::vector<Root> out;
        std::copy_if(roots_.begin(), roots_.end(), std::back_inserter(out), [](Root r) { return r.positive(); });
        return out;
    }
    std::vector<Root> negative_part() const {
        std::vector<Root> out;
        std::copy_if(roots_.begin(), roots_.end(), std::back_inserter(out), [](Root r) { return r.negative(); });
        return out;
    }

    std::set<int> rows() const {
        std::set<int> s;
        for (auto r : roots_) s.insert(r.i);
        return s;
    }
    std::set<int> cols() const {
        std::set<int> s;
        for (auto r : roots_) s.insert(r.j);
        return s;
    }

    RookPlacement transpose() const {
        std::vector<Root> t;
        for (auto r : roots_) t.push_back(r.opposite());
        return RookPlacement(std::move(t));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t k = 0; k < roots_.size(); ++k) {
            if (k) s += ",";
            s += "(" + std::to_string(roots_[k].i) + "," + std::to_string(roots_[k].j) + ")";
        }
        return s + "]";
    }

    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
    friend auto operator<=>(const RookPlacement& a, const RookPlacement& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return std::lexicographical_compare_three_way(a.roots_.begin(), a.roots_.end(), b.roots_.begin(),
                                                      b.roots_.end());
    }

  private:
    std::vector<Root> roots_;
};

/// phi : D -> F_q^*, stored in the order of D.roots().
struct Decoration {
    std::vector<FieldElem> values;

    friend bool operator==(const Decoration&, const Decoration&) = default;
    friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

inline void check_decoration(const RookPlacement& d, const Decoration& phi) {
    if (phi.values.size() != d.size()) throw DomainError("decoration size does not match the placement");
    for (auto v : phi.values)
        if (v.is_zero()) throw DomainError("decoration values must be nonzero");
}

/// Diagonal h = diag(h_1, ..., h_n) with all entries nonzero; index 0 holds h_1.
struct TorusElement {
    std::vector<FieldElem> entries;

    static TorusElement identity(int n) { return {std::vector<FieldElem>(static_cast<std::size_t>(n), FieldElem(1))}; }
    FieldElem at(int i) const { return entries[static_cast<std::size_t>(i - 1)]; }
    bool is_identity() const {
        return std::all_of(entries.begin(), entries.end(), [](FieldElem v) { return v.value == 1; });
    }

    friend bool operator==(const TorusElement&, const TorusElement&) = default;
    friend auto operator<=>(const TorusElement&, const TorusElement&) = default;
};

struct TorusMask {
    int n = 0;
    std::vector<int> free;  // increasing, 1-based

    bool contains(const TorusElement& h) const {
        for (int i = 1; i <= n; ++i)
            if (!std::binary_search(free.begin(), free.end(), i) && h.at(i).value != 1) return false;
        return true;
    }
};

struct SignedRoots {
    std::vector<Root> plus;
    std::vector<Root> minus;

    std::vector<Root> all() const {
        std::vector<Root> out = plus;
        out.insert(out.end(), minus.begin(), minus.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    friend bool operator==(const SignedRoots&, const SignedRoots&) = default;
};

/// S_+(gamma), S_-(gamma).
inline SignedRoots s_set(Root g, int n) {
    SignedRoots s;
    if (g.positive()) {
        for (int k = g.i + 1; k < g.j; ++k) s.plus.push_back({g.i, k});
    } else {
        for (int k = 1; k < g.j; ++k) s.minus.push_back({g.i, k});
        for (int k = g.i + 1; k <= n; ++k) s.plus.push_back({g.i, k});
    }
    return s;
}

/// Image of S(gamma) under (i,k) -> (k, col(gamma)), split by sign.
inline SignedRoots s_star_set(Root g, int n) {
    SignedRoots base = s_set(g, n), s;
    for (const auto& a : base.all()) {
        Root star{a.j, g.j};
        (star.positive() ? s.plus : s.minus).push_back(star);
    }
    std::sort(s.plus.begin(), s.plus.end());
    std::sort(s.minus.begin(), s.minus.end());
    return s;
}

namespace detail {
inline SignedRoots union_over(const RookPlacement& d, int n, SignedRoots (*f)(Root, int)) {
    std::set<Root> plus, minus;
    for (auto g : d.roots()) {
        auto s = f(g, n);
        plus.insert(s.plus.begin(), s.plus.end());
        minus.insert(s.minus.begin(), s.minus.end());
    }
    return {{plus.begin(), plus.end()}, {minus.begin(), minus.end()}};
}
}  // namespace detail

inline SignedRoots s_of_D_signed(const RookPlacement& d, int n) { return detail::union_over(d, n, &s_set); }
inline std::vector<Root> s_of_D(const RookPlacement& d, int n) { return s_of_D_signed(d, n).all(); }
inline std::size_t s_count(const RookPlacement& d, int n) { return s_of_D(d, n).size(); }
inline SignedRoots s_star_of_D_signed(const RookPlacement& d, int n) {
    return detail::union_over(d, n, &s_star_set);
}
inline std::vector<Root> s_star_of_D(const RookPlacement& d, int n) { return s_star_of_D_signed(d, n).all(); }

/// R(D,D'): alpha in S(D) admitting beta in D' whose unit product with alpha is
/// nonzero and lands on a root alpha+beta that again lies in S(D).
inline std::vector<Root> r_set(const RookPlacement& d, const RookPlacement& dp, int n) {
    auto s = s_of_D(d, n);
    std::vector<Root> out;
    for (auto a : s) {
        for (auto b : dp.roots()) {
            auto p = basis_product(a, b);
            if (p && std::binary_search(s.begin(), s.end(), *p)) {
                out.push_back(a);
                break;
            }
        }
    }
    return out;
}
inline std::size_t r_count(const RookPlacement& d, const RookPlacement& dp, int n) { return r_set(d, dp, n).size(); }

/// 1 iff D' avoids S(D) and S*(D).
inline int delta(const RookPlacement& d, const RookPlacement& dp, int n) {
    auto s = s_of_D(d, n);
    auto st = s_star_of_D(d, n);
    for (auto b : dp.roots())
        if (std::binary_search(s.begin(), s.end(), b) || std::binary_search(st.begin(), st.end(), b)) return 0;
    return 1;
}

/// R(D,h) = {(i,j) in S(D) : h_j != 1}.
inline std::vector<Root> r_of_h(const RookPlacement& d, const TorusElement& h, int n) {
    std::vector<Root> out;
    for (auto a : s_of_D(d, n))
        if (h.at(a.j).value != 1) out.push_back(a);
    return out;
}

inline TorusMask torus_mask(const RookPlacement& d, int n) {
    TorusMask m{n, {}};
    auto rows = d.rows(), cols = d.cols();
    for (int i = 1; i <= n; ++i)
        if (!rows.count(i) && !cols.count(i)) m.free.push_back(i);
    return m;
}

/// |H_D| = (q-1)^(number of free indices).
inline std::uint64_t h_d_size(const RookPlacement& d, int n, std::uint32_t q) {
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < torus_mask(d, n).free.size(); ++k) r *= (q - 1);
    return r;
}

/// Every rook placement on the n x n board (no diagonal), ordered by size and
/// then lexicographically on the sorted root list.
inline std::vector<RookPlacement> enumerate_rook_placements(int n, std::optional<int> max_rooks = std::nullopt) {
    if (n < 1) throw DomainError("board size must be at least 1");
    int cap = max_rooks.value_or(n);
    auto roots = all_roots(n);
    std::vector<RookPlacement> out;
    std::vector<Root> cur;
    std::vector<bool> row_used(static_cast<std::size_t>(n + 1)), col_used(static_cast<std::size_t>(n + 1));
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == cap) return;
        for (std::size_t k = start; k < roots.size(); ++k) {
            Root r = roots[k];
            if (row_used[static_cast<std::size_t>(r.i)] || col_used[static_cast<std::size_t>(r.j)]) continue;
            row_used[static_cast<std::size_t>(r.i)] = col_used[static_cast<std::size_t>(r.j)] = true;
            cur.push_back(r);
            rec(k + 1);
            cur.pop_back();
            row_used[static_cast<std::size_t>(r.i)] = col_used[static_cast<std::size_t>(r.j)] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// All (q-1)^|D| decorations, odometer order with the first root varying slowest.
inline std::vector<Decoration> enumerate_decorations(const RookPlacement& d, std::uint32_t q) {
    std::vector<Decoration> out;
    Decoration cur{std::vector<FieldElem>(d.size(), FieldElem(1))};
    for (bool more = true; more;) {
        out.push_back(cur);
        more = false;
        for (std::size_t k = d.size(); k-- > 0;) {
            if (cur.values[k].value + 1 < q) {
                ++cur.values[k].value;
                more = true;
                break;
            }
            cur.values[k] = FieldElem(1);
        }
    }
    return out;
}

// ---- text forms -------------------------------------------------------

inline std::string to_string(Root r) { return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")"; }

/// Parses "i,j" (parentheses optional).
inline Root parse_root(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    auto comma = s.find(',');
    if (comma == std::string::npos) throw DomainError("root must look like i,j");
    try {
        std::size_t p1 = 0, p2 = 0;
        int i = std::stoi(s.substr(0, comma), &p1);
        int j = std::stoi(s.substr(comma + 1), &p2);
        if (p1 != comma || p2 != s.size() - comma - 1) throw DomainError("root must look like i,j");
        if (i == j) throw DomainError("root requires i != j");
        return {i, j};
    } catch (const std::invalid_argument&) {
        throw DomainError("root must look like i,j");
    } catch (const std::out_of_range&) {
        throw DomainError("root index out of range");
    }
}

/// Parses "[(2,6),(5,3)]".
inline RookPlacement parse_placement(std::string_view text) {
    std::vector<Root> roots;
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string_view::npos) {
        auto close = text.find(')', pos);
        if (close == std::string_view::npos) throw DomainError("unbalanced parenthesis in placement");
        roots.push_back(parse_root(text.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
    }
    return RookPlacement(std::move(roots));
}

}  // namespace borelsc
