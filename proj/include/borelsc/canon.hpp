#pragma once

// Canonical orbit labels.
//
// U^a superclasses: the orbit 1 + U X U of u = 1 + X contains exactly one
// X_{D,phi}. It is reached by André pivoting on the upper part, clearing the
// dual entries that x_+ n* + n* x_+ absorbs, and André pivoting on what is left
// of the dual part with multipliers that fix x_+.
//
// G^a superclasses: the orbit of g under Y -> t A Y B^{-1} t^{-1}, Y = g - 1.
// The diagonal h is invariant; units in a row or column with h_i != 1 are
// cleared degree by degree, the remaining board carries a U^a label, and the
// decoration is normalized under the torus.

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "roots.hpp"

namespace borelsc {

struct Move {
    enum class Kind { left, right, torus };
    Kind kind;
    AlgebraElement multiplier;  // for torus moves: the diagonal t
};

/// Replaying on the working element (u - 1 or g - 1) reproduces the canonical element minus 1.
struct ReductionTrace {
    std::vector<Move> moves;

    AlgebraElement replay(const ContractedAlgebra& alg, AlgebraElement w) const {
        for (const auto& m : moves) {
            switch (m.kind) {
                case Move::Kind::left: w = alg.mul(m.multiplier, w); break;
                case Move::Kind::right: w = alg.mul(w, m.multiplier); break;
                case Move::Kind::torus: w = alg.mul(alg.mul(m.multiplier, w), alg.invert(m.multiplier)); break;
            }
        }
        return w;
    }
};

struct SuperclassLabelU {
    RookPlacement D;
    Decoration phi;
    friend bool operator==(const SuperclassLabelU&, const SuperclassLabelU&) = default;
    friend auto operator<=>(const SuperclassLabelU&, const SuperclassLabelU&) = default;
};

struct SuperclassLabelG {
    RookPlacement D;
    Decoration phi;
    TorusElement h;
    friend bool operator==(const SuperclassLabelG&, const SuperclassLabelG&) = default;
    friend auto operator<=>(const SuperclassLabelG&, const SuperclassLabelG&) = default;
};

/// Reads (D, phi) off an element whose off-diagonal support is a rook placement.
inline std::pair<RookPlacement, Decoration> read_rook_form(const AlgebraElement& x) {
    RookPlacement d(x.support());
    Decoration phi;
    for (auto r : d.roots()) phi.values.push_back(x.coef(r));
    return {d, phi};
}

/// (D^t, phi^t) with phi^t(g) = phi(g^t), re-aligned to the sorted order of D^t.
inline std::pair<RookPlacement, Decoration> transpose_label(const RookPlacement& d, const Decoration& phi) {
    RookPlacement t = d.transpose();
    Decoration pt{std::vector<FieldElem>(d.size())};
    for (std::size_t k = 0; k < d.size(); ++k)
        pt.values[static_cast<std::size_t>(t.index_of(d.roots()[k].opposite()))] = phi.values[k];
    return {t, pt};
}

namespace detail {

enum class Part { upper, lower };

class Reducer {
  public:
    Reducer(const ContractedAlgebra& alg, AlgebraElement w, ReductionTrace* trace)
        : alg_(alg), f_(alg.field()), w_(std::move(w)), trace_(trace) {}

    const AlgebraElement& element() const { return w_; }
    AlgebraElement& element() { return w_; }

    void left(const AlgebraElement& m) {
        w_ = alg_.mul(m, w_);
        if (trace_) trace_->moves.push_back({Move::Kind::left, m});
    }
    void right(const AlgebraElement& m) {
        w_ = alg_.mul(w_, m);
        if (trace_) trace_->moves.push_back({Move::Kind::right, m});
    }
    void torus(const TorusElement& t) {
        AlgebraElement tm = AlgebraElement::diagonal(t);
        w_ = alg_.mul(alg_.mul(tm, w_), alg_.invert(tm));
        if (trace_) trace_->moves.push_back({Move::Kind::torus, tm});
    }
    AlgebraElement one_plus(Root r, FieldElem c) const {
        AlgebraElement m = alg_.one();
        m.set(r, c);
        return m;
    }

    /// Pivot rule: columns left to right, bottom-most nonzero entry of the part
    /// in that column; clear above it by row moves and to its right by column
    /// moves. Row move: left multiplication by 1 + c E_{ki}, k < i. Column move:
    /// right multiplication by 1 + c E_{jl}, j < l.
    void pivot_reduce(Part part, const std::function<void()>& after_move = {}) {
        const int n = alg_.n();
        auto in_part = [part](int i, int j) { return part == Part::upper ? i < j : i > j; };
        for (int j = 1; j <= n; ++j) {
            int piv = 0;
            for (int i = n; i >= 1; --i)
                if (in_part(i, j) && !w_.at(i, j).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == 0) continue;
            for (int k = 1; k < piv; ++k) {
                if (!in_part(k, j) || w_.at(k, j).is_zero()) continue;
                FieldElem c = f_.neg(f_.div(w_.at(k, j), w_.at(piv, j)));
                left(one_plus({k, piv}, c));
                if (after_move) after_move();
            }
            for (int l = j + 1; l <= n; ++l) {
                if (!in_part(piv, l) || w_.at(piv, l).is_zero()) continue;
                FieldElem c = f_.neg(f_.div(w_.at(piv, l), w_.at(piv, j)));
                right(one_plus({j, l}, c));
                if (after_move) after_move();
            }
        }
    }

    /// Removes dual entries F_km with k in row(D_+) (right move by 1 + nu, using
    /// E_{kc} F_{cm} = F_{km}) and then those with m in col(D_+) (left move, using
    /// F_{kr} E_{rm} = F_{km}). The upper part is assumed to be in rook form.
    void clear_absorbed_dual() {
        const int n = alg_.n();
        std::map<int, int> rook_col_of_row, rook_row_of_col;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!w_.at(i, j).is_zero()) rook_col_of_row[i] = j, rook_row_of_col[j] = i;
        for (int k = 1; k <= n; ++k) {
            auto it = rook_col_of_row.find(k);
            if (it == rook_col_of_row.end()) continue;
            int c = it->second;
            for (int m = 1; m < k; ++m) {
                if (w_.at(k, m).is_zero()) continue;
                FieldElem a = f_.neg(f_.div(w_.at(k, m), w_.at(k, c)));
                right(one_plus({c, m}, a));
            }
        }
        for (int m = 1; m <= n; ++m) {
            auto it = rook_row_of_col.find(m);
            if (it == rook_row_of_col.end()) continue;
            int r = it->second;
            for (int k = m + 1; k <= n; ++k) {
                if (w_.at(k, m).is_zero()) continue;
                FieldElem a = f_.neg(f_.div(w_.at(k, m), w_.at(r, m)));
                left(one_plus({k, r}, a));
            }
        }
    }

    /// True when no dual entry sits in a row or column of the upper rooks.
    bool absorbed_dual_clear() const {
        const int n = alg_.n();
        std::set<int> rows, cols;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (!w_.at(i, j).is_zero()) rows.insert(i), cols.insert(j);
        for (int k = 1; k <= n; ++k)
            for (int m = 1; m < k; ++m)
                if (!w_.at(k, m).is_zero() && (rows.count(k) || cols.count(m))) return false;
        return true;
    }

    /// Full U^a reduction of a radical working element.
    void reduce_unipotent() {
        pivot_reduce(Part::upper);
        clear_absorbed_dual();
        pivot_reduce(Part::lower, [this] { clear_absorbed_dual(); });
        clear_absorbed_dual();
        if (!absorbed_dual_clear()) throw std::logic_error("superclass reduction left absorbed dual entries");
    }

  private:
    const ContractedAlgebra& alg_;
    const FieldSpec& f_;
    AlgebraElement w_;
    ReductionTrace* trace_;
};

inline AlgebraElement radical_part(const ContractedAlgebra& alg, const AlgebraElement& g) {
    AlgebraElement x = g;
    for (int i = 1; i <= alg.n(); ++i) x.set_diag(i, FieldElem(0));
    return x;
}

}  // namespace detail

struct AndreResult {
    RookPlacement D;
    Decoration phi;
    ReductionTrace trace;
};

/// Rook form X_{D_+,phi_+} in the (N x N)-orbit of a strictly upper x.
inline AndreResult andre_reduce_upper(const ContractedAlgebra& alg, const AlgebraElement& x) {
    if (!x.upper_only()) throw DomainError("andre_reduce_upper expects a strictly upper element");
    AndreResult r;
    detail::Reducer red(alg, x, &r.trace);
    red.pivot_reduce(detail::Part::upper);
    std::tie(r.D, r.phi) = read_rook_form(red.element());
    return r;
}

/// Rook form X_{D_-,phi_-} in the (N x N)-orbit of a dual element.
inline AndreResult andre_reduce_lower(const ContractedAlgebra& alg, const AlgebraElement& l) {
    if (!l.lower_only()) throw DomainError("andre_reduce_lower expects an element of n*");
    AndreResult r;
    detail::Reducer red(alg, l, &r.trace);
    red.pivot_reduce(detail::Part::lower);
    std::tie(r.D, r.phi) = read_rook_form(red.element());
    return r;
}

inline std::pair<SuperclassLabelU, ReductionTrace> superclass_label_U(const ContractedAlgebra& alg,
                                                                      const GroupElementU& u) {
    ReductionTrace trace;
    detail::Reducer red(alg, alg.sub(u.element(), alg.one()), &trace);
    red.reduce_unipotent();
    auto [d, phi] = read_rook_form(red.element());
    return {{d, phi}, trace};
}

inline SuperclassLabelU label_U(const ContractedAlgebra& alg, const AlgebraElement& u) {
    return superclass_label_U(alg, GroupElementU(u)).first;
}

/// Torus normalization t.phi(i,j) = t_i phi(i,j) t_j^{-1}: the roots of D form
/// directed paths and cycles on the indices; paths become all 1, a cycle keeps
/// the product of its values on its lexicographically last root.
/// Returns the canonical decoration and a t realizing it.
inline std::pair<Decoration, TorusElement> h_canonicalize(const FieldSpec& f, int n, const RookPlacement& d,
                                                          const Decoration& phi) {
    check_decoration(d, phi);
    std::map<int, std::size_t> out_edge, in_edge;  // vertex -> index into d.roots()
    for (std::size_t k = 0; k < d.size(); ++k) {
        out_edge[d.roots()[k].i] = k;
        in_edge[d.roots()[k].j] = k;
    }
    TorusElement t = TorusElement::identity(n);
    std::vector<bool> done(static_cast<std::size_t>(n + 1), false);
    auto tv = [&](int v) -> FieldElem& { return t.entries[static_cast<std::size_t>(v - 1)]; };
    // walk from start following outgoing edges, making each traversed edge 1
    auto walk = [&](int start, std::optional<std::size_t> skip) {
        int v = start;
        done[static_cast<std::size_t>(v)] = true;
        while (true) {
            auto it = out_edge.find(v);
            if (it == out_edge.end() || (skip && it->second == *skip)) break;
            int w = d.roots()[it->second].j;
            if (done[static_cast<std::size_t>(w)]) break;
            tv(w) = f.mul(tv(v), phi.values[it->second]);
            done[static_cast<std::size_t>(w)] = true;
            v = w;
        }
    };
    for (int v = 1; v <= n; ++v)
        if (!in_edge.count(v) && out_edge.count(v)) walk(v, std::nullopt);
    for (int v = 1; v <= n; ++v) {
        if (done[static_cast<std::size_t>(v)] || !out_edge.count(v)) continue;
        // v lies on a cycle; find its lexicographically last root
        std::size_t last = out_edge[v];
        for (int w = d.roots()[out_edge[v]].j; w != v; w = d.roots()[out_edge[w]].j)
            last = std::max(last, out_edge[w]);
        walk(d.roots()[last].j, last);
    }
    Decoration canon{std::vector<FieldElem>(d.size())};
    for (std::size_t k = 0; k < d.size(); ++k) {
        Root r = d.roots()[k];
        canon.values[k] = f.mul(f.mul(tv(r.i), phi.values[k]), f.inv(tv(r.j)));
    }
    return {canon, t};
}

inline Decoration h_canonical_phi(const FieldSpec& f, int n, const RookPlacement& d, const Decoration& phi) {
    return h_canonicalize(f, n, d, phi).first;
}

/// t.phi for a torus element t.
inline Decoration torus_act(const FieldSpec& f, const TorusElement& t, const RookPlacement& d, const Decoration& phi) {
    Decoration out = phi;
    for (std::size_t k = 0; k < d.size(); ++k) {
        Root r = d.roots()[k];
        out.values[k] = f.mul(f.mul(t.at(r.i), phi.values[k]), f.inv(t.at(r.j)));
    }
    return out;
}

/// Total degree: deg E_ij = j - i, deg F_ij = n - (i - j); nonzero unit products add degrees.
inline int unit_degree(Root r, int n) { return r.positive() ? r.j - r.i : n - (r.i - r.j); }

inline std::pair<SuperclassLabelG, ReductionTrace> superclass_label_G(const ContractedAlgebra& alg,
                                                                      const GroupElementG& g) {
    const int n = alg.n();
    const FieldSpec& f = alg.field();
    ReductionTrace trace;
    detail::Reducer red(alg, alg.sub(g.element(), alg.one()), &trace);
    TorusElement h = g.element().diagonal_part();
    auto shift = [&](int i) { return f.sub(h.at(i), FieldElem(1)); };

    // Phase A: clear units touching an index with h_i != 1, lowest degree first.
    std::vector<Root> order = all_roots(n);
    std::stable_sort(order.begin(), order.end(),
                     [n](Root a, Root b) { return unit_degree(a, n) < unit_degree(b, n); });
    for (Root a : order) {
        FieldElem v = red.element().coef(a);
        if (v.is_zero()) continue;
        if (!shift(a.j).is_zero()) {
            red.left(red.one_plus(a, f.neg(f.div(v, shift(a.j)))));
        } else if (!shift(a.i).is_zero()) {
            red.right(red.one_plus(a, f.neg(f.div(v, shift(a.i)))));
        }
    }

    // Phase B: U^a reduction on the board of indices with h_i = 1. Every
    // multiplier it uses is supported there, so it commutes past h - 1.
    detail::Reducer sub(alg, detail::radical_part(alg, red.element()), &trace);
    sub.reduce_unipotent();
    AlgebraElement y = sub.element();
    for (int i = 1; i <= n; ++i) y.set_diag(i, shift(i));

    // Phase C: torus normalization of phi.
    auto [d, phi] = read_rook_form(detail::radical_part(alg, y));
    auto [canon, t] = h_canonicalize(f, n, d, phi);
    if (!t.is_identity()) trace.moves.push_back({Move::Kind::torus, AlgebraElement::diagonal(t)});
    if (!torus_mask(d, n).contains(h)) throw std::logic_error("G^a reduction produced h outside H_D");
    return {{d, canon, h}, trace};
}

inline SuperclassLabelG label_G(const ContractedAlgebra& alg, const AlgebraElement& g) {
    return superclass_label_G(alg, GroupElementG(g)).first;
}

/// g_b = h u_{D,phi}.
inline AlgebraElement representative_G(const ContractedAlgebra& alg, const SuperclassLabelG& b) {
    return alg.mul(AlgebraElement::diagonal(b.h), alg.build_u(b.D, b.phi).element());
}

/// Label (D, phi) of the two-sided orbit of a functional: the orbit of Lambda
/// corresponds to the orbit A M B of its dual representative M, and
/// Lambda_{D,phi} has representative X_{D^t, phi^t}.
inline std::pair<RookPlacement, Decoration> functional_orbit_label(const ContractedAlgebra& alg, const Functional& l) {
    if (!l.dual_rep.in_radical()) throw DomainError("functional representative must lie in the radical");
    auto lab = label_U(alg, alg.add(alg.one(), l.dual_rep));
    return transpose_label(lab.D, lab.phi);
}

}  // namespace borelsc
