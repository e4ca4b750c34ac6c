#include "toric/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace toric {

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
    int start = kind == ElimFirstVar ? 1 : 0;
    if (kind == ElimFirstVar && a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
    long da = 0, db = 0;
    for (size_t i = size_t(start); i < a.size(); ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = int(a.size()) - 1; i >= start; --i)
        if (a[size_t(i)] != b[size_t(i)]) return a[size_t(i)] > b[size_t(i)] ? -1 : 1;
    return 0;
}

int PolyQ::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms)
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

PolyQ poly_from_terms(std::vector<std::pair<Mono, Rat>> terms, const MonomialOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return ord.less(a.first, b.first); });
    PolyQ p;
    for (auto& [m, c] : terms) {
        if (c == 0) continue;
        if (!p.terms.empty() && p.terms.back().first == m) {
            p.terms.back().second += c;
            if (p.terms.back().second == 0) p.terms.pop_back();
        } else {
            p.terms.emplace_back(std::move(m), std::move(c));
        }
    }
    return p;
}

PolyQ poly_constant(int nvars, const Rat& c) {
    PolyQ p;
    if (c != 0) p.terms.emplace_back(Mono(size_t(nvars), 0), c);
    return p;
}

bool mono_divides(const Mono& d, const Mono& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Mono mono_sub(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Mono mono_add(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Merge of two term lists sorted ascending; b is scaled by c and shifted by m
// (monomial orders are translation-invariant, so the shift preserves order).
static PolyQ merge_scaled(const PolyQ& a, const PolyQ& b, const Mono& m, const Rat& c,
                          const MonomialOrder& ord) {
    PolyQ out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size()) {
            out.terms.push_back(a.terms[i++]);
            continue;
        }
        Mono bm = mono_add(b.terms[j].first, m);
        if (i == a.terms.size()) {
            Rat v = b.terms[j].second * c;
            if (v != 0) out.terms.emplace_back(std::move(bm), std::move(v));
            ++j;
            continue;
        }
        int k = ord.cmp(a.terms[i].first, bm);
        if (k < 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (k > 0) {
            Rat v = b.terms[j].second * c;
            if (v != 0) out.terms.emplace_back(std::move(bm), std::move(v));
            ++j;
        } else {
            Rat v = a.terms[i].second + b.terms[j].second * c;
            if (v != 0) out.terms.emplace_back(std::move(bm), std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

PolyQ add(const PolyQ& a, const PolyQ& b, const MonomialOrder& ord) {
    if (b.is_zero()) return a;
    return merge_scaled(a, b, Mono(b.terms[0].first.size(), 0), Rat(1), ord);
}

PolyQ sub(const PolyQ& a, const PolyQ& b, const MonomialOrder& ord) {
    if (b.is_zero()) return a;
    return merge_scaled(a, b, Mono(b.terms[0].first.size(), 0), Rat(-1), ord);
}

PolyQ mul(const PolyQ& a, const PolyQ& b, const MonomialOrder& ord) {
    PolyQ acc;
    for (const auto& [m, c] : a.terms) acc = merge_scaled(acc, b, m, c, ord);
    return acc;
}

PolyQ mul_term(const PolyQ& a, const Mono& m, const Rat& c) {
    PolyQ out;
    if (c == 0) return out;
    out.terms.reserve(a.terms.size());
    for (const auto& [am, ac] : a.terms) out.terms.emplace_back(mono_add(am, m), ac * c);
    return out;
}

PolyQ scale(const PolyQ& a, const Rat& c) {
    PolyQ out;
    if (c == 0) return out;
    out.terms = a.terms;
    for (auto& [m, k] : out.terms) k *= c;
    return out;
}

bool equal(const PolyQ& a, const PolyQ& b) { return a.terms == b.terms; }

PolyQ normal_form(const PolyQ& p, const std::vector<PolyQ>& basis, const MonomialOrder& ord,
                  ReductionBudget* budget, std::vector<PolyQ>* quotients) {
    if (quotients) quotients->assign(basis.size(), PolyQ{});
    PolyQ rem;
    PolyQ cur = p;
    while (!cur.is_zero()) {
        const Mono& lead = cur.leading_mono();
        int reducer = -1;
        for (size_t k = 0; k < basis.size(); ++k)
            if (!basis[k].is_zero() && mono_divides(basis[k].leading_mono(), lead)) {
                reducer = int(k);
                break;
            }
        if (reducer < 0) {
            // move the leading term to the remainder
            rem.terms.push_back(cur.terms.back());
            cur.terms.pop_back();
            continue;
        }
        if (budget) budget->spend();
        const PolyQ& g = basis[size_t(reducer)];
        Mono shift = mono_sub(lead, g.leading_mono());
        Rat factor = cur.leading_coeff() / g.leading_coeff();
        cur = merge_scaled(cur, g, shift, -factor, ord);
        if (quotients) {
            PolyQ q;
            q.terms.emplace_back(shift, factor);
            (*quotients)[size_t(reducer)] = add((*quotients)[size_t(reducer)], q, ord);
        }
    }
    std::reverse(rem.terms.begin(), rem.terms.end());
    return rem;
}

namespace {

struct Pair {
    int i, j;
    Mono lcm;
    int sugar;
    int lcm_deg;
};

struct TrackedPoly {
    PolyQ p;
    std::vector<PolyQ> rep;
    int sugar = 0;
};

// min-first comparison: (sugar, lcm degree, lcm, i, j)
bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& ord) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

GroebnerResult buchberger(const std::vector<PolyQ>& gens, const MonomialOrder& ord, long step_cap,
                          bool track_cofactors) {
    GroebnerResult out;
    out.order = ord;
    out.tracked = track_cofactors;
    ReductionBudget budget;
    budget.cap = step_cap;

    std::vector<TrackedPoly> basis;
    auto push_gen = [&](PolyQ p, std::vector<PolyQ> rep) {
        Rat lc = p.leading_coeff();
        p = scale(p, 1 / lc);
        if (track_cofactors)
            for (auto& r : rep) r = scale(r, 1 / lc);
        TrackedPoly t;
        t.sugar = p.total_degree();
        t.p = std::move(p);
        t.rep = std::move(rep);
        basis.push_back(std::move(t));
    };

    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        std::vector<PolyQ> rep;
        if (track_cofactors) {
            rep.assign(gens.size(), PolyQ{});
            rep[i] = poly_constant(int(gens[i].terms[0].first.size()), 1);
        }
        push_gen(gens[i], std::move(rep));
    }

    std::set<std::pair<int, int>> pending;
    std::vector<Pair> queue;
    auto add_pairs_for = [&](int k) {
        for (int i = 0; i < k; ++i) {
            Pair pr;
            pr.i = i;
            pr.j = k;
            pr.lcm = mono_lcm(basis[size_t(i)].p.leading_mono(), basis[size_t(k)].p.leading_mono());
            pr.lcm_deg = std::accumulate(pr.lcm.begin(), pr.lcm.end(), 0);
            int si = basis[size_t(i)].sugar + pr.lcm_deg -
                     std::accumulate(basis[size_t(i)].p.leading_mono().begin(),
                                     basis[size_t(i)].p.leading_mono().end(), 0);
            int sj = basis[size_t(k)].sugar + pr.lcm_deg -
                     std::accumulate(basis[size_t(k)].p.leading_mono().begin(),
                                     basis[size_t(k)].p.leading_mono().end(), 0);
            pr.sugar = std::max(si, sj);
            queue.push_back(std::move(pr));
            pending.insert({i, k});
        }
    };
    for (int k = 0; k < int(basis.size()); ++k) add_pairs_for(k);

    auto still_pending = [&](int a, int b) {
        return pending.count({std::min(a, b), std::max(a, b)}) != 0;
    };

    while (!queue.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < queue.size(); ++k)
            if (pair_before(queue[k], queue[best], ord)) best = k;
        Pair pr = std::move(queue[best]);
        queue.erase(queue.begin() + long(best));
        pending.erase({pr.i, pr.j});
        budget.pairs = ++out.pairs;
        budget.basis_size = long(basis.size());

        const Mono& lti = basis[size_t(pr.i)].p.leading_mono();
        const Mono& ltj = basis[size_t(pr.j)].p.leading_mono();
        // first Buchberger criterion: coprime leading monomials
        if (pr.lcm == mono_add(lti, ltj)) continue;
        // chain criterion
        bool chained = false;
        for (int k = 0; k < int(basis.size()) && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (mono_divides(basis[size_t(k)].p.leading_mono(), pr.lcm) &&
                !still_pending(pr.i, k) && !still_pending(pr.j, k))
                chained = true;
        }
        if (chained) continue;

        Mono si = mono_sub(pr.lcm, lti), sj = mono_sub(pr.lcm, ltj);
        PolyQ s = sub(mul_term(basis[size_t(pr.i)].p, si, Rat(1)),
                      mul_term(basis[size_t(pr.j)].p, sj, Rat(1)), ord);
        std::vector<PolyQ> collected(basis.size());
        std::vector<PolyQ>* quot = track_cofactors ? &collected : nullptr;
        PolyQ r = normal_form(s, [&] {
            std::vector<PolyQ> bs;
            bs.reserve(basis.size());
            for (const auto& t : basis) bs.push_back(t.p);
            return bs;
        }(), ord, &budget, quot);
        out.reductions = budget.used;
        if (r.is_zero()) continue;

        std::vector<PolyQ> rep;
        if (track_cofactors) {
            rep.assign(basis[0].rep.size(), PolyQ{});
            auto acc_rep = [&](const std::vector<PolyQ>& src, const Mono& m, const Rat& c) {
                for (size_t t = 0; t < rep.size(); ++t)
                    if (!src[t].is_zero()) rep[t] = add(rep[t], mul_term(src[t], m, c), ord);
            };
            acc_rep(basis[size_t(pr.i)].rep, si, Rat(1));
            acc_rep(basis[size_t(pr.j)].rep, sj, Rat(-1));
            for (size_t k = 0; k < basis.size(); ++k)
                if (!collected[k].is_zero())
                    for (size_t t = 0; t < rep.size(); ++t)
                        if (!basis[k].rep[t].is_zero())
                            rep[t] = sub(rep[t], mul(collected[k], basis[k].rep[t], ord), ord);
        }
        int sugar = std::max(basis[size_t(pr.i)].sugar +
                                 std::accumulate(si.begin(), si.end(), 0),
                             basis[size_t(pr.j)].sugar + std::accumulate(sj.begin(), sj.end(), 0));
        Rat lc = r.leading_coeff();
        TrackedPoly t;
        t.p = scale(r, 1 / lc);
        if (track_cofactors) {
            for (auto& rp : rep) rp = scale(rp, 1 / lc);
            t.rep = std::move(rep);
        }
        t.sugar = sugar;
        basis.push_back(std::move(t));
        add_pairs_for(int(basis.size()) - 1);
    }

    // interreduce to the unique reduced basis, keeping representations in sync
    std::vector<TrackedPoly> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (!mono_divides(basis[j].p.leading_mono(), basis[i].p.leading_mono())) continue;
            if (basis[j].p.leading_mono() == basis[i].p.leading_mono() && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < reduced.size(); ++i) {
            std::vector<PolyQ> others;
            for (size_t j = 0; j < reduced.size(); ++j)
                if (j != i) others.push_back(reduced[j].p);
            std::vector<PolyQ> collected(others.size());
            std::vector<PolyQ>* quot = track_cofactors ? &collected : nullptr;
            PolyQ r = normal_form(reduced[i].p, others, ord, &budget, quot);
            out.reductions = budget.used;
            if (!equal(r, reduced[i].p)) {
                changed = true;
                if (track_cofactors) {
                    std::vector<PolyQ> rep = reduced[i].rep;
                    size_t oj = 0;
                    for (size_t j = 0; j < reduced.size(); ++j) {
                        if (j == i) continue;
                        if (!collected[oj].is_zero())
                            for (size_t t = 0; t < rep.size(); ++t)
                                if (!reduced[j].rep[t].is_zero())
                                    rep[t] = sub(rep[t], mul(collected[oj], reduced[j].rep[t], ord), ord);
                        ++oj;
                    }
                    reduced[i].rep = std::move(rep);
                }
                if (r.is_zero()) {
                    reduced.erase(reduced.begin() + long(i));
                    changed = true;
                    break;
                }
                Rat lc = r.leading_coeff();
                reduced[i].p = scale(r, 1 / lc);
                if (track_cofactors)
                    for (auto& rp : reduced[i].rep) rp = scale(rp, 1 / lc);
            }
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const TrackedPoly& a, const TrackedPoly& b) {
        return ord.less(a.p.leading_mono(), b.p.leading_mono());
    });
    for (auto& t : reduced) {
        out.basis.push_back(std::move(t.p));
        if (track_cofactors) out.reps.push_back(std::move(t.rep));
    }
    return out;
}

bool is_unit_ideal(const std::vector<PolyQ>& basis) {
    for (const PolyQ& g : basis) {
        bool constant = true;
        for (int e : g.leading_mono())
            if (e != 0) constant = false;
        if (constant && !g.is_zero()) return true;
    }
    return false;
}

bool is_zero_dimensional(const std::vector<PolyQ>& basis, int nvars) {
    if (is_unit_ideal(basis)) return true;
    for (int v = 0; v < nvars; ++v) {
        bool found = false;
        for (const PolyQ& g : basis) {
            const Mono& lt = g.leading_mono();
            bool pure = lt[size_t(v)] > 0;
            for (int w = 0; w < nvars && pure; ++w)
                if (w != v && lt[size_t(w)] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::vector<Mono> standard_monomials(const std::vector<PolyQ>& basis, int nvars,
                                     const MonomialOrder& ord) {
    std::vector<Mono> out;
    std::set<Mono> seen;
    std::vector<Mono> work{Mono(size_t(nvars), 0)};
    auto reducible = [&](const Mono& m) {
        for (const PolyQ& g : basis)
            if (mono_divides(g.leading_mono(), m)) return true;
        return false;
    };
    while (!work.empty()) {
        Mono m = std::move(work.back());
        work.pop_back();
        if (seen.count(m) || reducible(m)) continue;
        seen.insert(m);
        if (seen.size() > 200000) throw NotFiniteFault("standard monomial enumeration exploded");
        for (int v = 0; v < nvars; ++v) {
            Mono child = m;
            child[size_t(v)] += 1;
            work.push_back(std::move(child));
        }
    }
    out.assign(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const Mono& a, const Mono& b) { return ord.less(a, b); });
    return out;
}

std::string poly_to_string(const PolyQ& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (size_t t = p.terms.size(); t-- > 0;) {
        const auto& [m, c] = p.terms[t];
        Rat a = abs(c);
        if (t + 1 == p.terms.size()) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = std::any_of(m.begin(), m.end(), [](int x) { return x != 0; });
        if (!has_vars || a != 1) os << rat_to_string(a) << (has_vars ? " " : "");
        bool first = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first) os << " ";
            first = false;
            os << vars[i];
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace toric
