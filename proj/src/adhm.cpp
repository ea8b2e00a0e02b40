#include "hilbcm/adhm.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "hilbcm/errors.hpp"

namespace hilbcm {

void AdhmDatum::validate() const {
    if (c == 0) throw PreconditionError("ADHM datum requires c >= 1");
    if (B.size() != n) throw PreconditionError("ADHM datum requires n operator matrices");
    for (const Matrix& b : B)
        if (b.rows() != c || b.cols() != c)
            throw PreconditionError("operator matrices must be c x c");
    if (I.rows() != c || I.cols() != 1) throw PreconditionError("I must be c x 1");
}

std::pair<bool, std::optional<std::pair<std::size_t, std::size_t>>> is_commuting(
    const AdhmDatum& x) {
    x.validate();
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = i + 1; j < x.n; ++j)
            if (!commutator(x.B[i], x.B[j]).is_zero())
                return {false, std::make_pair(i, j)};
    return {true, std::nullopt};
}

namespace {

void require_commuting(const AdhmDatum& x) {
    const auto [ok, pair] = is_commuting(x);
    if (!ok) throw NotCommutingError(pair->first, pair->second);
}

struct OrderCmp {
    const MonomialOrder* ord;
    // std::priority_queue pops the largest; invert for a min-heap.
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->less(b, a); }
};

// One sweep serves both krylov (commuting path) and datum_to_ideal:
// monomials are enumerated in increasing order; a candidate whose Phi
// value extends the span becomes a standard monomial, a dependent one
// becomes a leading term with its reduced-tail generator.
struct SweepResult {
    std::vector<Monomial> std_monomials;
    std::vector<Poly> generators;  // monic leads, tails on std monomials
    IncrementalSpan span{0};
};

SweepResult multiplication_sweep(const AdhmDatum& x, const MonomialOrder& order) {
    SweepResult res{{}, {}, IncrementalSpan(x.c)};
    std::priority_queue<Monomial, std::vector<Monomial>, OrderCmp> heap{OrderCmp{&order}};
    std::set<Monomial> queued;
    std::map<Monomial, std::vector<Rational>> value;  // accepted monomials only
    std::map<Monomial, std::pair<Monomial, std::size_t>> parent;  // m = x_i * parent
    std::vector<Monomial> leads;

    const Monomial one(x.n, 0);
    heap.push(one);
    queued.insert(one);

    while (!heap.empty()) {
        const Monomial m = heap.top();
        heap.pop();
        bool skip = false;
        for (const Monomial& lt : leads)
            if (monomial_divides(lt, m)) {
                skip = true;
                break;
            }
        if (skip) continue;

        std::vector<Rational> v;
        if (m == one) {
            v = x.I.col_vector(0);
        } else {
            const auto& [pm, var] = parent.at(m);
            v = x.B[var].apply(value.at(pm));
        }

        auto ins = res.span.insert(v);
        if (ins.was_new) {
            res.std_monomials.push_back(m);
            value.emplace(m, std::move(v));
            for (std::size_t i = 0; i < x.n; ++i) {
                Monomial child = m;
                ++child[i];
                if (queued.insert(child).second) {
                    parent[child] = {m, i};
                    heap.push(child);
                }
            }
        } else {
            leads.push_back(m);
            Poly g = Poly::term(x.n, m, 1);
            const auto& coords = *ins.coords;
            for (std::size_t j = 0; j < coords.size(); ++j)
                g.add_term(res.std_monomials[j], -coords[j]);
            res.generators.push_back(std::move(g));
        }
    }
    return res;
}

// Invariant closure over arbitrary words; used when the datum does not
// commute and Sigma_X semantics are unavailable.
KrylovResult word_closure(const AdhmDatum& x) {
    KrylovResult res;
    res.span = IncrementalSpan(x.c);
    std::queue<std::pair<std::vector<Rational>, Monomial>> work;
    work.push({x.I.col_vector(0), Monomial(x.n, 0)});
    while (!work.empty()) {
        auto [v, m] = work.front();
        work.pop();
        if (!res.span.insert(v).was_new) continue;
        res.basis_monomials.push_back(m);
        for (std::size_t i = 0; i < x.n; ++i) {
            Monomial child = m;
            ++child[i];
            work.push({x.B[i].apply(v), child});
        }
    }
    res.rank = res.span.rank();
    return res;
}

}  // namespace

KrylovResult krylov(const AdhmDatum& x, const MonomialOrder& order) {
    x.validate();
    if (!is_commuting(x).first) return word_closure(x);
    SweepResult sweep = multiplication_sweep(x, order);
    KrylovResult res;
    res.basis_monomials = std::move(sweep.std_monomials);
    res.span = std::move(sweep.span);
    res.rank = res.span.rank();
    return res;
}

bool is_stable(const AdhmDatum& x) {
    require_commuting(x);
    return krylov(x).rank == x.c;
}

std::vector<Rational> apply_phi(const AdhmDatum& x, const Poly& p) {
    require_commuting(x);
    if (p.nvars() != x.n) throw PreconditionError("apply_phi: arity mismatch");
    const Matrix pb = eval_poly_at_matrices(p, x.B);
    return (pb * x.I).col_vector(0);
}

IdealPresentation datum_to_ideal(const AdhmDatum& x, const MonomialOrder& order) {
    require_commuting(x);
    SweepResult sweep = multiplication_sweep(x, order);
    if (sweep.span.rank() != x.c) throw NotStableError(sweep.span.rank(), x.c);

    IdealPresentation out;
    out.order = order;
    out.generators = sweep.generators;
    std::sort(sweep.generators.begin(), sweep.generators.end(),
              [&](const Poly& a, const Poly& b) {
                  return order.less(a.leading_monomial(order), b.leading_monomial(order));
              });
    out.reduced_gb = std::move(sweep.generators);
    out.std_monomials = std::move(sweep.std_monomials);
    return out;
}

AdhmDatum ideal_to_datum(const IdealPresentation& ideal) {
    if (!ideal.reduced_gb) throw PreconditionError("ideal_to_datum: missing Groebner basis");
    if (!ideal.std_monomials)
        throw PreconditionError("ideal_to_datum: ideal is not zero-dimensional");
    const auto& std_mons = *ideal.std_monomials;
    const std::size_t c = std_mons.size();
    if (c == 0) throw PreconditionError("ideal_to_datum: improper ideal <1>");
    const std::size_t n = ideal.reduced_gb->front().nvars();

    std::map<Monomial, std::size_t> index;
    for (std::size_t j = 0; j < c; ++j) index[std_mons[j]] = j;

    AdhmDatum x;
    x.n = n;
    x.c = c;
    x.B.assign(n, Matrix(c, c));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            Monomial m = std_mons[j];
            ++m[i];
            const Poly nf = normal_form(Poly::term(n, m, 1), ideal);
            for (const auto& [mono, coef] : nf.terms()) {
                auto it = index.find(mono);
                if (it == index.end())
                    throw PreconditionError("normal form left the standard basis");
                x.B[i].at(it->second, j) = coef;
            }
        }
    }
    x.I = Matrix(c, 1);
    // 1 is always standard for a proper ideal, and it is minimal in any
    // order, hence sits at index 0.
    x.I.at(index.at(Monomial(n, 0)), 0) = 1;
    return x;
}

AdhmDatum act(const Matrix& g, const AdhmDatum& x) {
    x.validate();
    const auto ginv = mat_inverse(g);
    if (!ginv) throw PreconditionError("act: singular group element");
    AdhmDatum y;
    y.n = x.n;
    y.c = x.c;
    for (const Matrix& b : x.B) y.B.push_back(g * b * *ginv);
    y.I = g * x.I;
    return y;
}

std::optional<EquivalenceWitness> are_equivalent(const AdhmDatum& x, const AdhmDatum& y,
                                                 const MonomialOrder& order) {
    if (x.n != y.n || x.c != y.c) return std::nullopt;
    const IdealPresentation jx = datum_to_ideal(x, order);
    const IdealPresentation jy = datum_to_ideal(y, order);
    if (*jx.reduced_gb != *jy.reduced_gb) return std::nullopt;

    // Shared standard basis: g Phi_X(m_j) = Phi_Y(m_j).
    const auto& mons = *jx.std_monomials;
    Matrix mx(x.c, x.c), my(x.c, x.c);
    for (std::size_t j = 0; j < mons.size(); ++j) {
        const Poly pm = Poly::term(x.n, mons[j], 1);
        const auto vx = apply_phi(x, pm);
        const auto vy = apply_phi(y, pm);
        for (std::size_t i = 0; i < x.c; ++i) {
            mx.at(i, j) = vx[i];
            my.at(i, j) = vy[i];
        }
    }
    const auto mx_inv = mat_inverse(mx);
    if (!mx_inv) return std::nullopt;  // cannot happen for stable data
    const Matrix g = my * *mx_inv;
    const auto ginv = mat_inverse(g);
    if (!ginv) return std::nullopt;

    for (std::size_t i = 0; i < x.n; ++i)
        if (!(g * x.B[i] * *ginv == y.B[i])) return std::nullopt;
    if (!(g * x.I == y.I)) return std::nullopt;
    return EquivalenceWitness{g};
}

AdhmDatum datum_from_points(const std::vector<std::vector<Rational>>& points, std::size_t n) {
    if (points.empty()) throw PreconditionError("datum_from_points: no points");
    for (const auto& p : points)
        if (p.size() != n) throw PreconditionError("datum_from_points: point arity mismatch");
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b])
                throw PreconditionError("datum_from_points: duplicate point");

    AdhmDatum x;
    x.n = n;
    x.c = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> diag(x.c);
        for (std::size_t k = 0; k < x.c; ++k) diag[k] = points[k][i];
        x.B.push_back(Matrix::diagonal(diag));
    }
    x.I = Matrix(x.c, 1);
    for (std::size_t k = 0; k < x.c; ++k) x.I.at(k, 0) = 1;
    return x;
}

std::optional<AdhmDatum> stabilize_search(const AdhmDatum& x, std::size_t trials,
                                          std::uint64_t seed, const Rational& radius) {
    require_commuting(x);
    if (radius < 0) throw PreconditionError("stabilize_search: negative radius");
    if (is_stable(x)) return x;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<std::size_t> pick_var(0, x.n - 1);
    std::uniform_int_distribution<unsigned> pick_deg(1, 2);

    for (std::size_t t = 0; t < trials; ++t) {
        AdhmDatum cand = x;
        if (radius > 0) {
            // Perturb along the commutative algebra generated by the B_i:
            // B_i' = B_i + sum eps_k * (monomial in the B's).
            std::vector<Matrix> deltas(x.n, Matrix(x.c, x.c));
            bool any = false;
            for (std::size_t i = 0; i < x.n; ++i) {
                for (int k = 0; k < 2; ++k) {
                    const int num = small(rng);
                    if (num == 0) continue;
                    Matrix mono = Matrix::identity(x.c);
                    const unsigned deg = pick_deg(rng);
                    for (unsigned d = 0; d < deg; ++d) mono = mono * x.B[pick_var(rng)];
                    Rational eps(num, 4);
                    eps.canonicalize();
                    deltas[i] = deltas[i] + mono * eps;
                    any = true;
                }
            }
            if (any) {
                Rational max_abs = 0;
                for (const Matrix& d : deltas)
                    for (std::size_t r = 0; r < d.rows(); ++r)
                        for (std::size_t s = 0; s < d.cols(); ++s) {
                            const Rational a = abs(d.at(r, s));
                            if (a > max_abs) max_abs = a;
                        }
                Rational scale = 1;
                if (max_abs > radius && max_abs > 0) scale = radius / max_abs;
                for (std::size_t i = 0; i < x.n; ++i)
                    cand.B[i] = x.B[i] + deltas[i] * scale;
            }
        }
        for (std::size_t r = 0; r < x.c; ++r) cand.I.at(r, 0) = small(rng);

        if (!is_commuting(cand).first) continue;  // never trade exactness for luck
        if (is_stable(cand)) return cand;
    }
    return std::nullopt;
}

}  // namespace hilbcm
