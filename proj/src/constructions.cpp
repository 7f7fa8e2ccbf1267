#include "finring/constructions.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace finring {

namespace {

// One summand of a family formula. Cell slots hold an independent scalar at
// (i, j); Diag is the shared R*I_n scalar; VPow d is the shared scalar along
// superdiagonal d (the R*V^d summand). nil_domain restricts the scalar to the
// nilpotent elements of the base.
struct Slot {
    enum class Kind { Cell, Diag, VPow };
    Kind kind = Kind::Cell;
    int i = 0, j = 0;  // anchor cell, 0-based
    int d = 0;
    bool nil_domain = false;
};

void add_cell(std::vector<Slot>& slots, int i, int j, bool nil_domain) {
    Slot s;
    s.kind = Slot::Kind::Cell;
    s.i = i;
    s.j = j;
    s.nil_domain = nil_domain;
    slots.push_back(s);
}

void add_diag(std::vector<Slot>& slots) {
    Slot s;
    s.kind = Slot::Kind::Diag;
    slots.push_back(s);
}

void add_vpow(std::vector<Slot>& slots, int d) {
    Slot s;
    s.kind = Slot::Kind::VPow;
    s.i = 0;
    s.j = d;
    s.d = d;
    slots.push_back(s);
}

// The formulas, taken literally with inclusive 1-based ranges and floor
// division; empty ranges contribute nothing. Returned slots are sorted by
// anchor cell so element enumeration has a canonical order.
std::vector<Slot> family_slots(Family f, int n) {
    if (n < 2) raise("PreconditionViolated", "matrix families need n >= 2");
    std::vector<Slot> slots;
    auto diag_n = [&] {
        for (int i = 1; i <= n; ++i) add_cell(slots, i - 1, i - 1, true);
    };
    switch (f) {
        case Family::Tn:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) add_cell(slots, i - 1, j - 1, false);
            break;
        case Family::Sn:
            add_diag(slots);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) add_cell(slots, i - 1, j - 1, false);
            break;
        case Family::Sprime:
            diag_n();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) add_cell(slots, i - 1, j - 1, false);
            break;
        case Family::TRn:
            add_diag(slots);
            for (int l = 2; l <= n; ++l) add_vpow(slots, l - 1);
            break;
        case Family::TprimeRn:
            diag_n();
            for (int l = 2; l <= n; ++l) add_vpow(slots, l - 1);
            break;
        case Family::An:
            diag_n();
            for (int l = 2; l <= n / 2; ++l) add_vpow(slots, l - 1);
            for (int i = 1; i <= (n + 1) / 2; ++i)
                for (int j = n / 2 + i; j <= n; ++j)
                    if (i <= n) add_cell(slots, i - 1, j - 1, false);
            break;
        case Family::Bn:
            diag_n();
            for (int l = 3; l <= n / 2; ++l) add_vpow(slots, l - 2);
            for (int i = 1; i <= (n + 1) / 2 + 1 && i <= n; ++i)
                for (int j = n / 2 + i - 1; j <= n; ++j)
                    if (j >= i) add_cell(slots, i - 1, j - 1, false);
            break;
        case Family::Un:
            diag_n();
            for (int i = 1; i <= (n - 1) / 2; ++i)
                for (int j = n / 2 + 1; j <= n; ++j) add_cell(slots, i - 1, j - 1, false);
            for (int j = (n - 1) / 2 + 2; j <= n; ++j)
                add_cell(slots, (n - 1) / 2, j - 1, false);
            break;
    }
    std::stable_sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.nil_domain && !b.nil_domain;  // N summand before R on a shared cell
    });
    return slots;
}

struct VecHash {
    std::size_t operator()(const std::vector<Elem>& v) const {
        std::size_t h = v.size();
        for (Elem e : v) h = h * 1099511628211ull + e;
        return h;
    }
};

std::vector<Elem> mat_add(const FiniteRing& b, const std::vector<Elem>& x,
                          const std::vector<Elem>& y) {
    std::vector<Elem> out(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) out[c] = b.add(x[c], y[c]);
    return out;
}

std::vector<Elem> mat_mul(const FiniteRing& b, const std::vector<Elem>& x,
                          const std::vector<Elem>& y, int n) {
    std::vector<Elem> out(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Elem xv = x[static_cast<std::size_t>(i) * n + k];
            if (xv == 0) continue;
            for (int j = 0; j < n; ++j) {
                Elem yv = y[static_cast<std::size_t>(k) * n + j];
                if (yv == 0) continue;
                auto& cell = out[static_cast<std::size_t>(i) * n + j];
                cell = b.add(cell, b.mul(xv, yv));
            }
        }
    return out;
}

std::string mat_label(const FiniteRing& b, const std::vector<Elem>& m, int n) {
    // Single-entry matrices read best in unit-matrix notation ("E12", "2E12");
    // everything else gets the row-major entry list.
    int nz = 0;
    std::size_t pos = 0;
    for (std::size_t c = 0; c < m.size(); ++c)
        if (m[c] != 0) {
            ++nz;
            pos = c;
        }
    if (nz == 0) return "0";
    if (nz == 1 && n < 10) {
        std::string e = "E" + std::to_string(pos / n + 1) + std::to_string(pos % n + 1);
        if (b.unital() && m[pos] == *b.one()) return e;
        return b.label(m[pos]) + e;
    }
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        if (i) os << ",";
        os << "[";
        for (int j = 0; j < n; ++j) {
            if (j) os << ",";
            os << b.label(m[static_cast<std::size_t>(i) * n + j]);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Tn: return "Tn";
        case Family::Sn: return "Sn";
        case Family::Sprime: return "Sprime";
        case Family::TRn: return "TRn";
        case Family::TprimeRn: return "TprimeRn";
        case Family::An: return "An";
        case Family::Bn: return "Bn";
        case Family::Un: return "Un";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"Tn", Family::Tn},       {"Sn", Family::Sn},
        {"Sprime", Family::Sprime}, {"TRn", Family::TRn},
        {"TprimeRn", Family::TprimeRn}, {"An", Family::An},
        {"Bn", Family::Bn},       {"Un", Family::Un},
    };
    for (const auto& [s, f] : table)
        if (name == s) return f;
    return std::nullopt;
}

MatrixEntrySpec family_scheme(Family f, int n) {
    MatrixEntrySpec spec;
    spec.n = n;
    spec.cells.assign(static_cast<std::size_t>(n) * n, "zero");
    auto join = [&](int i, int j, const std::string& part) {
        auto& cell = spec.cells[static_cast<std::size_t>(i) * n + j];
        if (cell == "zero")
            cell = part;
        else
            cell += "+" + part;
    };
    for (const Slot& s : family_slots(f, n)) {
        switch (s.kind) {
            case Slot::Kind::Cell:
                join(s.i, s.j, s.nil_domain ? "N" : "R");
                break;
            case Slot::Kind::Diag:
                for (int k = 0; k < n; ++k) join(k, k, "diag");
                break;
            case Slot::Kind::VPow:
                for (int k = 0; k + s.d < n; ++k) join(k, k + s.d, "V^" + std::to_string(s.d));
                break;
        }
    }
    return spec;
}

std::vector<Elem> v_matrix(const FiniteRing& base, int n) {
    if (n < 2) raise("PreconditionViolated", "v_matrix needs n >= 2");
    if (!base.unital()) raise("PreconditionViolated", "v_matrix needs a unital base");
    std::vector<Elem> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i + 1 < n; ++i) m[static_cast<std::size_t>(i) * n + i + 1] = *base.one();
    return m;
}

BuildOutcome build_matrix_subring(Family f, const FiniteRing& base, int n,
                                  const Limits& limits) {
    BuildOutcome out;
    auto slots = family_slots(f, n);
    const std::vector<Elem> nil_list = nilpotent_elements(base).to_sorted();
    std::vector<const std::vector<Elem>*> domains;
    std::vector<Elem> full_list(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) full_list[i] = static_cast<Elem>(i);
    std::size_t raw = 1;
    for (const Slot& s : slots) {
        const auto* dom = s.nil_domain ? &nil_list : &full_list;
        domains.push_back(dom);
        if (dom->empty()) raise("PreconditionViolated", "empty coefficient domain");
        if (raw > limits.enum_budget / dom->size())
            raise("SizeCapExceeded", "raw member enumeration exceeds the configured budget");
        raw *= dom->size();
    }
    {
        std::ostringstream os;
        os << family_name(f) << " over a base of size " << base.size() << ", n = " << n << ": "
           << slots.size() << " slots, " << raw << " raw coefficient tuples";
        out.trace.push_back(os.str());
    }
    for (const Slot& s : slots) {
        std::ostringstream os;
        switch (s.kind) {
            case Slot::Kind::Cell:
                os << "cell (" << s.i + 1 << "," << s.j + 1 << "): independent scalar over "
                   << (s.nil_domain ? "N(R)" : "R");
                break;
            case Slot::Kind::Diag:
                os << "diagonal: one shared scalar over R (the R*I slot)";
                break;
            case Slot::Kind::VPow:
                os << "superdiagonal " << s.d << ": one shared scalar over R (the R*V^" << s.d
                   << " slot)";
                break;
        }
        out.trace.push_back(os.str());
    }

    const std::size_t cells = static_cast<std::size_t>(n) * n;
    std::unordered_map<std::vector<Elem>, Elem, VecHash> index;
    std::vector<std::vector<Elem>> members;
    std::vector<std::size_t> odo(slots.size(), 0);
    std::vector<Elem> mat(cells);
    for (std::size_t tuple = 0; tuple < raw; ++tuple) {
        std::fill(mat.begin(), mat.end(), 0);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            Elem val = (*domains[s])[odo[s]];
            const Slot& sl = slots[s];
            switch (sl.kind) {
                case Slot::Kind::Cell: {
                    auto& cell = mat[static_cast<std::size_t>(sl.i) * n + sl.j];
                    cell = base.add(cell, val);
                    break;
                }
                case Slot::Kind::Diag:
                    for (int k = 0; k < n; ++k) {
                        auto& cell = mat[static_cast<std::size_t>(k) * n + k];
                        cell = base.add(cell, val);
                    }
                    break;
                case Slot::Kind::VPow:
                    for (int k = 0; k + sl.d < n; ++k) {
                        auto& cell = mat[static_cast<std::size_t>(k) * n + k + sl.d];
                        cell = base.add(cell, val);
                    }
                    break;
            }
        }
        if (index.emplace(mat, static_cast<Elem>(members.size())).second) {
            if (members.size() >= limits.size_cap)
                raise("SizeCapExceeded", "distinct member count exceeds the size cap");
            members.push_back(mat);
        }
        // odometer: last slot fastest, so the first slot is most significant
        for (std::size_t s = slots.size(); s-- > 0;) {
            if (++odo[s] < domains[s]->size()) break;
            odo[s] = 0;
        }
    }
    const std::size_t m = members.size();
    {
        std::ostringstream os;
        os << "distinct members: " << m;
        out.trace.push_back(os.str());
    }

    std::vector<Elem> add_table(m * m), mul_table(m * m);
    for (std::size_t x = 0; x < m && out.closed; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            auto sum = mat_add(base, members[x], members[y]);
            auto it = index.find(sum);
            if (it == index.end()) {
                out.closed = false;
                out.bad_left = members[x];
                out.bad_right = members[y];
                out.bad_product = sum;
                out.trace.push_back("additive closure fails: " + mat_label(base, members[x], n) +
                                    " + " + mat_label(base, members[y], n) + " = " +
                                    mat_label(base, sum, n) + " is outside the set");
                break;
            }
            add_table[x * m + y] = it->second;
        }
    for (std::size_t x = 0; x < m && out.closed; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            auto prod = mat_mul(base, members[x], members[y], n);
            auto it = index.find(prod);
            if (it == index.end()) {
                out.closed = false;
                out.bad_left = members[x];
                out.bad_right = members[y];
                out.bad_product = prod;
                out.trace.push_back("multiplicative closure fails: " +
                                    mat_label(base, members[x], n) + " * " +
                                    mat_label(base, members[y], n) + " = " +
                                    mat_label(base, prod, n) + " is outside the set");
                break;
            }
            mul_table[x * m + y] = it->second;
        }
    if (!out.closed) return out;

    std::vector<std::string> labels(m);
    for (std::size_t x = 0; x < m; ++x) labels[x] = mat_label(base, members[x], n);
    out.ring = validate_tables(m, std::move(add_table), std::move(mul_table), std::nullopt,
                               std::move(labels),
                               m > kFullCheckMax ? ValidationMode::Sampled : ValidationMode::Full);
    out.matrices = std::move(members);
    return out;
}

Poly poly_mul(const FiniteRing& r, const Poly& f, const Poly& g,
              std::optional<int> degree_cap) {
    if (f.empty() || g.empty()) return {};
    const std::size_t deg = f.size() + g.size() - 2;
    if (degree_cap && deg > static_cast<std::size_t>(*degree_cap))
        raise("DegreeOverflow", "product degree " + std::to_string(deg) +
                                    " exceeds the cap " + std::to_string(*degree_cap));
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = r.add(out[i + j], r.mul(f[i], g[j]));
    }
    return out;
}

bool poly_is_zero(const Poly& f) {
    for (Elem c : f)
        if (c != 0) return false;
    return true;
}

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

namespace {

std::size_t checked_pair_count(std::size_t n, int degree_bound, const Limits& limits) {
    if (degree_bound < 0) raise("PreconditionViolated", "degree bound must be nonnegative");
    const std::size_t coeffs = static_cast<std::size_t>(degree_bound) + 1;
    std::size_t pairs = 1;
    for (std::size_t i = 0; i < 2 * coeffs; ++i) {
        if (pairs > limits.poly_pair_budget / n)
            raise("SizeCapExceeded", "polynomial pair count exceeds the configured budget");
        pairs *= n;
    }
    if (pairs > limits.poly_pair_budget)
        raise("SizeCapExceeded", "polynomial pair count exceeds the configured budget");
    return pairs;
}

// Decodes idx into d+1 coefficients, first coefficient most significant, so
// increasing idx walks coefficient tuples in lexicographic order.
void decode_poly(std::size_t idx, std::size_t n, Poly& out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Elem>(idx % n);
        idx /= n;
    }
}

}  // namespace

ArmendarizReport armendariz_check(const FiniteRing& r, int degree_bound, const Limits& limits) {
    const std::size_t n = r.size();
    checked_pair_count(n, degree_bound, limits);
    const std::size_t coeffs = static_cast<std::size_t>(degree_bound) + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < coeffs; ++i) total *= n;
    ArmendarizReport rep;
    Poly f(coeffs), g(coeffs);
    for (std::size_t fi = 0; fi < total; ++fi) {
        decode_poly(fi, n, f);
        for (std::size_t gi = 0; gi < total; ++gi) {
            decode_poly(gi, n, g);
            bool zero = true;
            for (std::size_t d = 0; d < 2 * coeffs - 1 && zero; ++d) {
                Elem c = 0;
                for (std::size_t i = 0; i < coeffs; ++i) {
                    if (i > d) break;
                    std::size_t j = d - i;
                    if (j >= coeffs) continue;
                    c = r.add(c, r.mul(f[i], g[j]));
                }
                zero = (c == 0);
            }
            if (!zero) continue;
            for (std::size_t i = 0; i < coeffs; ++i)
                for (std::size_t j = 0; j < coeffs; ++j)
                    if (r.mul(f[i], g[j]) != 0) {
                        rep.holds = false;
                        rep.f = f;
                        rep.g = g;
                        rep.bad_i = i;
                        rep.bad_j = j;
                        return rep;
                    }
        }
    }
    return rep;
}

PolyextReport polyext_h_check(RingAnalysis& a, int degree_bound, const Limits& limits) {
    const FiniteRing& r = a.ring();
    const std::size_t n = r.size();
    checked_pair_count(n, degree_bound, limits);
    PolyextReport rep;
    if (a.hypercenter_full()) {
        rep.equation = "hypercenter is the whole ring; every coefficient lies in it";
        return rep;
    }
    const ElemSet& t = a.hypercenter();
    const std::size_t coeffs = static_cast<std::size_t>(degree_bound) + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < coeffs; ++i) total *= n;
    Poly f(coeffs), g(coeffs);
    for (std::size_t fi = 0; fi < total; ++fi) {
        decode_poly(fi, n, f);
        for (std::size_t gi = 0; gi < total; ++gi) {
            decode_poly(gi, n, g);
            bool zero = true;
            for (std::size_t d = 0; d < 2 * coeffs - 1 && zero; ++d) {
                Elem c = 0;
                for (std::size_t i = 0; i < coeffs; ++i) {
                    if (i > d) break;
                    std::size_t j = d - i;
                    if (j >= coeffs) continue;
                    c = r.add(c, r.mul(f[i], g[j]));
                }
                zero = (c == 0);
            }
            if (!zero) continue;
            for (std::size_t q = 0; q < n; ++q)
                for (std::size_t d = 0; d < 2 * coeffs - 1; ++d) {
                    Elem c = 0;
                    for (std::size_t i = 0; i < coeffs; ++i) {
                        if (i > d) break;
                        std::size_t j = d - i;
                        if (j >= coeffs) continue;
                        c = r.add(c, r.mul(r.mul(f[i], static_cast<Elem>(q)), g[j]));
                    }
                    if (!t.test(c)) {
                        rep.holds = false;
                        rep.f = f;
                        rep.g = g;
                        rep.r_elem = static_cast<Elem>(q);
                        rep.bad_degree = d;
                        std::ostringstream os;
                        os << "fg = 0 but coefficient of x^" << d << " in f*(" << r.label(static_cast<Elem>(q))
                           << ")*g equals " << r.label(c) << ", outside the hypercenter";
                        rep.equation = os.str();
                        return rep;
                    }
                }
        }
    }
    return rep;
}

}  // namespace finring
