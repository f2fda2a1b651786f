#include "sepcode/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepcode {

namespace {

// Index-table arithmetic for the hot distance loops; element index i is
// FieldElement::index(). Only built for the small fields these searches run
// over.
struct PackedField {
    int64_t order = 0;
    std::vector<int32_t> add_t, mul_t, neg_t, inv_t;

    explicit PackedField(const Field& f) : order(f->order) {
        const auto elems = enumerate(f);
        add_t.resize(static_cast<size_t>(order) * order);
        mul_t.resize(static_cast<size_t>(order) * order);
        neg_t.resize(static_cast<size_t>(order));
        inv_t.resize(static_cast<size_t>(order), 0);
        for (int64_t i = 0; i < order; ++i) {
            neg_t[static_cast<size_t>(i)] = static_cast<int32_t>(neg(elems[i]).index());
            if (i > 0) inv_t[static_cast<size_t>(i)] = static_cast<int32_t>(inv(elems[i]).index());
            for (int64_t j = 0; j < order; ++j) {
                add_t[static_cast<size_t>(i) * order + j] =
                    static_cast<int32_t>(add(elems[i], elems[j]).index());
                mul_t[static_cast<size_t>(i) * order + j] =
                    static_cast<int32_t>(mul(elems[i], elems[j]).index());
            }
        }
    }

    int32_t padd(int32_t a, int32_t b) const { return add_t[static_cast<size_t>(a) * order + b]; }
    int32_t pmul(int32_t a, int32_t b) const { return mul_t[static_cast<size_t>(a) * order + b]; }
    int32_t pneg(int32_t a) const { return neg_t[static_cast<size_t>(a)]; }
    int32_t pinv(int32_t a) const { return inv_t[static_cast<size_t>(a)]; }
};

std::vector<std::vector<int32_t>> pack_rows(const Matrix& m) {
    std::vector<std::vector<int32_t>> rows(m.rows(), std::vector<int32_t>(m.cols()));
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) rows[r][c] = static_cast<int32_t>(m.at(r, c).index());
    return rows;
}

// Full scan over the (|F|^k - 1) nonzero messages, enumerating message
// digits depth-first with per-level partial codewords.
int64_t exhaustive_scan(const PackedField& pf, const std::vector<std::vector<int32_t>>& gen,
                        size_t n, uint64_t* work) {
    const size_t k = gen.size();
    std::vector<std::vector<int32_t>> partial(k + 1, std::vector<int32_t>(n, 0));
    std::vector<int64_t> digit(k, 0);
    int64_t best = static_cast<int64_t>(n) + 1;

    size_t level = 0;
    bool descending = true;
    while (true) {
        if (descending) {
            if (level == k) {
                bool nonzero_msg =
                    std::any_of(digit.begin(), digit.end(), [](int64_t d) { return d != 0; });
                if (nonzero_msg) {
                    ++*work;
                    int64_t w = 0;
                    for (size_t c = 0; c < n; ++c) w += partial[k][c] != 0;
                    best = std::min(best, w);
                }
                descending = false;
                continue;
            }
            digit[level] = 0;
            partial[level + 1] = partial[level];
            ++level;
            continue;
        }
        // backtrack / advance
        if (level == 0) break;
        --level;
        if (digit[level] + 1 < pf.order) {
            ++digit[level];
            // partial[level+1] = partial[level] + digit*row  (digit scaling folded
            // in by adding the row once per increment)
            const auto& row = gen[level];
            for (size_t c = 0; c < n; ++c)
                partial[level + 1][c] = pf.padd(partial[level + 1][c], row[c]);
            ++level;
            descending = true;
        }
    }
    return best;
}

// True iff the column submatrix of h given by cols has rank < |cols|.
bool columns_dependent(const PackedField& pf, const std::vector<std::vector<int32_t>>& h,
                       const std::vector<size_t>& cols) {
    const size_t rows = h.size();
    const size_t w = cols.size();
    if (w > rows) return true;
    std::vector<std::vector<int32_t>> sub(rows, std::vector<int32_t>(w));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < w; ++c) sub[r][c] = h[r][cols[c]];
    size_t rk = 0;
    for (size_t c = 0; c < w; ++c) {
        size_t sel = rows;
        for (size_t r = rk; r < rows; ++r)
            if (sub[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == rows) return true; // no pivot in this column
        std::swap(sub[rk], sub[sel]);
        const int32_t piv_inv = pf.pinv(sub[rk][c]);
        for (size_t j = c; j < w; ++j) sub[rk][j] = pf.pmul(sub[rk][j], piv_inv);
        for (size_t r = rk + 1; r < rows; ++r) {
            if (sub[r][c] == 0) continue;
            const int32_t f = pf.pneg(sub[r][c]);
            for (size_t j = c; j < w; ++j)
                sub[r][j] = pf.padd(sub[r][j], pf.pmul(f, sub[rk][j]));
        }
        ++rk;
    }
    return false; // every column produced a pivot
}

DistanceResult distance_core(const Field& field, const Matrix& gen_in, int64_t dim,
                             int64_t designed_lower, uint64_t budget) {
    const int64_t n = static_cast<int64_t>(gen_in.cols());
    DistanceResult res;
    if (dim == 0) {
        res.method = DistanceMethod::zero_code;
        return res;
    }

    const Matrix basis = row_space_basis(gen_in); // dim independent rows
    const int64_t q2 = field->order;

    // codeword-space size q2^dim, guarded against overflow
    bool scan_fits = true;
    uint64_t space = 1;
    for (int64_t i = 0; i < dim; ++i) {
        if (space > budget / static_cast<uint64_t>(q2)) {
            scan_fits = false;
            break;
        }
        space *= static_cast<uint64_t>(q2);
    }
    if (scan_fits && space > budget) scan_fits = false;

    PackedField pf(field);

    if (scan_fits) {
        auto rows = pack_rows(basis);
        res.method = DistanceMethod::exhaustive_codewords;
        res.lower = res.upper = exhaustive_scan(pf, rows, static_cast<size_t>(n), &res.work);
        return res;
    }

    // support search on a parity check: d = min w such that some w columns
    // of H are dependent
    const Matrix h = nullspace(basis);
    auto hrows = pack_rows(h);

    uint64_t work = 0;
    for (int64_t w = 1; w <= n; ++w) {
        // iterate all C(n, w) column subsets in lexicographic order
        std::vector<size_t> cols(static_cast<size_t>(w));
        for (int64_t i = 0; i < w; ++i) cols[static_cast<size_t>(i)] = static_cast<size_t>(i);
        while (true) {
            if (++work > budget) {
                res.method = DistanceMethod::goppa_bound_only;
                res.lower = std::max<int64_t>(1, designed_lower);
                res.upper = n;
                res.work = work - 1;
                return res;
            }
            if (columns_dependent(pf, hrows, cols)) {
                res.method = DistanceMethod::support_search;
                res.lower = res.upper = w;
                res.work = work;
                return res;
            }
            // next combination
            int64_t i = w - 1;
            while (i >= 0 && cols[static_cast<size_t>(i)] == static_cast<size_t>(n - w + i)) --i;
            if (i < 0) break;
            ++cols[static_cast<size_t>(i)];
            for (int64_t j = i + 1; j < w; ++j)
                cols[static_cast<size_t>(j)] = cols[static_cast<size_t>(j - 1)] + 1;
        }
    }
    // unreachable for a nonzero code: the n columns of H have rank n - dim < n
    throw std::logic_error("support search found no dependent columns");
}

} // namespace

std::string to_string(EvalMode mode) {
    switch (mode) {
        case EvalMode::complement: return "complement";
        case EvalMode::full_affine: return "full-affine";
        case EvalMode::hermitian: return "hermitian";
    }
    return "?";
}

EvalMode eval_mode_from_string(const std::string& s) {
    if (s == "complement") return EvalMode::complement;
    if (s == "full-affine" || s == "full_affine") return EvalMode::full_affine;
    if (s == "hermitian") return EvalMode::hermitian;
    throw std::invalid_argument("unknown mode: " + s);
}

std::vector<Place> evaluation_points(const CurveSpec& spec, const Field& fq2, EvalMode mode) {
    if (mode == EvalMode::complement) return point_sets(spec, fq2).d_set;
    return full_affine_points(spec, fq2);
}

EvalCode build_code(const CurveSpec& spec, const Field& fq2, std::vector<Place> points,
                    int64_t s) {
    for (const auto& pl : points) {
        if (pl.is_infinity()) throw std::invalid_argument("evaluation points must be affine");
        if (!on_curve(spec, pl)) throw std::invalid_argument("evaluation point not on the curve");
    }
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("duplicate evaluation point");

    EvalCode code;
    code.spec = spec;
    code.field = fq2;
    code.s = s;
    code.basis = s < 0 ? MonomialBasis{s, {}} : monomial_basis(spec, s);
    code.gen = Matrix(fq2, code.basis.entries.size(), points.size());
    for (size_t r = 0; r < code.basis.entries.size(); ++r) {
        const auto& e = code.basis.entries[r];
        for (size_t c = 0; c < points.size(); ++c) {
            const FieldElement v =
                mul(pow(points[c].x(), e.i), pow(points[c].y(), e.j));
            code.gen.set(r, c, v);
        }
    }
    code.points = std::move(points);
    code.dim = static_cast<int64_t>(rank(code.gen));
    return code;
}

int64_t designed_distance(const EvalCode& code) {
    if (code.s >= code.length())
        throw std::domain_error("designed distance is vacuous for s >= n");
    return code.length() - code.s;
}

std::string to_string(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::exhaustive_codewords: return "exhaustive-codewords";
        case DistanceMethod::support_search: return "support-search";
        case DistanceMethod::goppa_bound_only: return "goppa-bound-only";
        case DistanceMethod::zero_code: return "zero-code";
    }
    return "?";
}

DistanceResult min_distance(const EvalCode& code, uint64_t budget) {
    const int64_t designed = code.s >= 0 && code.s < code.length() ? code.length() - code.s : 1;
    return distance_core(code.field, code.gen, code.dim, designed, budget);
}

DistanceResult min_distance(const LinearCode& code, uint64_t budget) {
    return distance_core(code.field, code.gen, code.dim, 1, budget);
}

LinearCode euclidean_dual(const EvalCode& code) {
    Matrix ns = nullspace(code.gen);
    return LinearCode{code.field, ns, static_cast<int64_t>(ns.rows())};
}

LinearCode euclidean_dual(const LinearCode& code) {
    Matrix ns = nullspace(code.gen);
    return LinearCode{code.field, ns, static_cast<int64_t>(ns.rows())};
}

int64_t hermitian_base_order(const Field& field) {
    if (field->k % 2 != 0)
        throw std::invalid_argument("field is not quadratic over a subfield");
    return ipow(field->p, field->k / 2);
}

namespace {
LinearCode hermitian_dual_impl(const Field& field, const Matrix& gen) {
    const int64_t q = hermitian_base_order(field);
    Matrix ns = nullspace(frobenius_entrywise(gen, q));
    return LinearCode{field, ns, static_cast<int64_t>(ns.rows())};
}
} // namespace

LinearCode hermitian_dual(const EvalCode& code) { return hermitian_dual_impl(code.field, code.gen); }
LinearCode hermitian_dual(const LinearCode& code) { return hermitian_dual_impl(code.field, code.gen); }

bool is_self_orthogonal(const EvalCode& code) { return is_zero_matrix(gram(code.gen)); }
bool is_self_orthogonal(const LinearCode& code) { return is_zero_matrix(gram(code.gen)); }

bool is_hermitian_self_orthogonal(const EvalCode& code) {
    return is_zero_matrix(hermitian_gram(code.gen, hermitian_base_order(code.field)));
}

bool is_hermitian_self_orthogonal(const LinearCode& code) {
    return is_zero_matrix(hermitian_gram(code.gen, hermitian_base_order(code.field)));
}

DimensionFormulaResult dimension_formula(int64_t q, int64_t r) {
    const int64_t q2 = q * q, q3 = q * q * q;
    DimensionFormulaResult res;
    auto in_case = [&](int c) {
        switch (c) {
            case 1: return r < 0;
            case 2: return 0 <= r && r <= q2 - 3 * q;
            case 3: return q2 - 3 * q < r && r < q3;
            case 4: return q3 <= r && r <= q3 + q2 - 3 * q;
            case 5: return r > q3 - q2 - 3 * q;
        }
        return false;
    };
    auto value_of = [&](int c) -> int64_t {
        switch (c) {
            case 1: return 0;
            case 2: return monomial_count(q, q - 1, r);
            case 3: return r * (q2 - q + 1) - (q - 1) * (q - 2) / 2;
            case 4: return q3 - monomial_count(q, q - 1, q3 - q2 - 3 * q - r);
            case 5: return q3;
        }
        return 0;
    };
    // printed order, except that case (5) takes precedence over (4)
    const int order[5] = {1, 2, 3, 5, 4};
    for (int c : order) {
        if (in_case(c)) {
            res.case_used = c;
            res.k = value_of(c);
            break;
        }
    }
    for (int c = 1; c <= 5; ++c)
        if (c != res.case_used && in_case(c)) res.also_applicable.push_back(c);
    return res;
}

DualIdentityResult dual_identity_check(const CurveSpec& spec, const Field& fq2,
                                       const std::vector<Place>& points, int64_t s) {
    const int64_t q = spec.q;
    const int64_t n = static_cast<int64_t>(points.size());
    const int64_t g = genus(spec);

    DualIdentityResult res;
    res.s = s;
    res.s_claimed = q * q * q + q * q - 3 * q - s;
    res.s_generic = n + 2 * g - 2 - s;

    const EvalCode c_s = build_code(spec, fq2, points, s);
    const Matrix dual = nullspace(c_s.gen);
    const EvalCode c_claimed = build_code(spec, fq2, points, res.s_claimed);
    const EvalCode c_generic = build_code(spec, fq2, points, res.s_generic);
    res.claimed_equal = same_row_space(dual, c_claimed.gen);
    res.generic_equal = same_row_space(dual, c_generic.gen);
    return res;
}

} // namespace sepcode
