#include "fixedspace/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

#include "fixedspace/numeric.hpp"

namespace fixedspace {

FiniteRing spec_ring(const GroupSpec& spec) {
    switch (spec.family) {
        case GroupSpec::Family::Symplectic:
        case GroupSpec::Family::GSpCoset:
            return is_prime(spec.modulus) ? FiniteRing::prime_field(spec.modulus)
                                          : FiniteRing::integers_mod(spec.modulus);
        case GroupSpec::Family::Unitary:
            return FiniteRing::quadratic_extension(spec.modulus);
        case GroupSpec::Family::GeneralLinear:
            return FiniteRing::prime_field(spec.modulus);
    }
    throw std::logic_error("spec_ring: bad family");
}

bool spec_feasible(const GroupSpec& spec) {
    long size;
    try {
        size = spec_ring(spec).size();
    } catch (const std::exception&) {
        return false;
    }
    int n = spec.dimension();
    if (n < 1 || n > 4) return false;
    double total = 1.0;
    for (int i = 0; i < n * n; ++i) {
        total *= static_cast<double>(size);
        if (total > 4294967296.0) return false;
    }
    return true;
}

namespace {

struct EnumContext {
    GroupSpec spec;
    FiniteRing R;
    int n;
    long size;
    long candidates;                    // size^n
    FiniteRing::elem xi_elem = 1;       // 1 for Sp/GU/GL, the multiplier for GSpCoset
    std::vector<FiniteRing::elem> gram; // target column Gram for Sp/GSp (n*n)
};

EnumContext make_context(const GroupSpec& spec) {
    if (!spec_feasible(spec))
        throw std::invalid_argument("enumerate_group: infeasible spec " + spec.str());
    EnumContext ctx{spec, spec_ring(spec), spec.dimension(), 0, 0, 1, {}};
    ctx.size = ctx.R.size();
    ctx.candidates = 1;
    for (int i = 0; i < ctx.n; ++i) ctx.candidates *= ctx.size;
    using Family = GroupSpec::Family;
    if (spec.family == Family::GSpCoset) {
        ctx.xi_elem = ctx.R.from_int(spec.xi);
        if (!ctx.R.is_unit(ctx.xi_elem))
            throw std::invalid_argument("enumerate_group: xi must be a unit in the coefficient ring");
    }
    if (spec.family == Family::Symplectic || spec.family == Family::GSpCoset) {
        int g = ctx.n / 2;
        ctx.gram.assign(static_cast<size_t>(ctx.n * ctx.n), 0);
        for (int i = 0; i < g; ++i) {
            ctx.gram[static_cast<size_t>(i * ctx.n + (ctx.n - 1 - i))] = ctx.xi_elem;
            ctx.gram[static_cast<size_t>((ctx.n - 1 - i) * ctx.n + i)] = ctx.R.neg(ctx.xi_elem);
        }
    }
    return ctx;
}

void decode(const EnumContext& ctx, long code, Vec& v) {
    for (int i = 0; i < ctx.n; ++i) {
        v[static_cast<size_t>(i)] = static_cast<FiniteRing::elem>(code % ctx.size);
        code /= ctx.size;
    }
}

FiniteRing::elem sympl(const FiniteRing& R, int n, const Vec& u, const Vec& v) {
    int g = n / 2;
    FiniteRing::elem acc = 0;
    for (int i = 0; i < g; ++i) {
        acc = R.add(acc, R.mul(u[static_cast<size_t>(i)], v[static_cast<size_t>(n - 1 - i)]));
        acc = R.sub(acc, R.mul(u[static_cast<size_t>(n - 1 - i)], v[static_cast<size_t>(i)]));
    }
    return acc;
}

FiniteRing::elem herm(const FiniteRing& R, int n, const Vec& u, const Vec& v) {
    FiniteRing::elem acc = 0;
    for (int i = 0; i < n; ++i)
        acc = R.add(acc, R.mul(R.conj(u[static_cast<size_t>(i)]), v[static_cast<size_t>(i)]));
    return acc;
}

bool column_admissible(const EnumContext& ctx, const std::vector<Vec>& cols, int k, const Vec& v) {
    using Family = GroupSpec::Family;
    switch (ctx.spec.family) {
        case Family::Symplectic:
        case Family::GSpCoset:
            for (int i = 0; i < k; ++i)
                if (sympl(ctx.R, ctx.n, cols[static_cast<size_t>(i)], v) !=
                    ctx.gram[static_cast<size_t>(i * ctx.n + k)])
                    return false;
            return true;
        case Family::Unitary:
            for (int i = 0; i < k; ++i)
                if (herm(ctx.R, ctx.n, cols[static_cast<size_t>(i)], v) != 0) return false;
            return herm(ctx.R, ctx.n, v, v) == ctx.R.one();
        case Family::GeneralLinear: {
            std::vector<Vec> vs(cols.begin(), cols.begin() + k);
            vs.push_back(v);
            return vectors_independent(ctx.R, vs);
        }
    }
    return false;
}

void emit(const EnumContext& ctx, const std::vector<Vec>& cols, const std::function<void(const Mat&)>& visit) {
    Mat m;
    m.n = ctx.n;
    for (int j = 0; j < ctx.n; ++j)
        for (int i = 0; i < ctx.n; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    visit(m);
}

void recurse(const EnumContext& ctx, std::vector<Vec>& cols, int k,
             const std::function<void(const Mat&)>& visit) {
    if (k == ctx.n) {
        emit(ctx, cols, visit);
        return;
    }
    Vec v(static_cast<size_t>(ctx.n), 0);
    for (long code = 0; code < ctx.candidates; ++code) {
        decode(ctx, code, v);
        if (!column_admissible(ctx, cols, k, v)) continue;
        cols[static_cast<size_t>(k)] = v;
        recurse(ctx, cols, k + 1, visit);
    }
}

GroupTally tally_chunk(const EnumContext& ctx, long first_code) {
    GroupTally t;
    Vec v(static_cast<size_t>(ctx.n), 0);
    decode(ctx, first_code, v);
    std::vector<Vec> cols(static_cast<size_t>(ctx.n), Vec(static_cast<size_t>(ctx.n), 0));
    if (!column_admissible(ctx, cols, 0, v)) return t;
    cols[0] = v;
    recurse(ctx, cols, 1, [&](const Mat& m) {
        ++t.order;
        if (is_unipotent(ctx.R, m)) ++t.unipotent;
        ++t.fixed[fixed_space(ctx.R, m)];
    });
    return t;
}

void merge(GroupTally& into, const GroupTally& part) {
    into.order += part.order;
    into.unipotent += part.unipotent;
    for (const auto& [d, c] : part.fixed) into.fixed[d] += c;
}

}  // namespace

void enumerate_group(const GroupSpec& spec, const std::function<void(const Mat&)>& visit) {
    EnumContext ctx = make_context(spec);
    std::vector<Vec> cols(static_cast<size_t>(ctx.n), Vec(static_cast<size_t>(ctx.n), 0));
    recurse(ctx, cols, 0, visit);
}

GroupTally tally_group(const GroupSpec& spec, int threads) {
    EnumContext ctx = make_context(spec);
    if (threads <= 1) {
        GroupTally t;
        for (long code = 0; code < ctx.candidates; ++code) merge(t, tally_chunk(ctx, code));
        return t;
    }
    std::vector<GroupTally> parts(static_cast<size_t>(ctx.candidates));
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long code = 0; code < ctx.candidates; ++code)
        parts[static_cast<size_t>(code)] = tally_chunk(ctx, code);
    GroupTally t;
    for (const auto& part : parts) merge(t, part);
    return t;
}

std::vector<Descriptor> possible_descriptors(const GroupSpec& spec) {
    FiniteRing R = spec_ring(spec);
    int n = spec.dimension();
    if (R.is_field()) {
        std::vector<Descriptor> out;
        for (int r = 0; r <= n; ++r) out.push_back(Descriptor::of_rank(r));
        return out;
    }
    // Multisets of cyclic orders: per prime power p^e | m, at most n factors
    // drawn from {p, ..., p^e}; combined across primes.
    std::vector<std::vector<long>> shapes{{}};
    for (auto [p, e] : factorize(R.base())) {
        std::vector<std::vector<long>> locals;
        std::vector<int> stack;
        std::function<void(int, int)> gen = [&](int min_exp, int slots) {
            locals.emplace_back();
            for (int v : stack) {
                long order = 1;
                for (int i = 0; i < v; ++i) order *= p;
                locals.back().push_back(order);
            }
            if (slots == 0) return;
            for (int v = min_exp; v <= e; ++v) {
                stack.push_back(v);
                gen(v, slots - 1);
                stack.pop_back();
            }
        };
        gen(1, n);
        std::vector<std::vector<long>> next;
        for (const auto& base : shapes)
            for (const auto& local : locals) {
                auto merged = base;
                merged.insert(merged.end(), local.begin(), local.end());
                next.push_back(std::move(merged));
            }
        shapes = std::move(next);
    }
    std::vector<Descriptor> out;
    for (auto& s : shapes) out.push_back(Descriptor::of_shape(std::move(s)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DistributionTable empirical_group_distribution(const GroupSpec& spec, int threads) {
    GroupTally t = tally_group(spec, threads);
    DistributionTable table;
    table.group = spec;
    table.provenance = Provenance::BruteForce;
    for (const auto& d : possible_descriptors(spec)) {
        auto it = t.fixed.find(d);
        long long count = it == t.fixed.end() ? 0 : it->second;
        table.entries.emplace_back(d, ExactScalar(Rat(Int(count), Int(t.order))));
    }
    return table;
}

CrtReport crt_product_check(long l1, long l2, int threads) {
    if (l1 == l2 || !is_prime(l1) || !is_prime(l2) || l1 == 2 || l2 == 2)
        throw std::invalid_argument("crt_product_check: need two distinct odd primes");
    GroupSpec spec{GroupSpec::Family::Symplectic, 1, l1 * l2, 1};
    if (!spec_feasible(spec)) throw std::invalid_argument("crt_product_check: infeasible modulus");
    CrtReport rep;
    rep.l1 = l1;
    rep.l2 = l2;
    FiniteRing F1 = FiniteRing::prime_field(l1);
    FiniteRing F2 = FiniteRing::prime_field(l2);

    struct JointTally {
        long long order = 0;
        std::map<std::pair<int, int>, long long> joint;
    };
    EnumContext ctx = make_context(spec);
    auto run_chunk = [&](long code) {
        JointTally jt;
        Vec v(static_cast<size_t>(ctx.n), 0);
        decode(ctx, code, v);
        std::vector<Vec> cols(static_cast<size_t>(ctx.n), Vec(static_cast<size_t>(ctx.n), 0));
        if (!column_admissible(ctx, cols, 0, v)) return jt;
        cols[0] = v;
        recurse(ctx, cols, 1, [&](const Mat& m) {
            ++jt.order;
            int r1 = fixed_space(F1, mat_reduce(m, F1)).rank;
            int r2 = fixed_space(F2, mat_reduce(m, F2)).rank;
            ++jt.joint[{r1, r2}];
        });
        return jt;
    };

    std::vector<JointTally> parts(static_cast<size_t>(ctx.candidates));
    if (threads <= 1) {
        for (long code = 0; code < ctx.candidates; ++code) parts[static_cast<size_t>(code)] = run_chunk(code);
    } else {
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (long code = 0; code < ctx.candidates; ++code) parts[static_cast<size_t>(code)] = run_chunk(code);
    }
    for (const auto& part : parts) {
        rep.order += part.order;
        for (const auto& [key, c] : part.joint) rep.joint[key] += c;
    }
    for (const auto& [key, c] : rep.joint) {
        rep.marginal1[key.first] += c;
        rep.marginal2[key.second] += c;
    }
    rep.factors_exactly = true;
    for (int r1 = 0; r1 <= 2; ++r1)
        for (int r2 = 0; r2 <= 2; ++r2) {
            long long j = rep.joint.count({r1, r2}) ? rep.joint.at({r1, r2}) : 0;
            long long m1 = rep.marginal1.count(r1) ? rep.marginal1.at(r1) : 0;
            long long m2 = rep.marginal2.count(r2) ? rep.marginal2.at(r2) : 0;
            if (j * rep.order != m1 * m2) rep.factors_exactly = false;
        }
    return rep;
}

FiniteRing::elem symplectic_pairing(const FiniteRing& R, const Vec& u, const Vec& v) {
    return sympl(R, static_cast<int>(u.size()), u, v);
}

EigenSplit eigenspace_split(const FiniteRing& field, const Mat& x) {
    if (!field.is_field()) throw std::invalid_argument("eigenspace_split: field coefficients required");
    Mat d = mat_sub(field, x, Mat::identity(field, x.n));
    Mat k = mat_pow(field, d, x.n);
    EigenSplit split;
    split.unipotent_part = mat_kernel(field, k);
    // The complement is the symplectic orthogonal of E1: the kernel of the
    // map v -> (<b, v>)_b over the E1 basis.
    Mat pairings;
    pairings.n = x.n;
    for (size_t row = 0; row < split.unipotent_part.size(); ++row) {
        const Vec& b = split.unipotent_part[row];
        for (int j = 0; j < x.n; ++j) {
            Vec unit(static_cast<size_t>(x.n), 0);
            unit[static_cast<size_t>(j)] = field.one();
            pairings.at(static_cast<int>(row), j) = symplectic_pairing(field, b, unit);
        }
    }
    split.complement = mat_kernel(field, pairings);
    return split;
}

Mat random_symplectic(const FiniteRing& field, int g, std::mt19937_64& rng) {
    int n = 2 * g;
    std::uniform_int_distribution<long> pick(0, field.size() - 1);
    auto random_vec = [&] {
        Vec v(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = static_cast<FiniteRing::elem>(pick(rng));
        return v;
    };
    // Column i pairs with column n-1-i; required pairings <c_i, c_{n-1-i}> = 1
    // for i < g, everything else orthogonal. Rejection sampling per column.
    std::vector<Vec> cols(static_cast<size_t>(n));
    std::vector<int> order;
    for (int i = 0; i < g; ++i) {
        order.push_back(i);
        order.push_back(n - 1 - i);
    }
    std::vector<bool> chosen(static_cast<size_t>(n), false);
    for (int idx : order) {
        for (;;) {
            Vec v = random_vec();
            bool ok = true;
            bool all_zero = true;
            for (auto c : v) all_zero = all_zero && c == 0;
            if (all_zero) continue;
            for (int j = 0; j < n && ok; ++j) {
                if (!chosen[static_cast<size_t>(j)]) continue;
                FiniteRing::elem want = 0;
                if (j == n - 1 - idx) want = j < idx ? field.one() : field.neg(field.one());
                if (symplectic_pairing(field, cols[static_cast<size_t>(j)], v) != want) ok = false;
            }
            if (!ok) continue;
            cols[static_cast<size_t>(idx)] = v;
            chosen[static_cast<size_t>(idx)] = true;
            break;
        }
    }
    Mat m;
    m.n = n;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return m;
}

}  // namespace fixedspace
