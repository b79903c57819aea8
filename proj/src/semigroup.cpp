#include "semicm/semigroup.hpp"
#include "semicm/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace semicm {

std::vector<IntVec> AffineSemigroup::basis_vectors() const {
    std::vector<IntVec> out;
    out.reserve(basis.size());
    for (int i : basis) out.push_back(generators[i]);
    return out;
}

namespace {

bool all_nonnegative(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q >= 0; });
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int coordinate_sum(const IntVec& v) {
    return std::accumulate(v.begin(), v.end(), Int(0));
}

// Primitive direction of v (entries divided by their gcd) plus the content.
std::pair<IntVec, Int> primitive_direction(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    IntVec p = v;
    for (Int& x : p) x /= g;
    return {p, g};
}

// Lambda coordinates of every generator over the candidate basis, or nullopt
// if some generator falls outside the spanned simplicial cone.
std::optional<std::vector<RatVec>> lambda_table(const std::vector<IntVec>& generators,
                                                const std::vector<int>& basis) {
    std::vector<IntVec> e;
    e.reserve(basis.size());
    for (int i : basis) e.push_back(generators[i]);
    std::vector<RatVec> table;
    table.reserve(generators.size());
    for (const IntVec& g : generators) {
        RatVec lambda;
        try {
            lambda = solve_lambda(g, e);
        } catch (const NotInSpan&) {
            return std::nullopt;
        }
        if (!all_nonnegative(lambda)) return std::nullopt;
        table.push_back(std::move(lambda));
    }
    return table;
}

// First (in lexicographic index order) d-subset of generators that is
// linearly independent and whose cone contains every generator. For a
// simplicial cone such a subset consists of one generator per extreme ray;
// if none exists the cone is not simplicial.
std::optional<std::vector<int>> find_valid_basis(const std::vector<IntVec>& generators, int d) {
    const int g = int(generators.size());
    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<IntVec> candidate;
        for (int i : idx) candidate.push_back(generators[i]);
        if (rational_rank(candidate) == d && lambda_table(generators, idx))
            return idx;
        int pos = d - 1;
        while (pos >= 0 && idx[pos] == g - d + pos) --pos;
        if (pos < 0) return std::nullopt;
        ++idx[pos];
        for (int j = pos + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

AffineSemigroup build_semigroup(const std::vector<IntVec>& generators_in,
                                const std::optional<std::vector<int>>& basis_hint) {
    if (generators_in.empty()) throw RankZero("no nonzero generators");

    // Deduplicate, keeping first occurrences; remember where inputs went so
    // basis_hint indices can refer to the caller's list.
    std::vector<IntVec> gens;
    std::vector<int> remap(generators_in.size());
    for (size_t i = 0; i < generators_in.size(); ++i) {
        const IntVec& v = generators_in[i];
        if (v.empty() || is_zero(v)) throw ValidationError("zero generator");
        if (v.size() != generators_in[0].size())
            throw ValidationError("generator dimension mismatch");
        auto it = std::find(gens.begin(), gens.end(), v);
        remap[i] = int(it - gens.begin());
        if (it == gens.end()) gens.push_back(v);
    }

    const int n = int(gens[0].size());
    const int d = rational_rank(gens);

    std::vector<int> basis;
    if (basis_hint) {
        // Hint order is the e_1..e_d order.
        for (int i : *basis_hint) {
            if (i < 0 || i >= int(generators_in.size()))
                throw ValidationError("basis index out of range");
            int mapped = remap[i];
            if (std::find(basis.begin(), basis.end(), mapped) != basis.end())
                throw ValidationError("duplicate basis index");
            basis.push_back(mapped);
        }
        if (int(basis.size()) != d)
            throw NotSimplicial("basis hint size differs from the rank");
        std::vector<IntVec> hinted;
        for (int i : basis) hinted.push_back(gens[i]);
        if (rational_rank(hinted) != d)
            throw NotSimplicial("basis hint is linearly dependent");
    } else {
        auto found = find_valid_basis(gens, d);
        if (!found)
            throw NotSimplicial("cone is not spanned by " + std::to_string(d) + " generators");
        // The subset members sit on the extreme rays. Canonical choice per
        // ray: smallest coordinate sum, ties broken by shortest multiple of
        // the primitive direction.
        for (int i : *found) {
            auto [ray, content] = primitive_direction(gens[i]);
            int best = i;
            auto best_key = std::pair(coordinate_sum(gens[i]), content);
            for (int j = 0; j < int(gens.size()); ++j) {
                auto [dir, c] = primitive_direction(gens[j]);
                if (dir != ray) continue;
                auto key = std::pair(coordinate_sum(gens[j]), c);
                if (key < best_key) { best = j; best_key = key; }
            }
            basis.push_back(best);
        }
        std::sort(basis.begin(), basis.end());
    }

    auto table = lambda_table(gens, basis);
    if (!table)
        throw NotSimplicial("some generator lies outside the simplicial cone");

    AffineSemigroup S;
    S.ambient_dim = n;
    S.generators = std::move(gens);
    S.basis = std::move(basis);
    S.lambda_gens = std::move(*table);
    S.delta = 1;
    for (const RatVec& lambda : S.lambda_gens) S.delta = lcm(S.delta, denominator_lcm(lambda));

    IntMat rows(int(S.lambda_gens.size()), d);
    for (int i = 0; i < rows.rows; ++i)
        for (int j = 0; j < d; ++j) {
            Rat scaled = Rat(S.delta) * S.lambda_gens[i][j];
            rows.at(i, j) = scaled.get_num(); // integral by choice of delta
        }
    S.group = hermite_form(rows, S.delta);
    return S;
}

std::optional<RatVec> lambda_of(const AffineSemigroup& S, const IntVec& x) {
    if (int(x.size()) != S.ambient_dim) throw ValidationError("point dimension mismatch");
    try {
        return solve_lambda(x, S.basis_vectors());
    } catch (const NotInSpan&) {
        return std::nullopt;
    }
}

IntVec lambda_to_ambient(const AffineSemigroup& S, const RatVec& v) {
    RatVec acc(S.ambient_dim, Rat(0));
    for (int i = 0; i < S.dim(); ++i) {
        const IntVec& e = S.basis_vector(i);
        for (int j = 0; j < S.ambient_dim; ++j) acc[j] += v[i] * Rat(e[j]);
    }
    IntVec out(S.ambient_dim);
    for (int j = 0; j < S.ambient_dim; ++j) {
        if (!is_integral(acc[j]))
            throw InternalInconsistency("lambda vector does not map to an integer point");
        out[j] = acc[j].get_num();
    }
    return out;
}

namespace {

// Can `residual` be written as a nonnegative integer combination of the
// generator steps? Everything is scaled by delta, so residuals are integer
// vectors. The memo records per residual either a generator whose
// subtraction leads to a solution, or -1 for a dead end; the answer is path
// independent, so keying on the residual alone is sound and entries stay
// valid across queries. member() keeps a table per call; MemberTable keeps
// one per semigroup.
struct MemberSearch {
    std::vector<IntVec> steps;     // delta-scaled generator lambda vectors
    std::vector<int> order;        // generator indices, decreasing step sum
    std::map<IntVec, int> memo;

    explicit MemberSearch(const AffineSemigroup& S) {
        const int d = S.dim();
        steps.reserve(S.lambda_gens.size());
        for (const RatVec& lambda : S.lambda_gens) {
            IntVec step(d);
            for (int i = 0; i < d; ++i) {
                Rat scaled = Rat(S.delta) * lambda[i];
                step[i] = scaled.get_num();
            }
            steps.push_back(std::move(step));
        }
        order.resize(steps.size());
        std::iota(order.begin(), order.end(), 0);
        std::vector<Int> sums(steps.size(), Int(0));
        for (size_t k = 0; k < steps.size(); ++k)
            for (const Int& x : steps[k]) sums[k] += x;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return sums[a] > sums[b]; });
    }

    bool solve(const IntVec& residual) {
        if (std::all_of(residual.begin(), residual.end(), [](const Int& x) { return x == 0; }))
            return true;
        auto [it, fresh] = memo.emplace(residual, -1);
        if (!fresh) return it->second >= 0;
        for (int k : order) {
            const IntVec& step = steps[k];
            IntVec next(residual.size());
            bool feasible = true;
            for (size_t i = 0; i < residual.size(); ++i) {
                next[i] = residual[i] - step[i];
                if (next[i] < 0) { feasible = false; break; }
            }
            if (!feasible) continue;
            if (solve(next)) {
                memo[residual] = k;
                return true;
            }
        }
        return false;
    }

    std::vector<long> extract(IntVec residual) const {
        std::vector<long> coeffs(steps.size(), 0);
        while (!std::all_of(residual.begin(), residual.end(),
                            [](const Int& x) { return x == 0; })) {
            int k = memo.at(residual);
            ++coeffs[k];
            for (size_t i = 0; i < residual.size(); ++i) residual[i] -= steps[k][i];
        }
        return coeffs;
    }
};

// Scaled target for the search, or nullopt if a cheap test already rules
// the point out.
std::optional<IntVec> search_target(const AffineSemigroup& S, const RatVec& lambda) {
    if (!all_nonnegative(lambda) || !lattice_member(lambda, S.group)) return std::nullopt;
    IntVec target(S.dim());
    for (int i = 0; i < S.dim(); ++i) {
        Rat scaled = Rat(S.delta) * lambda[i];
        if (!is_integral(scaled)) return std::nullopt; // outside (1/delta)Z^d
        target[i] = scaled.get_num();
    }
    return target;
}

} // namespace

MembershipCertificate member(const AffineSemigroup& S, const IntVec& x) {
    auto lambda = lambda_of(S, x);
    if (!lambda) return {};
    auto target = search_target(S, *lambda);
    if (!target) return {};
    MemberSearch search(S);
    if (!search.solve(*target)) return {};
    return {search.extract(*target)};
}

struct MemberTable::Impl {
    const AffineSemigroup& S;
    MemberSearch search;

    explicit Impl(const AffineSemigroup& S_) : S(S_), search(S_) {}
};

MemberTable::MemberTable(const AffineSemigroup& S) : impl_(std::make_unique<Impl>(S)) {}
MemberTable::~MemberTable() = default;
MemberTable::MemberTable(MemberTable&&) noexcept = default;

bool MemberTable::contains_lambda(const RatVec& v) {
    auto target = search_target(impl_->S, v);
    return target && impl_->search.solve(*target);
}

bool MemberTable::contains(const IntVec& x) {
    auto lambda = lambda_of(impl_->S, x);
    return lambda && contains_lambda(*lambda);
}

bool group_member(const AffineSemigroup& S, const IntVec& x) {
    auto lambda = lambda_of(S, x);
    return lambda && lattice_member(*lambda, S.group);
}

bool cone_member(const AffineSemigroup& S, const IntVec& x) {
    auto lambda = lambda_of(S, x);
    return lambda && all_nonnegative(*lambda);
}

} // namespace semicm
