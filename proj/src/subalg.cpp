#include "gcn/subalg.hpp"

#include "gcn/reduced.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcn {

namespace {

MPoly dx_monomial(unsigned a, unsigned b)
{
    return MPoly::term(Monomial::of(Var::D, a) * Monomial::of(Var::X, b), 1);
}

// x^S, or (x+∂)^S for the (-) families.
MPoly factor(const SubalgebraSpec& spec)
{
    MPoly base = spec.sign == Sign::Plus ? var(Var::X) : var(Var::X) + var(Var::D);
    return base.pow(spec.S);
}

bool x_power_divides(const MPoly& p, unsigned S)
{
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [S](const MPoly::Term& t) { return t.first[Var::X] >= S; });
}

std::optional<MPoly> divide_by_factor(const SubalgebraSpec& spec, const MPoly& p)
{
    if (spec.S == 0)
        return p;
    if (spec.sign == Sign::Plus) {
        if (!x_power_divides(p, spec.S))
            return std::nullopt;
        return divide(p, factor(spec), Var::X).quotient;
    }
    auto r = divide(p, factor(spec), Var::X);
    if (!r.exact())
        return std::nullopt;
    return r.quotient;
}

// P ↦ P*(∂, -∂-x)
PolyMatrix star_reflect(const Antiinvolution& inv, const PolyMatrix& p)
{
    return inv.apply(p).substitute({{Var::X, -var(Var::D) - var(Var::X)}});
}

MPoly star_sign(unsigned S) { return S % 2 == 1 ? MPoly(1) : MPoly(-1); }

bool same_up_to_sign(const PolyMatrix& a, const PolyMatrix& b) { return a == b || a == -b; }

Report merge(std::vector<std::vector<Violation>> parts, std::size_t checked)
{
    Report r;
    r.checked = checked;
    for (auto& p : parts)
        for (auto& v : p)
            r.violations.push_back(std::move(v));
    return r;
}

RatMatrix unit_rat(std::size_t n, std::size_t i, std::size_t j)
{
    RatMatrix m(n, std::vector<Rat>(n, 0));
    m[i][j] = 1;
    return m;
}

std::vector<Rat> flatten(const RatMatrix& m)
{
    std::vector<Rat> v;
    for (const auto& row : m)
        v.insert(v.end(), row.begin(), row.end());
    return v;
}

}  // namespace

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// ---------------------------------------------------------------- Antiinvolution

Antiinvolution::Antiinvolution(RatMatrix b, RatMatrix binv, std::string name)
    : b_(std::move(b)), binv_(std::move(binv)), name_(std::move(name))
{
}

Antiinvolution Antiinvolution::transpose(std::size_t n)
{
    RatMatrix id(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        id[i][i] = 1;
    return Antiinvolution(id, id, "transpose");
}

Antiinvolution Antiinvolution::symplectic(std::size_t n)
{
    if (n == 0 || n % 2 != 0)
        throw std::invalid_argument("symplectic antiinvolution needs even N, got " + std::to_string(n));
    RatMatrix j(n, std::vector<Rat>(n, 0));
    std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i) {
        j[i][h + i] = 1;
        j[h + i][i] = -1;
    }
    return custom(j, "symplectic");
}

Antiinvolution Antiinvolution::custom(const RatMatrix& b, std::string name)
{
    std::size_t n = b.size();
    if (n == 0)
        throw std::invalid_argument("antiinvolution matrix is empty");
    for (const auto& row : b)
        if (row.size() != n)
            throw std::invalid_argument("antiinvolution matrix must be square");
    bool sym = true;
    bool skew = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            sym = sym && b[i][j] == b[j][i];
            skew = skew && b[i][j] == -b[j][i];
        }
    if (!sym && !skew)
        throw std::invalid_argument("antiinvolution matrix must satisfy B^T = B or B^T = -B");
    auto inv = inverse(b);
    if (!inv)
        throw std::invalid_argument("antiinvolution matrix must be invertible");
    return Antiinvolution(b, *inv, std::move(name));
}

PolyMatrix Antiinvolution::apply(const PolyMatrix& a) const
{
    require_same_size(n(), a.n(), "antiinvolution");
    return to_poly(b_) * a.transpose() * to_poly(binv_);
}

RatMatrix Antiinvolution::apply(const RatMatrix& a) const
{
    std::size_t n = b_.size();
    require_same_size(n, a.size(), "antiinvolution");
    RatMatrix t(n, std::vector<Rat>(n, 0));
    // B Aᵀ
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                t[i][j] += b_[i][l] * a[j][l];
    RatMatrix r(n, std::vector<Rat>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                r[i][j] += t[i][l] * binv_[l][j];
    return r;
}

// ---------------------------------------------------------------- IkN

PolyMatrix IkN::matrix() const
{
    PolyMatrix m(n);
    for (std::size_t i = 0; i < k; ++i)
        m(i, i) = 1;
    return m;
}

PolyMatrix IkN::complement() const { return PolyMatrix::identity(n) - matrix(); }

// ---------------------------------------------------------------- SubalgebraSpec

SubalgebraSpec SubalgebraSpec::rank_ideal(Sign sign, unsigned S, std::size_t k, std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("N must be positive");
    if (k > n)
        throw std::invalid_argument("k = " + std::to_string(k) + " exceeds N = " + std::to_string(n));
    return {sign, S, n, RankIdeal{k}};
}

SubalgebraSpec SubalgebraSpec::star(Sign sign, unsigned S, const Antiinvolution& inv)
{
    return {sign, S, inv.n(), inv};
}

MPoly SubalgebraSpec::sigma() const { return sign == Sign::Plus ? MPoly(int(S)) : MPoly(-int(S)); }

VirasoroElem SubalgebraSpec::virasoro() const { return VirasoroElem::from_sigma(n, sigma()); }

std::string SubalgebraSpec::describe() const
{
    std::string out = "sign=";
    out += sign_char(sign);
    out += " S=" + std::to_string(S) + " N=" + std::to_string(n);
    if (is_star())
        out += " star=" + std::get<Antiinvolution>(variant).name();
    else
        out += " k=" + std::to_string(std::get<RankIdeal>(variant).k);
    return out;
}

// ---------------------------------------------------------------- membership

bool membership(const SubalgebraSpec& spec, const PolyMatrix& a)
{
    require_same_size(spec.n, a.n(), "membership");
    std::size_t n = spec.n;
    if (const auto* ri = std::get_if<RankIdeal>(&spec.variant)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::size_t idx = spec.sign == Sign::Plus ? j : i;
                if (idx >= ri->k && !a(i, j).is_zero() && !divide_by_factor(spec, a(i, j)))
                    return false;
            }
        return true;
    }
    const auto& inv = std::get<Antiinvolution>(spec.variant);
    PolyMatrix q(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto d = divide_by_factor(spec, a(i, j));
            if (!d)
                return false;
            q(i, j) = *d;
        }
    return q == star_sign(spec.S) * star_reflect(inv, q);
}

std::vector<GcElem> spanning_set(const SubalgebraSpec& spec, unsigned max_degree)
{
    std::size_t n = spec.n;
    MPoly f = factor(spec);
    std::vector<GcElem> out;
    if (const auto* ri = std::get_if<RankIdeal>(&spec.variant)) {
        for (unsigned deg = 0; deg <= max_degree; ++deg)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::size_t idx = spec.sign == Sign::Plus ? j : i;
                    bool scaled = idx >= ri->k;
                    unsigned extra = scaled ? spec.S : 0;
                    if (deg < extra)
                        continue;
                    for (unsigned a = 0; a <= deg - extra; ++a) {
                        MPoly e = dx_monomial(a, deg - extra - a);
                        out.emplace_back(PolyMatrix::unit(n, i, j, scaled ? f * e : e));
                    }
                }
        return out;
    }
    const auto& inv = std::get<Antiinvolution>(spec.variant);
    if (max_degree < spec.S)
        return out;
    std::vector<PolyMatrix> seen;
    for (unsigned deg = 0; deg <= max_degree - spec.S; ++deg)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (unsigned a = 0; a <= deg; ++a) {
                    PolyMatrix p = PolyMatrix::unit(n, i, j, dx_monomial(a, deg - a));
                    PolyMatrix q = p + star_sign(spec.S) * star_reflect(inv, p);
                    if (q.is_zero())
                        continue;
                    if (std::any_of(seen.begin(), seen.end(), [&](const PolyMatrix& s) { return same_up_to_sign(s, q); }))
                        continue;
                    seen.push_back(q);
                    out.emplace_back(f * q);
                }
    return out;
}

// ---------------------------------------------------------------- verifiers

Report verify_closure_of(const SubalgebraSpec& spec, const std::vector<GcElem>& set, Exec exec)
{
    std::size_t m = set.size();
    auto parts = index_map<std::vector<Violation>>(
        m * m,
        [&](std::size_t p) {
            std::size_t i = p / m;
            std::size_t j = p % m;
            std::vector<Violation> bad;
            LambdaPoly br = lambda_bracket(set[i], set[j]);
            for (const auto& [k, c] : br.coeffs())
                if (!membership(spec, c))
                    bad.push_back({"closure", i, j, k, c.str()});
            return bad;
        },
        exec);
    return merge(std::move(parts), m * m);
}

Report verify_closure(const SubalgebraSpec& spec, unsigned max_degree, Exec exec)
{
    return verify_closure_of(spec, spanning_set(spec, max_degree), exec);
}

Report verify_normalized(const SubalgebraSpec& spec, unsigned max_degree, Exec exec)
{
    auto set = spanning_set(spec, max_degree);
    VirasoroElem L = spec.virasoro();
    auto parts = index_map<std::vector<Violation>>(
        set.size(),
        [&](std::size_t i) {
            std::vector<Violation> bad;
            LambdaPoly br = lambda_bracket(L.elem(), set[i]);
            for (unsigned k = 0; k <= 2; ++k) {
                PolyMatrix c = Rat(factorial(k)) * br.coefficient(k);
                if (!membership(spec, c))
                    bad.push_back({"normalized", i, 0, k, c.str()});
            }
            return bad;
        },
        exec);
    return merge(std::move(parts), set.size() * 3);
}

SubmoduleReport verify_submodule(const SubalgebraSpec& spec, unsigned max_degree, Exec exec)
{
    const auto* ri = std::get_if<RankIdeal>(&spec.variant);
    if (ri == nullptr || spec.sign != Sign::Minus)
        throw std::invalid_argument("verify_submodule needs a (-) rank-ideal family");
    std::size_t n = spec.n;
    std::size_t k = ri->k;
    auto set = spanning_set(spec, max_degree);
    // generators of U: e_i ∂^a (i < k), e_i ∂^{S+a} (i >= k)
    std::vector<ModVec> us;
    for (std::size_t i = 0; i < n; ++i)
        for (unsigned a = 0; a <= max_degree; ++a) {
            unsigned e = (i < k ? 0 : spec.S) + a;
            us.push_back(ModVec::unit(n, i, MPoly::term(Monomial::of(Var::D, e), 1)));
        }
    auto in_u = [&](const MPoly& p) {
        return std::all_of(p.terms().begin(), p.terms().end(),
                           [&](const MPoly::Term& t) { return t.first[Var::D] >= spec.S; });
    };
    std::size_t m = us.size();
    auto parts = index_map<std::vector<Violation>>(
        set.size() * m,
        [&](std::size_t p) {
            std::size_t ia = p / m;
            std::size_t iu = p % m;
            std::vector<Violation> bad;
            ModVec r = lambda_action(set[ia], us[iu]);
            for (std::size_t c = k; c < n; ++c)
                for (auto& [pw, coef] : r.entries[c].split(Var::L))
                    if (!in_u(coef))
                        bad.push_back({"submodule", ia, iu, pw, coef.str()});
            return bad;
        },
        exec);
    SubmoduleReport out;
    static_cast<Report&>(out) = merge(std::move(parts), set.size() * m);
    out.proper = k != n && spec.S != 0;
    return out;
}

// ---------------------------------------------------------------- reduced ladders

bool MatrixSpace::contains(const RatMatrix& a) const
{
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0)
                continue;
            switch (kind) {
            case SpaceKind::Zero:
                return false;
            case SpaceKind::LeftIdeal:
                if (j >= k)
                    return false;
                break;
            case SpaceKind::RightIdeal:
                if (i >= k)
                    return false;
                break;
            default:
                break;
            }
        }
    if (kind == SpaceKind::Eigen) {
        RatMatrix s = inv->apply(a);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (s[i][j] != eigen_sign * a[i][j])
                    return false;
    }
    return true;
}

std::vector<RatMatrix> MatrixSpace::basis() const
{
    std::vector<RatMatrix> out;
    if (kind == SpaceKind::Eigen) {
        RatMatrix rows;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                RatMatrix e = unit_rat(n, i, j);
                RatMatrix s = inv->apply(e);
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        e[r][c] += eigen_sign * s[r][c];
                rows.push_back(flatten(e));
                if (rank(rows) == rows.size())
                    out.push_back(e);
                else
                    rows.pop_back();
            }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatMatrix e = unit_rat(n, i, j);
            if (contains(e))
                out.push_back(e);
        }
    return out;
}

std::string MatrixSpace::describe() const
{
    switch (kind) {
    case SpaceKind::Zero:
        return "0";
    case SpaceKind::Full:
        return "Mat";
    case SpaceKind::LeftIdeal:
        return "Mat*I_" + std::to_string(k);
    case SpaceKind::RightIdeal:
        return "I_" + std::to_string(k) + "*Mat";
    case SpaceKind::Eigen:
        return std::string("A*=") + (eigen_sign > 0 ? "+A" : "-A");
    }
    return "?";
}

MatrixSpace reduced_family(const SubalgebraSpec& spec, unsigned degree)
{
    MatrixSpace v;
    v.n = spec.n;
    if (spec.is_star()) {
        if (degree < spec.S) {
            v.kind = SpaceKind::Zero;
        } else {
            v.kind = SpaceKind::Eigen;
            v.eigen_sign = degree % 2 == 1 ? 1 : -1;
            v.inv = std::get<Antiinvolution>(spec.variant);
        }
        return v;
    }
    if (degree >= spec.S)
        return v;
    v.k = std::get<RankIdeal>(spec.variant).k;
    v.kind = spec.sign == Sign::Plus ? SpaceKind::LeftIdeal : SpaceKind::RightIdeal;
    return v;
}

Report verify_reduced_family(const SubalgebraSpec& spec, unsigned max_degree, unsigned max_reduced_degree)
{
    Report r;
    VirasoroElem L = spec.virasoro();
    auto set = spanning_set(spec, max_degree);
    for (std::size_t i = 0; i < set.size(); ++i) {
        ReducedElem pr = project(set[i], L);
        for (const auto& [deg, mat] : pr.components()) {
            ++r.checked;
            if (!reduced_family(spec, deg).contains(to_rat(mat)))
                r.violations.push_back({"projection", i, 0, deg, mat.str()});
        }
    }
    MPoly sigma = spec.sigma();
    for (unsigned m = 0; m <= max_reduced_degree; ++m)
        for (unsigned nn = 0; nn <= max_reduced_degree; ++nn) {
            auto bm = reduced_family(spec, m).basis();
            auto bn = reduced_family(spec, nn).basis();
            for (std::size_t ia = 0; ia < bm.size(); ++ia)
                for (std::size_t ib = 0; ib < bn.size(); ++ib)
                    for (unsigned k = 0; k <= m + nn; ++k) {
                        ++r.checked;
                        ReducedElem c = reduced_product({m, to_poly(bm[ia])}, {nn, to_poly(bn[ib])}, k, sigma);
                        PolyMatrix comp = c.component(m + nn - k);
                        if (!reduced_family(spec, m + nn - k).contains(to_rat(comp)))
                            r.violations.push_back({"condition (2) m=" + std::to_string(m) + " n="
                                                        + std::to_string(nn),
                                                    ia, ib, k, comp.str()});
                    }
        }
    return r;
}

}  // namespace gcn
