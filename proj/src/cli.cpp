#include "gcn/cli.hpp"

#include "gcn/dcoeff.hpp"
#include "gcn/jacobi.hpp"
#include "gcn/reduced.hpp"
#include "gcn/subalg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <memory>
#include <optional>
#include <ostream>

namespace gcn::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Case {
    Json params = Json::object();
    bool pass = true;
    Json detail = Json::object();
    std::string text;  // overrides the generated text line when set
};

struct Suite {
    std::string name;
    bool verification = false;
    std::vector<Case> cases;
};

// ------------------------------------------------------------------ rendering

std::string scalar_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string kv_text(const Json& obj)
{
    std::string out;
    for (const auto& [k, v] : obj.items()) {
        if (!out.empty())
            out += ' ';
        out += k + "=" + scalar_text(v);
    }
    return out;
}

void render(const Suite& s, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        Json cases = Json::array();
        for (const auto& c : s.cases) {
            Json j;
            j["params"] = c.params;
            j["pass"] = c.pass;
            j["detail"] = c.detail;
            cases.push_back(std::move(j));
        }
        Json doc;
        doc["schema"] = 1;
        doc["suite"] = s.name;
        doc["cases"] = std::move(cases);
        out << doc.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        if (s.cases.empty())
            return;
        std::vector<std::string> header;
        for (const auto& [k, v] : s.cases.front().params.items())
            header.push_back(k);
        for (const auto& [k, v] : s.cases.front().detail.items())
            header.push_back(k);
        if (s.verification)
            header.push_back("pass");
        for (std::size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << '\n';
        for (const auto& c : s.cases) {
            std::vector<std::string> row;
            for (const auto& [k, v] : c.params.items())
                row.push_back(scalar_text(v));
            for (const auto& [k, v] : c.detail.items())
                row.push_back(scalar_text(v));
            if (s.verification)
                row.push_back(c.pass ? "true" : "false");
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(row[i]);
            out << '\n';
        }
        return;
    }
    for (const auto& c : s.cases) {
        std::string line = c.text.empty() ? kv_text(c.params) + "  " + kv_text(c.detail) : c.text;
        if (s.verification)
            line = std::string(c.pass ? "PASS " : "FAIL ") + line;
        out << line << '\n';
    }
    if (s.verification) {
        std::size_t failed = 0;
        for (const auto& c : s.cases)
            failed += c.pass ? 0 : 1;
        out << s.name << ": " << s.cases.size() - failed << "/" << s.cases.size() << " passed\n";
    }
}

// ------------------------------------------------------------------ helpers

std::string sign_text(Sign s) { return std::string(1, sign_char(s)); }

Json report_detail(const Report& r)
{
    Json d;
    d["checked"] = r.checked;
    d["violations"] = r.violations.size();
    if (!r.violations.empty()) {
        const auto& v = r.violations.front();
        d["first"] = v.check + " (" + std::to_string(v.i) + ", " + std::to_string(v.j) + ") power "
                     + std::to_string(v.power) + ": " + v.element;
    }
    return d;
}

Json check_detail(const CheckReport& r)
{
    Json d;
    d["checked"] = r.checked;
    d["failures"] = r.failures.size();
    if (!r.failures.empty())
        d["first"] = r.failures.front();
    return d;
}

std::vector<Rat> parse_rat_list(const std::string& text)
{
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos)
            end = text.size();
        std::string item = text.substr(start, end - start);
        if (!item.empty())
            out.push_back(parse_rat(item));
        start = end + 1;
    }
    return out;
}

struct FamilyFilter {
    std::string sign;
    std::optional<unsigned> S;
    std::optional<std::size_t> k;
    std::string star;
    std::optional<std::size_t> n;
};

Sign to_sign(const std::string& s) { return s == "+" || s == "plus" ? Sign::Plus : Sign::Minus; }

Antiinvolution make_star(const std::string& name, std::size_t n)
{
    if (name == "symplectic")
        return Antiinvolution::symplectic(n);
    return Antiinvolution::transpose(n);
}

// Explicit flags pick one family; missing flags sweep the desk-scale range
// S <= 3, N <= 2, every k, transpose and (even N) symplectic.
std::vector<SubalgebraSpec> families(const FamilyFilter& f)
{
    std::vector<Sign> signs = f.sign.empty() ? std::vector<Sign>{Sign::Plus, Sign::Minus}
                                             : std::vector<Sign>{to_sign(f.sign)};
    unsigned s_lo = f.S.value_or(0);
    unsigned s_hi = f.S.value_or(3);
    std::size_t n_lo = f.n.value_or(1);
    std::size_t n_hi = f.n.value_or(2);
    std::vector<SubalgebraSpec> out;
    for (Sign sign : signs)
        for (unsigned S = s_lo; S <= s_hi; ++S)
            for (std::size_t n = n_lo; n <= n_hi; ++n) {
                if (f.k) {
                    out.push_back(SubalgebraSpec::rank_ideal(sign, S, *f.k, n));
                    continue;
                }
                if (!f.star.empty()) {
                    out.push_back(SubalgebraSpec::star(sign, S, make_star(f.star, n)));
                    continue;
                }
                for (std::size_t k = 0; k <= n; ++k)
                    out.push_back(SubalgebraSpec::rank_ideal(sign, S, k, n));
                out.push_back(SubalgebraSpec::star(sign, S, Antiinvolution::transpose(n)));
                if (n % 2 == 0)
                    out.push_back(SubalgebraSpec::star(sign, S, Antiinvolution::symplectic(n)));
            }
    return out;
}

Json family_params(const SubalgebraSpec& s)
{
    Json p;
    p["sign"] = sign_text(s.sign);
    p["S"] = s.S;
    p["N"] = s.n;
    if (s.is_star())
        p["star"] = std::get<Antiinvolution>(s.variant).name();
    else
        p["k"] = std::get<RankIdeal>(s.variant).k;
    return p;
}

// ------------------------------------------------------------------ subcommands

Suite cmd_basis(const MPoly& sigma, unsigned n_max, const std::string& coords)
{
    Suite s{"basis", false, {}};
    bool y = coords == "y";
    for (unsigned n = 0; n <= n_max; ++n) {
        MPoly p = y ? r_basis(sigma, n) : q_basis(sigma, n);
        Case c;
        c.params["n"] = n;
        c.detail[y ? "R" : "Q"] = p.str();
        c.text = std::string(y ? "R_" : "Q_") + std::to_string(n) + " = " + p.str();
        s.cases.push_back(std::move(c));
    }
    return s;
}

Suite cmd_bracket(const PolyMatrix& a, const PolyMatrix& b, std::optional<unsigned> product)
{
    require_same_size(a.n(), b.n(), "bracket");
    GcElem ga(a);
    GcElem gb(b);
    Suite s{"bracket", false, {}};
    if (product) {
        Case c;
        c.params["product"] = *product;
        std::string v = nth_product(ga, gb, *product).str();
        c.detail["value"] = v;
        c.text = "a_(" + std::to_string(*product) + ")b = " + v;
        s.cases.push_back(std::move(c));
        return s;
    }
    LambdaPoly br = lambda_bracket(ga, gb);
    for (const auto& [k, m] : br.coeffs()) {
        Case c;
        c.params["power"] = k;
        c.detail["coefficient"] = m.str();
        c.text = "l^" + std::to_string(k) + ": " + m.str();
        s.cases.push_back(std::move(c));
    }
    return s;
}

Suite cmd_reduce(const PolyMatrix& a, const MPoly& sigma)
{
    GcElem ga(a);
    VirasoroElem L = VirasoroElem::from_sigma(ga.n(), sigma);
    auto parts = decompose(ga, L);
    Suite s{"reduce", true, {}};
    bool round_trip = reconstruct(parts, L) == ga;
    for (const auto& [i, r] : parts) {
        Case c;
        c.params["d_power"] = i;
        c.pass = round_trip;
        c.detail["reduced"] = r.str();
        c.text = "d^" + std::to_string(i) + ": " + r.str();
        s.cases.push_back(std::move(c));
    }
    if (parts.empty()) {
        Case c;
        c.params["d_power"] = 0;
        c.detail["reduced"] = "0";
        c.text = "0";
        s.cases.push_back(std::move(c));
    }
    return s;
}

Suite cmd_dtable(unsigned m_max, const MPoly& sigma)
{
    Suite s{"dtable", false, {}};
    for (unsigned m = 0; m <= m_max; ++m)
        for (unsigned n = 0; n <= m_max; ++n)
            for (unsigned k = 0; k <= m + n; ++k) {
                Case c;
                c.params["m"] = m;
                c.params["n"] = n;
                c.params["k"] = k;
                c.detail["d"] = d_coeff(m, n, k, sigma).str();
                s.cases.push_back(std::move(c));
            }
    return s;
}

Suite cmd_jacobi_poly(const MPoly& alpha, const MPoly& beta, unsigned n_max)
{
    Suite s{"jacobi-poly", false, {}};
    for (unsigned n = 0; n <= n_max; ++n) {
        Case c;
        c.params["n"] = n;
        std::string p = jacobi_poly({alpha, beta}, n).str();
        c.detail["P"] = p;
        c.text = "P_" + std::to_string(n) + " = " + p;
        s.cases.push_back(std::move(c));
    }
    return s;
}

Suite cmd_jacobi_parity(std::optional<unsigned> S_only, unsigned n_max)
{
    Suite s{"jacobi-parity", true, {}};
    unsigned lo = S_only.value_or(0);
    unsigned hi = S_only.value_or(5);
    for (unsigned S = lo; S <= hi; ++S)
        for (unsigned n = S; n <= n_max; ++n) {
            ParityResult r = parity_factorization(S, n);
            Case c;
            c.params["S"] = S;
            c.params["n"] = n;
            c.pass = r.ok;
            c.detail["quotient"] = r.quotient.str();
            c.detail["parity"] = r.parity;
            c.detail["q_version"] = r.q_version;
            if (!r.detail.empty())
                c.detail["failure"] = r.detail;
            s.cases.push_back(std::move(c));
        }
    return s;
}

Suite cmd_jacobi_check(unsigned n_max)
{
    Suite s{"jacobi-check", true, {}};
    auto add = [&](const char* check, unsigned n, bool ok) {
        Case c;
        c.params["check"] = check;
        c.params["n"] = n;
        c.pass = ok;
        s.cases.push_back(std::move(c));
    };
    auto sym = JacobiParams::symbolic();
    auto mp = JacobiParams::minus_plus(var(Var::S));
    for (unsigned n = 0; n <= n_max; ++n) {
        add("ode", n, check_ode(sym, n) && check_ode(mp, n));
        add("symmetry", n, check_symmetry(sym, n) && check_symmetry(mp, n));
        add("leading", n, check_leading_coefficient(sym, n) && check_leading_coefficient(mp, n));
        add("bridge", n, qn_jacobi_relation(var(Var::S), n));
    }
    add("generating", n_max, generating_check(var(Var::S), n_max));
    return s;
}

Suite cmd_dcoeff_table(unsigned n_max)
{
    Suite s{"dcoeff-table", false, {}};
    for (const auto& e : d_table(n_max)) {
        Case c;
        c.params["m"] = e.m;
        c.params["n"] = e.n;
        c.params["l"] = e.l;
        c.detail["D"] = e.value.str();
        s.cases.push_back(std::move(c));
    }
    return s;
}

template <class F>
Suite pair_suite(const char* name, unsigned n_max, bool ordered, F check)
{
    Suite s{name, true, {}};
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned m = 0; m <= (ordered ? n : n_max); ++m) {
            Case c;
            c.params["m"] = ordered ? m : n;
            c.params["n"] = ordered ? n : m;
            check(c, ordered ? m : n, ordered ? n : m);
            s.cases.push_back(std::move(c));
        }
    return s;
}

Suite cmd_dcoeff_rank(const std::string& xs_text, const std::string& ys_text, std::optional<std::size_t> d)
{
    auto xs = parse_rat_list(xs_text);
    auto ys = parse_rat_list(ys_text);
    std::size_t dim = d.value_or(xs.size() + ys.size());
    auto m = rank_matrix(xs, ys, dim);
    Suite s{"dcoeff-rank", true, {}};
    Case c;
    c.params["xs"] = xs_text;
    c.params["ys"] = ys_text;
    c.params["d"] = dim;
    c.detail["rank"] = rank(m);
    c.pass = rank_certificate(xs, ys, dim);
    s.cases.push_back(std::move(c));
    return s;
}

Suite cmd_verify(const std::string& what, const FamilyFilter& f, unsigned deg, unsigned m_max)
{
    Suite s{"verify-" + what, true, {}};
    if (what == "submodule") {
        if (!f.sign.empty() && to_sign(f.sign) != Sign::Minus)
            throw CLI::ValidationError("--sign", "the submodule check needs sign -");
        if (!f.star.empty())
            throw CLI::ValidationError("--star", "the submodule check needs a rank family");
        unsigned s_lo = f.S.value_or(0);
        unsigned s_hi = f.S.value_or(3);
        std::size_t n_lo = f.n.value_or(2);
        std::size_t n_hi = f.n.value_or(3);
        for (unsigned S = s_lo; S <= s_hi; ++S)
            for (std::size_t n = n_lo; n <= n_hi; ++n)
                for (std::size_t k = f.k.value_or(1); k <= f.k.value_or(n - 1); ++k) {
                    auto spec = SubalgebraSpec::rank_ideal(Sign::Minus, S, k, n);
                    auto r = verify_submodule(spec, deg);
                    Case c;
                    c.params = family_params(spec);
                    c.params["deg"] = deg;
                    c.pass = r.pass();
                    c.detail = report_detail(r);
                    c.detail["proper"] = r.proper;
                    s.cases.push_back(std::move(c));
                }
        return s;
    }
    for (const auto& spec : families(f)) {
        Report r;
        if (what == "closure")
            r = verify_closure(spec, deg);
        else if (what == "normalized")
            r = verify_normalized(spec, deg);
        else
            r = verify_reduced_family(spec, deg, m_max);
        Case c;
        c.params = family_params(spec);
        c.params["deg"] = deg;
        c.pass = r.pass();
        c.detail = report_detail(r);
        s.cases.push_back(std::move(c));
    }
    return s;
}

int exit_code(const Suite& s)
{
    for (const auto& c : s.cases)
        if (!c.pass)
            return kFail;
    return kPass;
}

}  // namespace

// ------------------------------------------------------------------ parsing

PolyMatrix parse_matrix(std::string_view text, std::size_t n)
{
    std::size_t open = text.find_first_not_of(" \t");
    if (open == std::string_view::npos || text[open] != '[') {
        MPoly p = parse_poly(text);
        return PolyMatrix::scalar(n == 0 ? 1 : n, p);
    }
    std::size_t close = text.find_last_not_of(" \t");
    if (text[close] != ']')
        throw ParseError(close + 1, "expected ']' at the end of a matrix");
    std::vector<std::vector<MPoly>> rows(1);
    std::size_t start = open + 1;
    for (std::size_t i = open + 1; i <= close; ++i) {
        char ch = text[i];
        if (ch != ',' && ch != ';' && ch != ']')
            continue;
        std::string_view cell = text.substr(start, i - start);
        try {
            rows.back().push_back(parse_poly(cell));
        } catch (const ParseError& e) {
            throw ParseError(start + e.column(), e.reason());
        }
        if (ch == ';')
            rows.emplace_back();
        start = i + 1;
    }
    std::size_t size = rows.size();
    for (const auto& r : rows)
        if (r.size() != size)
            throw std::invalid_argument("matrix must be square: " + std::to_string(size) + " rows but a row of "
                                        + std::to_string(r.size()));
    if (n != 0 && n != size)
        throw std::invalid_argument("matrix has size " + std::to_string(size) + ", expected " + std::to_string(n));
    PolyMatrix m(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            m(i, j) = rows[i][j];
    return m;
}

MPoly parse_sigma(std::string_view text)
{
    MPoly p = parse_poly(text);
    if (!p.only_uses({Var::S}))
        throw std::invalid_argument("sigma may only mention s, got '" + std::string(text) + "'");
    return p;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations in the general Lie conformal algebra gc_N", "gcn"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.fallthrough();

    std::string sigma_text = "s";
    unsigned n_max = 3;

    auto* basis = app.add_subcommand("basis", "Quasi-primary basis Q_n (or R_n with --coords y)");
    std::string coords = "x";
    basis->add_option("--sigma", sigma_text, "s, a polynomial in s, or a rational");
    basis->add_option("--n-max", n_max, "Largest n");
    basis->add_option("--coords", coords)->check(CLI::IsMember({"x", "y"}));

    auto* bracket = app.add_subcommand("bracket", "lambda-bracket [a l b] of two elements");
    std::string a_text;
    std::string b_text;
    std::size_t size = 0;
    std::optional<unsigned> product;
    bracket->add_option("--a", a_text, "Matrix \"[p, q; r, t]\" or a polynomial (times Id)")->required();
    bracket->add_option("--b", b_text)->required();
    bracket->add_option("--N", size, "Size for polynomial operands");
    bracket->add_option("--product", product, "Only the k-th product a_(k)b");

    auto* reduce = app.add_subcommand("reduce", "Decomposition a = sum d^i a^i into quasi-primaries");
    reduce->add_option("--a", a_text)->required();
    reduce->add_option("--N", size);
    reduce->add_option("--sigma", sigma_text);

    auto* dtable = app.add_subcommand("dtable", "Coefficients d^(sigma)_{m,n,k}");
    unsigned m_max = 4;
    dtable->add_option("--m-max", m_max, "Largest m and n");
    dtable->add_option("--sigma", sigma_text);

    auto* jacobi = app.add_subcommand("jacobi", "Jacobi polynomials and their identities");
    jacobi->require_subcommand(1);
    std::string alpha_text = "a";
    std::string beta_text = "b";
    std::optional<unsigned> S_opt;
    auto* jpoly = jacobi->add_subcommand("poly", "P_n^{(alpha,beta)}(y)");
    jpoly->add_option("--alpha", alpha_text);
    jpoly->add_option("--beta", beta_text);
    jpoly->add_option("--n-max", n_max);
    auto* jparity = jacobi->add_subcommand("parity", "Divisibility of P_n^{(-S,S)} by (y-1)^S");
    unsigned parity_n_max = 15;
    jparity->add_option("--S", S_opt, "Single S (default 0..5)");
    jparity->add_option("--n-max", parity_n_max);
    auto* jcheck = jacobi->add_subcommand("check", "ODE, symmetry, leading coefficient, bridge, generating function");
    unsigned check_n_max = 10;
    jcheck->add_option("--n-max", check_n_max);

    auto* dcoeff = app.add_subcommand("dcoeff", "D(sigma;m,n,l) tables and their laws");
    dcoeff->require_subcommand(1);
    unsigned d_n_max = 6;
    auto* dtab = dcoeff->add_subcommand("table", "D(sigma;m,n,l)");
    dtab->add_option("--n-max", d_n_max);
    auto* dfacts = dcoeff->add_subcommand("facts", "Symmetry and vanishing at integer sigma");
    dfacts->add_option("--n-max", d_n_max);
    auto* dexpand = dcoeff->add_subcommand("expand", "Product of Jacobi polynomials at 2x+1");
    dexpand->add_option("--n-max", d_n_max);
    auto* dcor = dcoeff->add_subcommand("corollary", "Divisibility and evenness pattern");
    dcor->add_option("--n-max", d_n_max);
    auto* drank = dcoeff->add_subcommand("rank", "Rank of the Vandermonde / odd-power matrix");
    std::string xs_text;
    std::string ys_text;
    std::optional<std::size_t> d_opt;
    drank->add_option("--xs", xs_text, "Comma separated rationals");
    drank->add_option("--ys", ys_text, "Comma separated rationals");
    drank->add_option("--d", d_opt);

    auto* verify = app.add_subcommand("verify", "Subalgebra family checks");
    verify->require_subcommand(1);
    FamilyFilter filter;
    unsigned deg = 4;
    unsigned reduced_max = 5;
    std::vector<CLI::App*> verifies;
    for (const char* name : {"closure", "normalized", "submodule", "reduced-family"}) {
        auto* v = verify->add_subcommand(name);
        v->add_option("--sign", filter.sign)->check(CLI::IsMember({"+", "-", "plus", "minus"}));
        v->add_option("--S", filter.S);
        auto* k = v->add_option("--k", filter.k);
        auto* star = v->add_option("--star", filter.star)->check(CLI::IsMember({"transpose", "symplectic"}));
        k->excludes(star);
        v->add_option("--N", filter.n);
        v->add_option("--deg", deg, "Truncation degree");
        if (std::string(name) == "reduced-family")
            v->add_option("--m-max", reduced_max, "Largest reduced degree for the product rule");
        verifies.push_back(v);
    }

    std::vector<const char*> argv{"gcn"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kPass : kUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        Suite s;
        if (*basis) {
            s = cmd_basis(parse_sigma(sigma_text), n_max, coords);
        } else if (*bracket) {
            PolyMatrix a = parse_matrix(a_text, size);
            s = cmd_bracket(a, parse_matrix(b_text, size == 0 ? a.n() : size), product);
        } else if (*reduce) {
            s = cmd_reduce(parse_matrix(a_text, size), parse_sigma(sigma_text));
        } else if (*dtable) {
            s = cmd_dtable(m_max, parse_sigma(sigma_text));
        } else if (*jpoly) {
            s = cmd_jacobi_poly(parse_poly(alpha_text), parse_poly(beta_text), n_max);
        } else if (*jparity) {
            s = cmd_jacobi_parity(S_opt, parity_n_max);
        } else if (*jcheck) {
            s = cmd_jacobi_check(check_n_max);
        } else if (*dtab) {
            s = cmd_dcoeff_table(d_n_max);
        } else if (*dfacts) {
            s = pair_suite("dcoeff-facts", d_n_max, true, [](Case& c, unsigned m, unsigned n) {
                auto r = verify_facts(m, n);
                c.pass = r.pass();
                c.detail = check_detail(r);
            });
        } else if (*dexpand) {
            s = pair_suite("dcoeff-expand", d_n_max, false, [](Case& c, unsigned m, unsigned n) {
                c.pass = product_expansion_check(m, n) && d_relation_check(m, n);
            });
        } else if (*dcor) {
            s = pair_suite("dcoeff-corollary", d_n_max, true, [](Case& c, unsigned m, unsigned n) {
                auto r = corollary_check(m, n);
                c.pass = r.pass();
                c.detail = check_detail(r);
            });
        } else if (*drank) {
            s = cmd_dcoeff_rank(xs_text, ys_text, d_opt);
        } else {
            for (auto* v : verifies)
                if (*v)
                    s = cmd_verify(v->get_name(), filter, deg, reduced_max);
        }
        render(s, format, out);
        return exit_code(s);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace gcn::cli
