#ifndef GCN_SUBALG_HPP
#define GCN_SUBALG_HPP

#include "gcn/gc.hpp"
#include "gcn/sweep.hpp"
#include "gcn/virasoro.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gcn {

enum class Sign { Plus, Minus };

char sign_char(Sign s);

/// A* = B Aᵀ B⁻¹ for an invertible rational B with Bᵀ = ±B.
class Antiinvolution {
public:
    static Antiinvolution transpose(std::size_t n);
    // J = [[0, I], [-I, 0]]; n must be even.
    static Antiinvolution symplectic(std::size_t n);
    // Throws std::invalid_argument unless B is invertible and Bᵀ = ±B.
    static Antiinvolution custom(const RatMatrix& b, std::string name = "custom");

    std::size_t n() const { return b_.size(); }
    const std::string& name() const { return name_; }
    const RatMatrix& matrix() const { return b_; }

    PolyMatrix apply(const PolyMatrix& a) const;
    RatMatrix apply(const RatMatrix& a) const;

private:
    Antiinvolution(RatMatrix b, RatMatrix binv, std::string name);
    RatMatrix b_;
    RatMatrix binv_;
    std::string name_;
};

/// I_{k,N} = diag(1,...,1,0,...,0) of rank k and its complement.
struct IkN {
    std::size_t k;
    std::size_t n;

    PolyMatrix matrix() const;
    PolyMatrix complement() const;
};

struct RankIdeal {
    std::size_t k;
};

struct SubalgebraSpec {
    Sign sign = Sign::Plus;
    unsigned S = 0;
    std::size_t n = 1;
    std::variant<RankIdeal, Antiinvolution> variant = RankIdeal{0};

    static SubalgebraSpec rank_ideal(Sign sign, unsigned S, std::size_t k, std::size_t n);
    static SubalgebraSpec star(Sign sign, unsigned S, const Antiinvolution& inv);

    bool is_star() const { return std::holds_alternative<Antiinvolution>(variant); }
    // σ = +S for the (+) families, -S for the (-) families.
    MPoly sigma() const;
    // L^{(±)}_S = (x + (1∓S)/2 ∂)·Id
    VirasoroElem virasoro() const;
    std::string describe() const;
};

bool membership(const SubalgebraSpec& spec, const PolyMatrix& a);
std::vector<GcElem> spanning_set(const SubalgebraSpec& spec, unsigned max_degree);

struct Violation {
    std::string check;
    std::size_t i;    // index of the first operand
    std::size_t j;    // index of the second operand, or the vector index
    unsigned power;   // λ power or product index
    std::string element;
};

struct Report {
    std::size_t checked = 0;
    std::vector<Violation> violations;
    bool pass() const { return violations.empty(); }
};

// Every λ-coefficient of [a λ b], a, b in the spanning set, is a member.
Report verify_closure(const SubalgebraSpec& spec, unsigned max_degree, Exec exec = Exec::Parallel);
// Same check for an arbitrary generating set against spec's membership.
Report verify_closure_of(const SubalgebraSpec& spec, const std::vector<GcElem>& set, Exec exec = Exec::Parallel);
// L_(i) a is a member for i = 0, 1, 2 and a in the spanning set.
Report verify_normalized(const SubalgebraSpec& spec, unsigned max_degree, Exec exec = Exec::Parallel);

struct SubmoduleReport : Report {
    bool proper = false;
};

// U = {(v_k, ∂^S v_{N-k})} is invariant under R^{(-)}_{S,k}. Requires a (-) rank-ideal spec.
SubmoduleReport verify_submodule(const SubalgebraSpec& spec, unsigned max_degree, Exec exec = Exec::Parallel);

enum class SpaceKind { Zero, Full, LeftIdeal, RightIdeal, Eigen };

/// A subspace V_n of Mat_N: Mat·I_k (left ideal), I_k·Mat (right ideal), or {A* = ±A}.
struct MatrixSpace {
    SpaceKind kind = SpaceKind::Full;
    std::size_t n = 1;
    std::size_t k = 0;
    int eigen_sign = 1;
    std::optional<Antiinvolution> inv;

    bool contains(const RatMatrix& a) const;
    std::vector<RatMatrix> basis() const;
    std::string describe() const;
};

// V_n of the reduced subalgebra π(R).
MatrixSpace reduced_family(const SubalgebraSpec& spec, unsigned degree);

// Projections of the spanning set land in the ladder, and the product rule
// keeps V_m x V_n inside V_{m+n-k} for m, n <= max_reduced_degree.
Report verify_reduced_family(const SubalgebraSpec& spec, unsigned max_degree, unsigned max_reduced_degree = 5);

}  // namespace gcn

#endif
