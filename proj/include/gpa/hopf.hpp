#pragma once

#include "gpa/findim.hpp"
#include "gpa/linalg.hpp"
#include "gpa/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpa {

/// Finite group, either in abelian factor form Z_{m_1} x ... x Z_{m_r}
/// (elements addressed by exponent vectors, first factor most significant)
/// or as a verified Cayley table. Element 0 is always the identity. The
/// default-constructed group is the trivial group.
class Group {
public:
    Group();

    static Group abelian(std::vector<unsigned> factors);
    static Group cyclic(unsigned n) { return abelian({n}); }
    /// Dihedral group of order 2n: rotations r^k and reflections r^k*s.
    static Group dihedral(unsigned n);
    /// Index layout: element (x, y) -> x * b.order() + y. Two factor-form
    /// groups merge back into factor form; mixed products keep a Cayley
    /// table and require the two name sets to be clash-free.
    static Group direct_product(const Group& a, const Group& b);
    /// names[0] must be the identity; the table is verified to satisfy the
    /// group axioms (associativity, identity, inverses, Latin rows).
    static Group from_cayley(std::vector<std::string> names,
                             std::vector<std::vector<size_t>> table);

    size_t order() const { return names_.size(); }
    size_t identity() const { return 0; }
    size_t mul(size_t a, size_t b) const;
    size_t inverse(size_t a) const;
    size_t power(size_t a, long e) const;
    size_t element_order(size_t a) const;

    bool is_abelian() const { return abelian_flag_; }
    bool is_central(size_t a) const;

    const std::string& element_name(size_t a) const;
    std::optional<size_t> element_by_name(std::string_view name) const;

    /// True when the group carries exponent-vector addressing (built by
    /// abelian(), or a direct product of such groups).
    bool has_factor_form() const { return factor_form_; }
    const std::vector<unsigned>& factors() const { return factors_; }
    size_t element_from_exponents(const std::vector<long>& exps) const;
    std::vector<unsigned> exponents_of(size_t a) const;

    /// Serialization in the parse_cayley_file format; round-trips.
    std::string to_cayley_file(const std::string& name = "group") const;

    bool same_table(const Group& o) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<size_t>> table_;
    std::vector<size_t> inv_;
    std::vector<bool> central_;
    std::vector<unsigned> factors_;
    bool factor_form_ = false;
    bool abelian_flag_ = false;

    void finish_build(bool verify_axioms);
};

/// `elements <names...>` (first the identity) followed by one `row <names...>`
/// line per element g listing the products g*h in element order. Verified
/// through Group::from_cayley. Throws std::invalid_argument with line numbers.
Group parse_cayley_file(std::string_view text);

/// Abelian group token "Z<m>" or "Z<m1>xZ<m2>x...".
Group parse_group_token(std::string_view token);

/// Linear character of a finite group: one root-of-unity value per element,
/// verified multiplicative. Immutable.
class Character {
public:
    static Character trivial(const Group& g);
    /// Factor-form groups: value on the generator of the k-th factor Z_{m_k}
    /// is zeta_{m_k}^{exps[k]}.
    static Character from_exponents(const Group& g, const std::vector<long>& exps);
    /// Any group: explicit value table, verified to be a homomorphism.
    static Character from_values(const Group& g, std::vector<Cyclotomic> values);

    size_t group_order() const { return vals_.size(); }
    const Cyclotomic& value(size_t element) const;
    const std::vector<Cyclotomic>& values() const { return vals_; }

    Character times(const Character& o) const;
    Character inverse_char() const;
    Character power_char(long e) const;
    bool is_trivial() const;

    bool operator==(const Character& o) const { return vals_ == o.vals_; }
    bool operator!=(const Character& o) const { return !(*this == o); }

private:
    explicit Character(std::vector<Cyclotomic> v) : vals_(std::move(v)) {}
    std::vector<Cyclotomic> vals_;
};

/// Defining data of the pointed algebra family: a finite group C of
/// grouplike elements, skew generators X_1..X_t with truncation exponents
/// n_i, group elements c_i, characters c*_i, scalars a_i in {0,1} and the
/// correction matrix b. Empty a/b are read as all zeros.
struct HopfParams {
    Group group;
    size_t t = 0;
    std::vector<unsigned> n;
    std::vector<size_t> c;
    std::vector<Character> cstar;
    std::vector<int> a;
    std::vector<std::vector<Cyclotomic>> b;
};

/// Canonical cyclic-group instance: C = Z_n, one generator, c = g,
/// c*(g) = zeta_n^chi_exponent, a = 0, b = 0.
HopfParams taft_params(unsigned n, long chi_exponent = 1);

struct ParamViolation {
    std::string condition;  // "(v)".."(xi)", "(central)", "(scope)", "(structure)"
    std::string detail;
};

/// Checks the defining conditions on the parameters; report-style, never
/// throws. An empty result means the parameters define a valid instance:
///   (v)    c*_i(c_j) c*_j(c_i) = 1 for i != j;
///   (vi)   b_ij != 0 implies c*_i c*_j is the trivial character;
///   (vii)  c_i c_j = 1 implies b_ij = 0;
///   (viii) c*_i(c_i) is a primitive n_i-th root of unity;
///   (ix)   a_i = 1 implies (c*_i)^{n_i} = 1;
///   (x)    c_i^{n_i} = 1 implies a_i = 0;
///   (xi)   b_ij = -c*_i(c_j) b_ji;
/// plus structural size checks, centrality of every c_i, and the scope rule
/// that nonabelian groups are supported for t <= 1 only.
std::vector<ParamViolation> validate_params(const HopfParams& p);

/// Deliberate defect switches for negative controls. Each one perturbs a
/// single ingredient of the construction so the verification layers must
/// catch it; all false builds the honest algebra.
struct HopfCorruption {
    bool drop_group_twist = false;        // commutation rule loses its character twist
    bool invert_swap_coefficient = false; // generator swap uses the inverse coefficient
    bool flip_antipode_sign = false;      // S(X_i) built with +c_i^{-1}X_i
};

/// One letter of a word in the generators: a group element or some X_i.
struct HopfLetter {
    bool is_x = false;
    size_t index = 0;  // generator index when is_x, group element otherwise
    static HopfLetter x(size_t i) { return {true, i}; }
    static HopfLetter grp(size_t g) { return {false, g}; }
};

/// The finite-dimensional pointed algebra on the basis {X^p g : 0 <= p_i <
/// n_i, g in C} with multiplication by exact straightening:
///   X_i g   -> c*_i(g) g X_i        (group elements move right),
///   X_j X_i -> c*_j(c_i) X_i X_j + b_ij (c_i c_j - 1)   for i < j,
///   X_i^{n_i} -> a_i (c_i^{n_i} - 1),
/// together with the coalgebra structure Delta(g) = g (x) g, Delta(X_i) =
/// X_i (x) 1 + c_i (x) X_i, counit eps(g) = 1, eps(X_i) = 0, and the
/// antipode S(g) = g^{-1}, S(X_i) = -c_i^{-1} X_i extended
/// antimultiplicatively. The constructor validates the parameters (throws
/// std::invalid_argument listing every violation), builds the full
/// structure-constant table, and asserts its associativity exhaustively;
/// confluence of the straightening is never assumed. Immutable afterwards.
class HopfAlgebra {
public:
    using Tensor = std::map<std::pair<size_t, size_t>, Cyclotomic>;

    explicit HopfAlgebra(HopfParams params, HopfCorruption corruption = {});

    const HopfParams& params() const { return params_; }
    const Group& group() const { return params_.group; }
    size_t t() const { return params_.t; }
    size_t dim() const { return alg_.dim(); }
    const FinDimAlgebra& algebra() const { return alg_; }

    /// Basis index of X^p g; p must have t entries with p_i < n_i.
    size_t index_of(const std::vector<unsigned>& p, size_t g) const;
    /// Inverse of index_of.
    std::pair<std::vector<unsigned>, size_t> decode(size_t idx) const;
    size_t x_degree(size_t idx) const;

    Vec unit_vec() const;
    Vec basis_vec(size_t idx) const;
    Vec group_vec(size_t g) const;   // basis vector of (p = 0, g)
    Vec generator_vec(size_t i) const;  // basis vector of X_i

    /// Straightened product of an arbitrary word in the generators.
    Vec normal_form(const std::vector<HopfLetter>& word) const;

    const Tensor& coproduct(size_t idx) const { return coproducts_[idx]; }
    Tensor coproduct_elem(const Vec& v) const;
    Cyclotomic counit(const Vec& v) const;
    const Vec& antipode_basis(size_t idx) const { return antipodes_[idx]; }
    Vec antipode(const Vec& v) const;

    /// Product in H (x) H of two tensors represented on basis index pairs.
    Tensor tensor_mult(const Tensor& a, const Tensor& b) const;

private:
    HopfParams params_;
    HopfCorruption corruption_;
    std::vector<size_t> strides_;
    size_t xdim_ = 1;
    FinDimAlgebra alg_;
    std::vector<Tensor> coproducts_;
    std::vector<Vec> antipodes_;

    using Accum = std::map<size_t, Cyclotomic>;
    void accum_add(Accum& m, size_t idx, const Cyclotomic& c) const;
    Accum right_mult_x(const Accum& e, size_t i) const;
    Accum right_mult_group(const Accum& e, size_t g) const;
    void insert_x(const std::vector<unsigned>& p, size_t i, const Cyclotomic& scale,
                  Accum& out) const;
    std::string basis_name(size_t idx) const;
    FinDimAlgebra build_algebra() const;
    friend struct HopfAlgebraBuildAccess;
};

/// Exhaustive exact verification of the Hopf axioms on the basis:
/// coassociativity, both counit laws, Delta and eps multiplicative on all
/// basis pairs, and the antipode law m(S (x) id)Delta = unit*eps =
/// m(id (x) S)Delta. Failures carry a witness description.
struct HopfAxiomReport {
    bool coassociative = true;
    bool counit_laws = true;
    bool coproduct_multiplicative = true;
    bool counit_multiplicative = true;
    bool antipode_law = true;
    std::vector<std::string> failures;
    bool all_pass() const {
        return coassociative && counit_laws && coproduct_multiplicative &&
               counit_multiplicative && antipode_law;
    }
};

HopfAxiomReport check_hopf_axioms(const HopfAlgebra& h);

/// Smash product base # kC for a verified action of C on base by algebra
/// automorphisms: action[g] is the matrix of g acting on the basis of base,
/// and the product is (u # g)(v # h) = u (g.v) # gh on basis index
/// i * |C| + g. Requires base to be unital. Verifies action[identity] = id,
/// action is a group homomorphism, and every action[g] is a unital algebra
/// map; throws std::invalid_argument with a witness otherwise.
FinDimAlgebra smash_product(const FinDimAlgebra& base, const Group& c,
                            const std::vector<Mat>& action);

/// Checks that H decomposes as (truncated skew polynomial algebra) # kC via
/// the basis map Phi(X^p (x) g) = X^p g: builds the skew base independently
/// as a quotient path algebra on one vertex with t loop arrows, forms the
/// smash product with the character action g.X_i = c*_i(g)^{-1} X_i, and
/// verifies Phi to be multiplicative on every basis pair and bijective.
/// Requires a = 0 and b = 0; throws std::invalid_argument otherwise.
bool verify_smash_iso(const HopfAlgebra& h);

/// Radical identification for a = b = 0: predicted radical span{X^p g :
/// p != 0} against the trace-form oracle on the materialized algebra. When
/// dim exceeds max_oracle_dim the oracle is skipped and verified stays
/// false. Throws std::invalid_argument when a or b is nonzero.
struct HopfRadicalCheck {
    Subspace predicted;
    std::optional<Subspace> oracle;
    bool equal = false;     // meaningful when oracle present
    bool verified = false;  // oracle ran
};

HopfRadicalCheck radical_check(const HopfAlgebra& h, size_t max_oracle_dim = 64);

/// A finite-dimensional representation candidate: one matrix per cyclic
/// factor generator of C (factor-form groups only) and one matrix per skew
/// generator, all square of the same size.
struct HopfRepresentation {
    std::vector<Mat> group_gens;
    std::vector<Mat> f;
};

struct HopfModuleResult {
    bool valid = false;
    std::vector<std::string> violations;
    /// Basis-indexed action matrices X^p g -> f^p rho(g), present when valid.
    std::vector<Mat> action;
};

/// Converts a representation (V, rho, f_1..f_t) into an H-module: verifies
/// the group matrices define a module of kC (orders and commutation), the
/// skew relations f_j f_i = c*_j(c_i) f_i f_j, f_i^{n_i} = 0, and the
/// commutation f_i rho(g) = c*_i(g) rho(g) f_i on the factor generators;
/// on success assembles the action and re-verifies the module axiom
/// (x y).v = x.(y v) on all basis pairs. Violations are reported with the
/// witnessing matrix identity; requires a = 0, b = 0 and a factor-form
/// group (throws std::invalid_argument otherwise).
HopfModuleResult representation_to_module(const HopfAlgebra& h,
                                          const HopfRepresentation& rep);

/// The classification families at dimension p^m: the group algebra, the
/// cyclic-group instances (t = 1 Taft type and the t = 2 variant with
/// c = (g, g^i)), the extended cyclic instances carrying a nonzero a or b,
/// and the central-generator instances over a nonabelian group (t = 1,
/// c in the center), plain and with a = 1.
enum class HopfFamily {
    group_algebra,
    abelian_basic,
    abelian_ab,
    nonabelian_basic,
    nonabelian_a,
};

struct ClassifyOptions {
    unsigned t = 1;       // abelian_basic: 1 or 2
    unsigned i = 1;       // abelian_basic t = 2: exponent in c = (g, g^i), 1 <= i < p
    bool use_a = false;   // abelian_ab: a-variant (C = Z_{p^2}, a = 1) instead of b-variant
    std::optional<Group> group;      // group_algebra, nonabelian_*
    std::optional<size_t> central;   // nonabelian_*: the central element c
    std::optional<Character> chi;    // nonabelian_*: the character c*
};

/// Builds the canonical member of the family at the prime p with validated
/// parameters; throws std::invalid_argument when the family constraints
/// fail (for example the b-variant at p = 2, where c_1 c_2 = g^2 = 1 forces
/// b_12 = 0).
HopfAlgebra classify_instance(HopfFamily family, unsigned p,
                              const ClassifyOptions& opt = {});

/// Degree-capped truncation of the infinite skew algebra on X_1..X_t over
/// kC with a = b = 0: basis {X^p g : |p| <= cap}, products killing any
/// monomial beyond the cap. Built directly from the closed commutation
/// formula (independently of HopfAlgebra's straightening) and verified
/// associative.
struct TruncatedSkew {
    FinDimAlgebra algebra;
    size_t cap = 0;
    size_t group_order = 1;
    size_t t = 0;
    /// Monomial index (= basis index / group order) -> exponent vector; the
    /// basis layout is monomial-major, group element minor.
    std::vector<std::vector<unsigned>> exponents;
    size_t x_degree(size_t idx) const;
};

TruncatedSkew truncated_skew_algebra(const HopfParams& params, size_t cap);

enum class SampleVerdict {
    /// The sample's group-algebra component is nonzero: its ideal projects
    /// onto a nonzero ideal of the semiprime commutative algebra kC under
    /// the verified degree-0 projection, so no power ever vanishes.
    group_part_certified,
    /// Every ideal power that must still fit under the degree cap is
    /// nonzero; the cap cut the computation off before any conclusion.
    truncation_limited,
    /// An ideal power vanished while its degree budget still fit under the
    /// cap: genuine nilpotency evidence (a failure of the semiprimeness
    /// claim).
    premature_nilpotent,
};

SampleVerdict classify_ideal_sample(const TruncatedSkew& ts, const Vec& sample);

/// Seeded sampling evidence that no nonzero element generates a nilpotent
/// ideal: draws `samples` random nonzero elements and classifies each.
struct NilpotencyEvidence {
    size_t samples = 0;
    size_t group_part_certified = 0;
    size_t truncation_limited = 0;
    size_t premature_nilpotent = 0;
    uint64_t seed = 0;
    std::vector<std::string> notes;
    bool clean() const { return premature_nilpotent == 0; }
};

NilpotencyEvidence ideal_nilpotency_evidence(const TruncatedSkew& ts, size_t samples,
                                             uint64_t seed);

/// Parsed contents of an instance file. The loader resolves `cayley <ref>`
/// references to the referenced file's text; parsing a cayley line without
/// a loader is an error.
struct HopfSpecFile {
    std::string name;
    HopfParams params;
};

using HopfFileLoader = std::function<std::string(const std::string&)>;

/// Line-oriented format:
///   hopf <name>                       (optional, once, first)
///   group Z2xZ4   |   cayley <ref>    (required, once)
///   t <count>                         (required before n/c/cstar/a/b)
///   n <n_1> ... <n_t>
///   c <i> : <exponents|element name>  (1-based i)
///   cstar <i> : <exponents>           (factor-form groups)
///   cstar <i> values : <s_1>, ...     (explicit value per element)
///   a <a_1> ... <a_t>
///   b <i> <j> : <scalar>              (unset entries are zero)
/// `#` starts a comment. Exponent lists are comma-separated; scalars use
/// the shared scalar syntax. Throws std::invalid_argument with 1-based
/// line numbers; parameter-condition checking is the caller's step via
/// validate_params.
HopfSpecFile parse_hopf_file(std::string_view text, const HopfFileLoader& loader = {});

}  // namespace gpa
