#pragma once

#include "nalg/identity.hpp"
#include "nalg/sparse.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace nalg {

// A variety with its defining identities stored in multilinear form
// (non-multilinear inputs are polarized on construction; over Q this is
// loss-free).
class Variety {
  public:
    static Variety from_def(const VarietyDef& def);
    static Variety from_identities(std::string name, std::vector<Identity> identities);
    // Convenience: from_def(builtin_variety(name)).
    static Variety builtin(const std::string& name);

    const std::string& name() const { return name_; }
    const std::vector<Identity>& identities() const { return identities_; }
    const std::vector<Identity>& source_identities() const { return source_; }
    // Hex digest of the multilinear identity set; cache key component.
    const std::string& content_hash() const { return hash_; }
    bool is_free() const { return identities_.empty(); }

  private:
    std::string name_;
    std::vector<Identity> identities_;
    std::vector<Identity> source_;
    std::string hash_;
};

// One graded component of the free algebra of a variety: the deg-lex
// ordered monomial spanning set of the free magma component together with
// the echelon form of the identity-consequence subspace.
struct ComponentSpace {
    MultiDegree d;
    std::shared_ptr<const std::vector<Monomial>> monomials;
    std::unordered_map<Monomial, std::int32_t, MonomialHash> index;
    EchelonForm ech;

    std::size_t total() const { return monomials->size(); }
    std::size_t rank() const { return static_cast<std::size_t>(ech.rank()); }
    std::size_t dimension() const { return total() - rank(); }
    std::int32_t col_of(const Monomial& m) const;
    // Canonical quotient basis: the non-pivot columns in deg-lex order.
    std::vector<Monomial> quotient_basis() const;
};

struct ComponentReport {
    std::string variety;
    MultiDegree d;
    std::size_t total = 0;
    std::size_t rank = 0;
    std::size_t dimension = 0;
    std::optional<std::vector<std::string>> basis; // rendered monomials

    // One-line versioned machine record.
    std::string to_json() const;
    std::string to_text() const;
};

// Computation front end holding the per-run component cache and the worker
// count. All numeric outputs are independent of the worker count.
class Engine {
  public:
    explicit Engine(int threads = 1) : threads_(threads) {}

    int threads() const { return threads_; }
    void set_threads(int n) { threads_ = n < 1 ? 1 : n; }

    // The degree-d component of the T-ideal of v's identities: the echelon
    // of the span of all substitution instances embedded in all one-hole
    // monomial contexts. A multidegree below every identity degree yields an
    // empty (rank 0) space.
    std::shared_ptr<const ComponentSpace> consequences(const Variety& v, const MultiDegree& d);

    ComponentReport dimension(const Variety& v, const MultiDegree& d, bool with_basis = false);

    struct ConsequenceOutcome {
        bool holds = false;
        Polynomial residue; // nonzero iff !holds, in echelon-reduced coordinates
    };
    // Decides whether the multilinear identity f follows from v's identities.
    ConsequenceOutcome is_consequence(const Variety& v, const Identity& f);

    struct BasisOutcome {
        bool ok = false;
        std::string diagnosis;
    };
    BasisOutcome verify_basis(const Variety& v, const MultiDegree& d,
                              const std::vector<Monomial>& candidates);

    // Coordinates of p's class in the quotient with respect to the given
    // (verified) basis.
    std::vector<Rat> normal_form(const Variety& v, const Polynomial& p,
                                 const std::vector<Monomial>& basis);

    // Exact rational reduction of a coordinate vector by the component
    // echelon (the class representative of v in echelon-reduced form).
    static SparseVec reduce_exact(const ComponentSpace& comp, SparseVec v);

    static IntRow poly_to_row(const ComponentSpace& comp, const Polynomial& p);
    static SparseVec poly_to_vec(const ComponentSpace& comp, const Polynomial& p);
    static Polynomial row_to_poly(const ComponentSpace& comp, const IntRow& row);
    static Polynomial vec_to_poly(const ComponentSpace& comp, const SparseVec& v);

  private:
    std::shared_ptr<const ComponentSpace> build_component(const Variety& v, const MultiDegree& d);

    int threads_ = 1;
    std::mutex mu_;
    std::map<std::pair<std::string, MultiDegree>, std::shared_ptr<const ComponentSpace>> cache_;
};

} // namespace nalg
