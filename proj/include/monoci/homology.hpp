#ifndef MONOCI_HOMOLOGY_HPP
#define MONOCI_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "monoci/ideal.hpp"
#include "monoci/linalg.hpp"

namespace monoci {

/// Subset of {0..62} as a bitmask.
using FaceMask = std::uint64_t;

/// Finite abstract simplicial complex on vertices 0..v-1.
///
/// The VOID complex has no faces at all; the IRRELEVANT complex has only the
/// empty face. They differ in reduced homology: the void complex is acyclic,
/// while the irrelevant complex has rank-one homology in degree -1.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(unsigned vertices);
    static SimplicialComplex irrelevant(unsigned vertices);
    static SimplicialComplex simplex(unsigned vertices);
    /// Downward closure of the facets; no facets gives the void complex.
    static SimplicialComplex from_facets(unsigned vertices, const std::vector<FaceMask>& facets);
    /// Faces must already be closed under subsets (checked).
    static SimplicialComplex from_faces(unsigned vertices, std::vector<FaceMask> faces);

    unsigned vertex_count() const noexcept { return vertices_; }
    /// Sorted by (cardinality, mask).
    const std::vector<FaceMask>& faces() const noexcept { return faces_; }
    bool is_void() const noexcept { return faces_.empty(); }
    bool is_irrelevant() const noexcept { return faces_.size() == 1; }
    bool contains(FaceMask face) const;
    /// -1 for the irrelevant complex, -2 for the void complex.
    int dimension() const noexcept;
    std::vector<FaceMask> facets() const;

    /// lk(sigma) = { tau : tau and sigma disjoint, tau | sigma a face }.
    /// The link of a non-face is void.
    SimplicialComplex link(FaceMask sigma) const;

    /// Sum over faces of (-1)^{dim}, counting the empty face as dimension -1.
    std::int64_t reduced_euler_characteristic() const;

private:
    SimplicialComplex(unsigned vertices, std::vector<FaceMask> faces);

    unsigned vertices_;
    std::vector<FaceMask> faces_;
};

/// Stanley-Reisner complex of a squarefree ideal: faces are the supports of
/// squarefree monomials outside the ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& a);

/// Chain complex of finite-dimensional vector spaces. boundary(d) maps
/// degree d to degree d-1.
class ChainComplex {
public:
    ChainComplex(FieldSpec field, int min_degree, std::vector<std::size_t> dims,
                 std::vector<SparseMatrix> boundaries);

    const FieldSpec& field() const noexcept { return field_; }
    int min_degree() const noexcept { return min_degree_; }
    int max_degree() const noexcept { return min_degree_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int degree) const;
    /// Zero matrix of the right shape when outside the stored range.
    SparseMatrix boundary(int degree) const;

    /// D_d * D_{d+1} == 0 for every stored pair.
    bool boundary_squared_zero() const;
    /// Rank of H_d for every stored degree.
    std::map<int, std::size_t> homology_ranks() const;

private:
    FieldSpec field_;
    int min_degree_;
    std::vector<std::size_t> dims_;
    std::vector<SparseMatrix> boundaries_;  // boundaries_[k] has source degree min_degree_ + k
};

/// Augmented simplicial chain complex (the empty face sits in degree -1).
ChainComplex augmented_chain_complex(const SimplicialComplex& k, const FieldSpec& field);

/// Ranks of reduced homology for degrees -1..dim K. All zero (empty map)
/// for the void complex.
std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& field);

struct BettiOptions {
    /// Taylor complexes are refused above this many generators.
    std::size_t taylor_max_generators = 20;
    /// Cells of the exponent box scanned by the upper-Koszul path.
    std::size_t koszul_max_cells = std::size_t{1} << 23;
    /// Threads for per-multidegree rank computations (results are identical
    /// for every value).
    unsigned jobs = 1;
};

/// Total Betti numbers beta_i(R/a), indexed by homological degree.
using BettiNumbers = std::map<int, std::size_t>;
/// Multigraded Betti numbers beta_{i,b}(R/a), only nonzero entries.
using MultigradedBetti = std::map<std::pair<int, Monomial>, std::size_t>;

/// Homology of the Taylor complex of the minimal generators tensored with k.
/// Throws ResourceError above options.taylor_max_generators.
BettiNumbers taylor_homology(const MonomialIdeal& a, const FieldSpec& field,
                             const BettiOptions& options = {});

/// beta_{i,b}(R/a) = rank of reduced H_{i-2} of the upper-Koszul complex
/// K^b(a) = { tau : x^{b - tau} in a }, over b in the lcm lattice.
/// Throws ResourceError when the exponent box exceeds options.koszul_max_cells.
MultigradedBetti koszul_betti(const MonomialIdeal& a, const FieldSpec& field,
                              const BettiOptions& options = {});

BettiNumbers total_betti(const MultigradedBetti& graded);

/// Picks whichever of the two paths is cheaper for this ideal.
BettiNumbers betti_numbers(const MonomialIdeal& a, const FieldSpec& field,
                           const BettiOptions& options = {});

/// The set { j : H^j_m(R/a) != 0 } for squarefree a, via links in the
/// Stanley-Reisner complex.
std::set<int> local_cohomology_nonvanishing(const MonomialIdeal& a, const FieldSpec& field);

}  // namespace monoci

#endif
