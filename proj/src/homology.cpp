#include "monoci/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "monoci/parallel.hpp"

namespace monoci {

namespace {

bool face_order(FaceMask a, FaceMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
}

void check_vertex_count(unsigned vertices) {
    if (vertices > 62) throw ResourceError("simplicial complexes are limited to 62 vertices");
}

}  // namespace

SimplicialComplex::SimplicialComplex(unsigned vertices, std::vector<FaceMask> faces)
    : vertices_(vertices), faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(), face_order);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

SimplicialComplex SimplicialComplex::void_complex(unsigned vertices) {
    check_vertex_count(vertices);
    return SimplicialComplex(vertices, {});
}

SimplicialComplex SimplicialComplex::irrelevant(unsigned vertices) {
    check_vertex_count(vertices);
    return SimplicialComplex(vertices, {FaceMask{0}});
}

SimplicialComplex SimplicialComplex::simplex(unsigned vertices) {
    check_vertex_count(vertices);
    return from_facets(vertices, {(FaceMask{1} << vertices) - 1});
}

SimplicialComplex SimplicialComplex::from_facets(unsigned vertices, const std::vector<FaceMask>& facets) {
    check_vertex_count(vertices);
    const FaceMask all = (FaceMask{1} << vertices) - 1;
    std::vector<FaceMask> faces;
    for (FaceMask f : facets) {
        if (f & ~all) throw DomainError("facet uses a vertex outside the vertex set");
        // Enumerate all submasks of f, including f and 0.
        for (FaceMask s = f;; s = (s - 1) & f) {
            faces.push_back(s);
            if (s == 0) break;
        }
    }
    return SimplicialComplex(vertices, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(unsigned vertices, std::vector<FaceMask> faces) {
    check_vertex_count(vertices);
    SimplicialComplex k(vertices, std::move(faces));
    const FaceMask all = (FaceMask{1} << vertices) - 1;
    for (FaceMask f : k.faces_) {
        if (f & ~all) throw DomainError("face uses a vertex outside the vertex set");
        for (FaceMask rest = f; rest; rest &= rest - 1) {
            FaceMask sub = f & ~(rest & -rest);
            if (!k.contains(sub)) throw DomainError("face set is not closed under taking subsets");
        }
    }
    return k;
}

bool SimplicialComplex::contains(FaceMask face) const {
    return std::binary_search(faces_.begin(), faces_.end(), face, face_order);
}

int SimplicialComplex::dimension() const noexcept {
    if (faces_.empty()) return -2;
    return std::popcount(faces_.back()) - 1;
}

std::vector<FaceMask> SimplicialComplex::facets() const {
    std::vector<FaceMask> result;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = i + 1; j < faces_.size() && maximal; ++j)
            maximal = (faces_[i] & faces_[j]) != faces_[i];
        if (maximal) result.push_back(faces_[i]);
    }
    return result;
}

SimplicialComplex SimplicialComplex::link(FaceMask sigma) const {
    if (!contains(sigma)) return void_complex(vertices_);
    std::vector<FaceMask> faces;
    for (FaceMask tau : faces_)
        if ((tau & sigma) == 0 && contains(tau | sigma)) faces.push_back(tau);
    return SimplicialComplex(vertices_, std::move(faces));
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
    std::int64_t chi = 0;
    for (FaceMask f : faces_) chi += (std::popcount(f) % 2 == 1) ? 1 : -1;
    return chi;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& a) {
    if (!a.is_squarefree()) throw DomainError("Stanley-Reisner complex needs a squarefree ideal");
    const auto n = static_cast<unsigned>(a.num_variables());
    if (n > 24) throw ResourceError("Stanley-Reisner enumeration is limited to 24 variables");
    std::vector<FaceMask> gen_masks;
    for (const auto& g : a.generators()) {
        FaceMask m = 0;
        for (unsigned i = 0; i < n; ++i)
            if (g[i]) m |= FaceMask{1} << i;
        gen_masks.push_back(m);
    }
    std::vector<FaceMask> faces;
    for (FaceMask tau = 0; tau < (FaceMask{1} << n); ++tau) {
        bool in_ideal = std::any_of(gen_masks.begin(), gen_masks.end(),
                                    [&](FaceMask g) { return (g & tau) == g; });
        if (!in_ideal) faces.push_back(tau);
    }
    return SimplicialComplex::from_faces(n, std::move(faces));
}

ChainComplex::ChainComplex(FieldSpec field, int min_degree, std::vector<std::size_t> dims,
                           std::vector<SparseMatrix> boundaries)
    : field_(field), min_degree_(min_degree), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (boundaries_.size() + 1 != std::max<std::size_t>(dims_.size(), 1))
        throw DomainError("chain complex needs one boundary map between each pair of degrees");
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        if (boundaries_[k].cols() != dims_[k + 1] || boundaries_[k].rows() != dims_[k])
            throw DomainError("boundary map shape does not match the chain groups");
    }
}

std::size_t ChainComplex::dim(int degree) const {
    if (degree < min_degree_ || degree > max_degree()) return 0;
    return dims_[static_cast<std::size_t>(degree - min_degree_)];
}

SparseMatrix ChainComplex::boundary(int degree) const {
    if (degree > min_degree_ && degree <= max_degree())
        return boundaries_[static_cast<std::size_t>(degree - min_degree_ - 1)];
    return SparseMatrix(dim(degree - 1), dim(degree));
}

bool ChainComplex::boundary_squared_zero() const {
    for (std::size_t k = 0; k + 1 < boundaries_.size(); ++k)
        if (!boundaries_[k].multiply(boundaries_[k + 1]).is_zero()) return false;
    return true;
}

std::map<int, std::size_t> ChainComplex::homology_ranks() const {
    std::vector<std::size_t> ranks(dims_.size() + 1, 0);  // ranks[k] = rank of boundary out of degree min+k
    for (std::size_t k = 0; k < boundaries_.size(); ++k) ranks[k + 1] = rank(boundaries_[k], field_);
    std::map<int, std::size_t> result;
    for (std::size_t k = 0; k < dims_.size(); ++k)
        result[min_degree_ + static_cast<int>(k)] = dims_[k] - ranks[k] - ranks[k + 1];
    return result;
}

ChainComplex augmented_chain_complex(const SimplicialComplex& k, const FieldSpec& field) {
    const auto& faces = k.faces();
    if (faces.empty()) return ChainComplex(field, -1, {}, {});
    int top = k.dimension();
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(top + 2));
    for (FaceMask f : faces) by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);

    std::vector<std::size_t> dims;
    for (const auto& layer : by_dim) dims.push_back(layer.size());
    std::vector<SparseMatrix> boundaries;
    for (std::size_t card = 1; card < by_dim.size(); ++card) {
        const auto& src = by_dim[card];
        const auto& dst = by_dim[card - 1];
        SparseMatrix d(dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            int position = 0;
            for (FaceMask rest = src[c]; rest; rest &= rest - 1, ++position) {
                FaceMask face = src[c] & ~(rest & -rest);
                auto it = std::lower_bound(dst.begin(), dst.end(), face);
                if (it == dst.end() || *it != face) throw InternalError("face set not closed");
                d.add(static_cast<std::size_t>(it - dst.begin()), c, position % 2 == 0 ? 1 : -1);
            }
        }
        boundaries.push_back(std::move(d));
    }
    return ChainComplex(field, -1, std::move(dims), std::move(boundaries));
}

std::map<int, std::size_t> reduced_homology_ranks(const SimplicialComplex& k, const FieldSpec& field) {
    if (k.is_void()) return {};
    return augmented_chain_complex(k, field).homology_ranks();
}

namespace {

void require_proper_nonzero(const MonomialIdeal& a, const char* op) {
    if (!a.is_proper_nonzero())
        throw DomainError(std::string(op) + " needs a proper nonzero ideal, got " + a.to_string());
}

std::size_t box_cells(const Monomial& top) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < top.size(); ++i) {
        std::size_t side = std::size_t{top[i]} + 1;
        if (cells > (std::size_t{1} << 40) / side) return std::size_t{1} << 40;
        cells *= side;
    }
    return cells;
}

}  // namespace

BettiNumbers taylor_homology(const MonomialIdeal& a, const FieldSpec& field, const BettiOptions& options) {
    const std::size_t mu = a.mu();
    if (mu > options.taylor_max_generators || mu > 30)
        throw ResourceError("Taylor complex on " + std::to_string(mu) + " generators exceeds the bound of " +
                            std::to_string(options.taylor_max_generators) + "; use koszul_betti instead");
    const std::size_t n = a.num_variables();
    const std::size_t subsets = std::size_t{1} << mu;
    const auto& gens = a.generators();

    // lcm of every subset, then grouped by lcm; the Taylor differential
    // tensored with k keeps only faces with equal lcm, so it splits by group.
    std::vector<Exponent> lcms(subsets * n, 0);
    for (std::size_t s = 1; s < subsets; ++s) {
        std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
        std::size_t prev = s & (s - 1);
        for (std::size_t i = 0; i < n; ++i)
            lcms[s * n + i] = std::max(lcms[prev * n + i], gens[low][i]);
    }
    std::map<std::vector<Exponent>, std::vector<std::uint32_t>> groups;
    for (std::size_t s = 0; s < subsets; ++s) {
        std::vector<Exponent> key(lcms.begin() + static_cast<std::ptrdiff_t>(s * n),
                                  lcms.begin() + static_cast<std::ptrdiff_t>((s + 1) * n));
        groups[std::move(key)].push_back(static_cast<std::uint32_t>(s));
    }

    std::vector<const std::vector<std::uint32_t>*> group_list;
    for (const auto& [key, members] : groups) group_list.push_back(&members);
    std::vector<std::map<int, std::size_t>> per_group(group_list.size());

    parallel_for(group_list.size(), options.jobs, [&](std::size_t g) {
        const auto& members = *group_list[g];  // sorted ascending
        std::map<int, std::vector<std::uint32_t>> by_size;
        for (auto s : members) by_size[std::popcount(s)].push_back(s);
        int lo = by_size.begin()->first, hi = by_size.rbegin()->first;
        std::vector<std::size_t> dims;
        for (int i = lo; i <= hi; ++i) dims.push_back(by_size.count(i) ? by_size[i].size() : 0);
        std::vector<SparseMatrix> maps;
        for (int i = lo + 1; i <= hi; ++i) {
            const auto& src = by_size[i];
            const auto& dst = by_size[i - 1];
            SparseMatrix d(dst.size(), src.size());
            for (std::size_t c = 0; c < src.size(); ++c) {
                int position = 0;
                for (std::uint32_t rest = src[c]; rest; rest &= rest - 1, ++position) {
                    std::uint32_t face = src[c] & ~(rest & -rest);
                    auto it = std::lower_bound(dst.begin(), dst.end(), face);
                    if (it != dst.end() && *it == face)
                        d.add(static_cast<std::size_t>(it - dst.begin()), c, position % 2 == 0 ? 1 : -1);
                }
            }
            maps.push_back(std::move(d));
        }
        per_group[g] = ChainComplex(field, lo, std::move(dims), std::move(maps)).homology_ranks();
    });

    BettiNumbers total;
    for (const auto& h : per_group)
        for (auto [i, r] : h)
            if (r) total[i] += r;
    return total;
}

MultigradedBetti koszul_betti(const MonomialIdeal& a, const FieldSpec& field, const BettiOptions& options) {
    const std::size_t n = a.num_variables();
    MultigradedBetti result;
    if (a.is_unit()) return result;
    result[{0, Monomial::unit(n)}] = 1;
    if (a.is_zero()) return result;
    if (n > 31) throw ResourceError("upper-Koszul path is limited to 31 variables");

    const Monomial top = a.lcm_of_generators();
    const std::size_t cells = box_cells(top);
    if (cells > options.koszul_max_cells)
        throw ResourceError("exponent box of " + std::to_string(cells) + " cells exceeds the bound of " +
                            std::to_string(options.koszul_max_cells));

    std::vector<std::size_t> stride(n);
    std::size_t acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
        stride[i] = acc;
        acc *= std::size_t{top[i]} + 1;
    }
    auto index_of = [&](const Monomial& m) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx += std::size_t{m[i]} * stride[i];
        return idx;
    };

    // in_ideal[b]: x^b in a. exact[b]: bit i set iff some generator g | x^b
    // has g_i = b_i. b lies in the lcm lattice iff exact[b] covers supp(b).
    std::vector<std::uint8_t> in_ideal(cells, 0);
    std::vector<std::uint32_t> exact(cells, 0);
    const std::uint32_t all_bits = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    for (const auto& g : a.generators()) {
        auto idx = index_of(g);
        in_ideal[idx] = 1;
        exact[idx] = all_bits;
    }
    std::vector<Exponent> b(n, 0);
    std::vector<std::size_t> lattice;
    for (std::size_t idx = 0; idx < cells; ++idx) {
        if (idx > 0) {
            for (std::size_t i = 0; i < n; ++i) {
                if (b[i] < top[i]) {
                    ++b[i];
                    break;
                }
                b[i] = 0;
            }
        }
        std::uint32_t support = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            support |= 1u << j;
            std::size_t below = idx - stride[j];
            in_ideal[idx] |= in_ideal[below];
            exact[idx] |= exact[below] & ~(1u << j);
        }
        if (idx > 0 && in_ideal[idx] && (exact[idx] & support) == support) lattice.push_back(idx);
    }

    std::vector<std::vector<std::pair<int, std::size_t>>> found(lattice.size());
    parallel_for(lattice.size(), options.jobs, [&](std::size_t k) {
        std::size_t idx = lattice[k];
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if ((idx / stride[i]) % (std::size_t{top[i]} + 1) > 0) support.push_back(i);
        const auto v = static_cast<unsigned>(support.size());
        std::vector<FaceMask> faces;
        for (FaceMask tau = 0; tau < (FaceMask{1} << v); ++tau) {
            std::size_t shifted = idx;
            for (unsigned t = 0; t < v; ++t)
                if (tau >> t & 1) shifted -= stride[support[t]];
            if (in_ideal[shifted]) faces.push_back(tau);
        }
        auto complex = SimplicialComplex::from_faces(v, std::move(faces));
        for (auto [d, r] : reduced_homology_ranks(complex, field))
            if (r) found[k].emplace_back(d + 2, r);
    });

    for (std::size_t k = 0; k < lattice.size(); ++k) {
        if (found[k].empty()) continue;
        std::vector<Exponent> e(n);
        for (std::size_t i = 0; i < n; ++i)
            e[i] = static_cast<Exponent>((lattice[k] / stride[i]) % (std::size_t{top[i]} + 1));
        Monomial m(std::move(e));
        for (auto [i, r] : found[k]) result[{i, m}] += r;
    }
    return result;
}

BettiNumbers total_betti(const MultigradedBetti& graded) {
    BettiNumbers total;
    for (const auto& [key, r] : graded)
        if (r) total[key.first] += r;
    return total;
}

BettiNumbers betti_numbers(const MonomialIdeal& a, const FieldSpec& field, const BettiOptions& options) {
    const std::size_t mu = a.mu();
    const std::size_t cells = box_cells(a.lcm_of_generators());
    bool taylor_ok = mu <= options.taylor_max_generators && mu <= 30;
    bool koszul_ok = cells <= options.koszul_max_cells && a.num_variables() <= 31;
    if (taylor_ok && (!koszul_ok || (std::size_t{1} << mu) <= cells))
        return taylor_homology(a, field, options);
    return total_betti(koszul_betti(a, field, options));
}

std::set<int> local_cohomology_nonvanishing(const MonomialIdeal& a, const FieldSpec& field) {
    if (!a.is_squarefree())
        throw DomainError("local_cohomology_nonvanishing needs a squarefree ideal, got " + a.to_string());
    require_proper_nonzero(a, "local_cohomology_nonvanishing");
    const auto delta = stanley_reisner_complex(a);
    std::set<int> result;
    for (FaceMask sigma : delta.faces()) {
        for (auto [d, r] : reduced_homology_ranks(delta.link(sigma), field))
            if (r) result.insert(d + std::popcount(sigma) + 1);
    }
    return result;
}

}  // namespace monoci
