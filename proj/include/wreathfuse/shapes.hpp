#pragma once

#include <string>
#include <vector>

#include "wreathfuse/groups.hpp"
#include "wreathfuse/scalar.hpp"

namespace wrf {

// ---------------------------------------------------------------------------
// MultiPartition: an m-tuple of integer partitions. Rows are numbered top to
// bottom, columns left to right, both 1-based.
// ---------------------------------------------------------------------------
struct MultiPartition {
    std::vector<std::vector<int>> comps;

    MultiPartition() = default;
    explicit MultiPartition(std::vector<std::vector<int>> c);

    int m() const { return static_cast<int>(comps.size()); }
    int size() const;
    void validate() const; // throws ValidationError unless weakly decreasing positive

    bool contains(int comp, int row, int col) const;

    friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
        return a.comps == b.comps;
    }
    friend bool operator!=(const MultiPartition& a, const MultiPartition& b) {
        return !(a == b);
    }

    std::string to_string() const; // "[2,1],[],[1]"
    static MultiPartition parse(const std::string& s);
};

struct MNode {
    int comp = 1; // 1..m
    int row = 1;
    int col = 1;
    friend bool operator==(const MNode& a, const MNode& b) {
        return a.comp == b.comp && a.row == b.row && a.col == b.col;
    }
};

MultiPartition with_node_added(const MultiPartition& shape, const MNode& node);
MultiPartition with_node_removed(const MultiPartition& shape, const MNode& node);

struct BoundaryNodes {
    std::vector<MNode> removable; // component-major, then row
    std::vector<MNode> addable;
};
BoundaryNodes boundary_nodes(const MultiPartition& shape);

/// All m-partitions of n, duplicate-free, in the deterministic order:
/// first component size descending, partitions of a fixed size in
/// descending lexicographic order, then recursively the remaining tuple.
std::vector<MultiPartition> multipartitions(int m, int n);

// ---------------------------------------------------------------------------
// StandardMultiTableau: entries 1..n placed on the nodes of the shape,
// increasing along every row and column of every component.
// ---------------------------------------------------------------------------
struct StandardMultiTableau {
    MultiPartition shape;
    std::vector<MNode> nodes; // nodes[i] holds entry i+1

    int size() const { return static_cast<int>(nodes.size()); }
    void validate() const; // bijection onto the shape + standardness

    /// Entries 1..j as a standard tableau (the shape is the prefix shape).
    StandardMultiTableau restricted(int j) const;
    StandardMultiTableau extended(const MNode& node) const; // next entry at node

    friend bool operator==(const StandardMultiTableau& a, const StandardMultiTableau& b) {
        return a.shape == b.shape && a.nodes == b.nodes;
    }

    std::string to_string() const; // "1:(1,1,1) 2:(3,1,1) 3:(1,1,2)"
    static StandardMultiTableau parse(const std::string& s, int m);
};

/// All standard tableaux of the shape, enumerated by recursive removal of
/// the maximal entry from removable nodes; complete and duplicate-free.
std::vector<StandardMultiTableau> standard_tableaux(const MultiPartition& shape);
/// All standard tableaux of every m-partition of size n.
std::vector<StandardMultiTableau> standard_tableaux_of_size(int m, int n);

struct NodeStats {
    int content = 0;     // col - row
    int component = 1;   // position
    Rational g_content;  // content / degree(component)
};
NodeStats node_stats(const StandardMultiTableau& t, int entry, const std::vector<int>& degrees);

/// Product of the hook lengths over all nodes (computed within components).
Rational hook_product(const MultiPartition& shape);

/// F-type scalar: product over nodes and class indices of
/// prod_{xi != xi_(position)} (xi_(position) - xi). `alphas` restricts the
/// class indices used (default: all).
Cyclotomic fg_product(const MultiPartition& shape, const SpectralData& sd,
                      const std::vector<int>* alphas = nullptr);

// ---------------------------------------------------------------------------
// Abelian variant: eigenvalue data of a chosen generating family of an
// abelian group; the value sets are all k_alpha-th roots of unity.
// ---------------------------------------------------------------------------
struct AbelianSpectrum {
    int N = 0;                                 // number of generators
    std::vector<int> generators;               // element indices
    std::vector<int> orders;                   // k_alpha
    std::vector<std::vector<Cyclotomic>> xi;   // [nu][alpha] = chi_nu(t_alpha)
    std::vector<std::vector<Cyclotomic>> roots; // per alpha: zeta^0..zeta^(k-1)
};

/// Throws ValidationError when the group is not abelian or the generators do
/// not decompose it as a direct product of the cyclic subgroups they generate.
AbelianSpectrum abelian_spectrum(const GroupTable& g, const ConjugacyData& cd,
                                 const CharacterTable& ct, const std::vector<int>& gens);

Cyclotomic fg_product_abelian(const MultiPartition& shape, const AbelianSpectrum& sp);

// ---------------------------------------------------------------------------
// Tableau-attached rational functions.
// ---------------------------------------------------------------------------

/// The content function ((u - c_N)/u) * prod_{i<N} (u-c_i)^2/((u-c_i)^2 - d)
/// with d = 1 when entries i and N share a component and 0 otherwise,
/// assembled in reduced form (classical integer contents).
RatFun content_function(const StandardMultiTableau& t);

/// The position function prod_alpha prod_{xi != xi_(pN)} 1/(v^(alpha) - xi)
/// evaluated at the given per-class values. Throws PoleError when some
/// v^(alpha) hits an excluded eigenvalue.
Cyclotomic position_function_eval(const StandardMultiTableau& t, const SpectralData& sd,
                                  const std::vector<Cyclotomic>& v,
                                  const std::vector<int>* alphas = nullptr);

} // namespace wrf
