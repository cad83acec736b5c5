#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wreathfuse/scalar.hpp"

namespace wrf {

// ---------------------------------------------------------------------------
// GroupTable: a finite group as an explicit multiplication table. Built-in
// families carry enough structure (kind + parameters + factors) for the
// character-table builders; file-loaded groups may ship their own table.
// ---------------------------------------------------------------------------
struct CharacterTable;

struct GroupTable {
    enum class Kind { Cyclic, Symmetric, Dihedral, Product, File };

    int order = 1;
    std::vector<int> mult; // row-major: mult[a * order + b] = a * b
    int identity = 0;
    std::vector<int> inverse;
    std::string name;

    Kind kind = Kind::Cyclic;
    int param = 1;                              // k for cyclic/symmetric/dihedral
    std::shared_ptr<const GroupTable> factor_left, factor_right; // product only
    std::shared_ptr<const CharacterTable> file_characters;       // file only, optional

    int mul(int a, int b) const { return mult[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[static_cast<size_t>(a)]; }
    int element_order(int a) const;
    bool is_abelian() const;

    /// Full structural validation: Latin-square rows/columns, two-sided
    /// identity, inverses, associativity. Throws ValidationError.
    void validate() const;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

GroupPtr build_cyclic(int k);
GroupPtr build_symmetric(int k); // k <= 4
GroupPtr build_dihedral(int k);  // order 2k
GroupPtr build_product(const GroupPtr& a, const GroupPtr& b);
GroupPtr build_trivial();

/// Parse a group spec string: "trivial", "C<k>", "S<k>", "D<k>", or a
/// product such as "C2xC3". Built-in orders are capped at 24.
GroupPtr build_group(const std::string& spec);

GroupPtr load_group_file(std::istream& in, const std::string& what = "<stream>");
GroupPtr load_group_file_path(const std::string& path);
/// Canonical text form of the group (and its character table when known).
void write_group_file(std::ostream& out, const GroupTable& g);

// ---------------------------------------------------------------------------
// Conjugacy classes: identity class first, remaining classes ordered by
// their smallest member index.
// ---------------------------------------------------------------------------
struct ConjugacyData {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;
    std::vector<int> sizes;
    int m() const { return static_cast<int>(classes.size()); }
};

ConjugacyData conjugacy_classes(const GroupTable& g);

// ---------------------------------------------------------------------------
// CharacterTable: chi[nu][alpha] over the conjugacy classes above, with
// degrees d_nu = chi[nu][identity class]. Validated against both
// orthogonality relations on construction.
// ---------------------------------------------------------------------------
struct CharacterTable {
    int m = 0;
    std::vector<std::vector<Cyclotomic>> chi;
    std::vector<int> degrees;
    long conductor = 1; // lcm of the orders of all roots of unity used

    void validate(const GroupTable& g, const ConjugacyData& cd) const;
};

/// Built-in tables (cyclic, products, S3/S4, dihedral k <= 6) or the table
/// shipped with a file-loaded group. Throws UnsupportedGroupError otherwise.
CharacterTable character_table(const GroupTable& g, const ConjugacyData& cd);

// ---------------------------------------------------------------------------
// SpectralData: eigenvalues xi[nu][alpha] = chi[nu][alpha] / d_nu of the
// normalized class sums, the deduplicated value sets S^(alpha), and the
// coefficients turning each rational spectral factor into a polynomial in
// the evaluation variable.
// ---------------------------------------------------------------------------
struct SpectralData {
    int m = 0;
    std::vector<std::vector<Cyclotomic>> xi;         // [nu][alpha]
    std::vector<std::vector<Cyclotomic>> value_sets; // S^(alpha), first-occurrence order
    std::vector<std::vector<Cyclotomic>> char_poly;  // per alpha: a_0..a_k of prod(X - xi)
    std::vector<int> degrees;
    long conductor = 1;

    /// Coefficients c_1..c_k with  factor(v0) = sum_i c_{i+1} * (class sum)^i,
    /// i.e. the polynomial form of prod(v0 - xi) / (v0 - class sum).
    std::vector<Cyclotomic> factor_coeffs(int alpha, const Cyclotomic& v0) const;
    /// The same coefficients with v kept symbolic.
    std::vector<Poly> factor_coeff_polys(int alpha) const;
};

SpectralData spectral_data(const GroupTable& g, const ConjugacyData& cd,
                           const CharacterTable& ct);

// ---------------------------------------------------------------------------
// Canonical generators of a built-in abelian group (cyclic factors of a
// direct-product decomposition). Empty for the trivial group; nullopt when
// the group is not abelian or the decomposition is unknown.
// ---------------------------------------------------------------------------
struct AbelianGenerators {
    std::vector<int> elements;
    std::vector<int> orders;
};

std::optional<AbelianGenerators> canonical_abelian_generators(const GroupPtr& g);

/// Check that products t1^e1 ... tN^eN over 0 <= e_i < order(t_i) enumerate
/// the whole group without repetition.
bool generators_decompose_group(const GroupTable& g, const std::vector<int>& gens);

} // namespace wrf
