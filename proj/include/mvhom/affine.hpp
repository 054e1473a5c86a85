#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvhom {

using Rat = boost::multiprecision::cpp_rational;

// One factor of a product polytope: a standard simplex of a given dimension
// (dim+1 barycentric coordinates) or the unit interval (one coordinate).
struct Factor {
    enum Kind { Simplex, Interval } kind = Simplex;
    int dim = 0; // simplex dimension; unused for intervals

    bool operator==(const Factor& other) const {
        return kind == other.kind && (kind == Interval || dim == other.dim);
    }
};

using Signature = std::vector<Factor>;

Signature simplex_sig(int n);
Signature simplex_interval_sig(int n); // Delta_n x I

int ambient_dim(const Signature& sig);
int vertex_count(const Signature& sig);
// Coordinates of a polytope vertex; vertices are enumerated in mixed-radix
// order, first factor slowest.
std::vector<Rat> vertex_coords(const Signature& sig, int index);
// Whether a coordinate vector lies in the polytope (exact check).
bool in_polytope(const Signature& sig, const std::vector<Rat>& point);

// An affine map between product polytopes, stored as exact rational images
// of the domain vertices. Affine maps agree everywhere iff they agree on
// vertices, so equality and composition stay exact.
struct AffineMap {
    Signature dom;
    Signature cod;
    std::vector<std::vector<Rat>> vertex_images;

    bool operator==(const AffineMap& other) const {
        return dom == other.dom && cod == other.cod && vertex_images == other.vertex_images;
    }
};

// Checked constructor: every vertex image must lie in the codomain polytope.
AffineMap make_affine(Signature dom, Signature cod, std::vector<std::vector<Rat>> vertex_images);

// Evaluates the affine extension at an arbitrary point of the domain
// polytope, via the multilinear weights of the product structure.
std::vector<Rat> eval_affine(const AffineMap& f, const std::vector<Rat>& point);

// then_ after first.
AffineMap compose_affine(const AffineMap& first, const AffineMap& then_);
bool equal_affine(const AffineMap& f, const AffineMap& g);

AffineMap identity_affine(const Signature& sig);

// Face map Delta_{n-1} -> Delta_n inserting a zero at coordinate i.
AffineMap face_map(int n, int i);
// Degeneracy Delta_{n+1} -> Delta_n merging coordinates i and i+1.
AffineMap degeneracy_map(int n, int i);
// Prism map Delta_{n+1} -> Delta_n x I:
//   (t_0..t_{n+1}) -> ((t_0,..,t_{i-1}, t_i + t_{i+1}, t_{i+2},..), t_{i+1}+..+t_{n+1})
AffineMap prism_map(int n, int i);
// The same, as the raw coordinate formula (for cross-checking eval_affine).
std::vector<Rat> prism_formula(int n, int i, const std::vector<Rat>& point);
// f x id_I.
AffineMap product_with_interval(const AffineMap& f);
// Delta_n -> Delta_n x I at interval level 0 or 1.
AffineMap interval_inclusion(int n, int level);

struct IdentityCheck {
    std::string identity;
    int n = 0;
    int i = -1; // -1 when not applicable
    int j = -1;
    bool ok = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_ok() const;
    int failures() const;
};

// Verifies the five prism identities and the simplicial face/degeneracy
// identities exactly for all admissible indices with n <= max_n.
IdentityReport verify_prism_identities(int max_n);

} // namespace mvhom
