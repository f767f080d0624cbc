#pragma once

// Independent reference computations for the test suite. Everything here
// recomputes values through a different route than the library code under
// test: direct product enumeration instead of the shared power cache, dual
// normal enumeration instead of the simplex method, dense linear algebra
// instead of Groebner bases.

#include "fptkit/linalg.hpp"
#include "fptkit/monomial.hpp"
#include "fptkit/poly.hpp"
#include "fptkit/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fptkit::oracle {

// nu via recursive expansion of every r-fold generator product and a direct
// per-monomial exponent test. Small inputs only.
uint64_t nu_direct(const Ring& R, const std::vector<Poly>& gens, uint32_t e);

// Some r-fold product keeps a monomial with all exponents below q.
bool survivor_direct(const Ring& R, const std::vector<Poly>& gens, uint64_t r, uint64_t q);

// Threshold of a monomial ideal from the dual description of its Newton
// polyhedron: enumerate candidate facet normals from generator subsets
// padded with coordinate directions, n <= 3.
Rat monomial_fpt_dual(const MonomialIdeal& a);

// Rational point membership in the Newton polyhedron, same normal
// enumeration. Integer points of the polyhedron are the closure monomials.
bool newton_member_dual(const MonomialIdeal& a, const QVec& x);

// Dimension of the degree-t piece of the ideal generated by homogeneous
// gens, by row rank of the multiplication matrix.
uint64_t ideal_piece_dim(const Ring& R, const std::vector<Poly>& gens, uint64_t t);

// Quotient dimension in degree t: monomial count minus ideal piece.
uint64_t quotient_piece_dim(const Ring& R, const std::vector<Poly>& gens, uint64_t t);

// Degree-t homogeneous f lies in the span of the degree-t ideal piece.
bool in_ideal_piece(const Ring& R, const Poly& f, const std::vector<Poly>& gens);

// Hilbert function of the s-th power of a concrete complete intersection of
// n random degree-d forms in n+1 variables over F_101.
uint64_t ci_hilbert_explicit(uint32_t n, uint32_t d, uint32_t s, uint64_t t, uint64_t seed);

// Polygon area by the shoelace formula (vertices re-sorted around their
// centroid first).
Rat shoelace_area(const std::vector<QVec>& vertices);

// Lattice points inside a triangle (or segment or point) with rational
// vertices, by exact orientation tests over a bounding box.
Int triangle_lattice_count(const std::vector<QVec>& vertices);

// Seeded generators for test corpora.
MonomialIdeal rand_monomial_ideal(std::mt19937_64& rng, uint32_t n, uint32_t max_exp,
                                  uint32_t max_gens);
MonomialIdeal rand_mprimary_ideal(std::mt19937_64& rng, uint32_t n, uint32_t max_exp,
                                  uint32_t extra_gens);
Poly rand_homogeneous(const Ring& R, std::mt19937_64& rng, uint32_t d);
Poly rand_linear_form(const Ring& R, std::mt19937_64& rng);

} // namespace fptkit::oracle
