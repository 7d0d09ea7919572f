#pragma once

#include "sph/dynkin.hpp"
#include "sph/matrix.hpp"

#include <optional>

namespace sph {

// Root vectors are integer vectors in simple-root coordinates, weight vectors
// integer vectors in fundamental-weight coordinates; both indexed by the
// diagram's global node order.

// <alpha^vee, x> for x in simple-root coordinates.
long long pairing_root(const dynkin& d, int alpha, const ivec& n);

// <alpha^vee, x> for x in fundamental-weight coordinates.
inline long long pairing_weight(int alpha, const ivec& c) { return c[alpha]; }

// W-invariant symmetric form, short roots of squared length 2 per component;
// both arguments in simple-root coordinates.
long long sym_form_roots(const dynkin& d, const ivec& x, const ivec& y);

// (lambda, x) with lambda in weight coordinates, x in root coordinates.
long long sym_form_weight_root(const dynkin& d, const ivec& lambda, const ivec& x);

// squared length (x,x) of a root-coordinate vector
inline long long sym_norm(const dynkin& d, const ivec& x) { return sym_form_roots(d, x, x); }

// c_alpha = sum_beta a[alpha][beta] n_beta
ivec root_to_weight(const dynkin& d, const ivec& n);

// Inverse conversion; rational in general.
std::vector<rat> weight_to_root(const dynkin& d, const ivec& c);

// Inverse conversion when the result is integral.
std::optional<ivec> weight_to_root_integral(const dynkin& d, const ivec& c);

std::vector<int> support(const ivec& n);

long long height(const ivec& n);

bool is_dominant(const ivec& c);

// Dominant Weyl-chamber representative of a weight.
ivec dominant_rep(const dynkin& d, ivec c);

// mu a weight of the irreducible module V(lambda)?  (lambda dominant)
bool is_module_weight(const dynkin& d, const ivec& lambda, const ivec& mu);

// Positive roots in deterministic (height, lex) order.
std::vector<ivec> positive_roots(const dynkin& d);

// <beta^vee, lambda> for an arbitrary root beta (root coords) and weight lambda.
long long coroot_pairing(const dynkin& d, const ivec& beta, const ivec& lambda);

// Weyl dimension of V(lambda); exact.
mpz_class weyl_dim(const dynkin& d, const ivec& lambda);

}  // namespace sph
