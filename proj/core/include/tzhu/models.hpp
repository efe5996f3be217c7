#pragma once

#include "tzhu/voa.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tzhu {

enum class Twist { identity, charge_conjugation };

Twist parse_twist(std::string_view s);
std::string twist_name(Twist t);

struct ModelId {
  std::string name;  // heisenberg, virasoro-universal, virasoro-simple
  Rational c = Rational(1, 2);
  Twist twist = Twist::identity;
};

const std::vector<std::string>& model_names();

// Rank-one free boson, a of weight 1, omega = (1/2) a(-1)^2 1. Charge
// conjugation a -> -a gives a the g-exponent 1 with T = 2.
VoaSpec build_heisenberg(int cutoff, Twist twist = Twist::identity);

// Universal Virasoro vacuum module M_c with generator L of weight 2.
VoaSpec build_virasoro(const Rational& c, int cutoff);

// L(c, 0): M_c modulo the radical of the contravariant form, weight by weight.
VoaSpec build_virasoro_simple(const Rational& c, int cutoff);

// Validates the name/twist combination; throws ConfigError.
VoaSpec build_model(const ModelId& id, int cutoff);

// Gram matrix of the contravariant form (adjoint x[k] -> x[-k]) on all PBW keys
// of the given weight, in canonical order.
Matrix shapovalov_gram(const VoaSpec& spec, int weight);

// Echelon basis of the kernel of the Gram matrix at this weight.
Echelon<KeyId> gram_radical(const VoaSpec& spec, int weight);

}  // namespace tzhu
