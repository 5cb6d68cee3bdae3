#pragma once

#include "salg/induced.hpp"

namespace salg {

struct InvalidWhittakerData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// psi_k data: a one-dimensional character of S^(k) = span{L_i, W_i, G_{i+1/2}
// : i >= k} + centrals, vanishing on L_{>= 2k+1}, W_{>= 2k}, all G, with
// psi(W_{2k-1}) != 0.
struct WhittakerData {
    int k = 1;
    std::map<GenIndex, Rational> psi;  // nonzero values; only L_k..L_2k, W_k..W_{2k-1}
    Rational c1 = 0;
    Rational c2 = 0;
    int w_parity = 0;  // parity of the cyclic vector

    Rational psi_of(const GenIndex& g) const;
};

// Throws InvalidWhittakerData on constraint violations; the report records the
// homomorphism check over the window.
CheckReport validate_whittaker(const WhittakerData& data, long window);

// V~ = U(T_1) (x)_{U(S_0 + S_+)} V_psi, the T_1-module underlying the
// Whittaker induction with t = 2k-1, d = 1.  Keys pack the exponents of
// W_{-1}, W_0..W_{k-1}, G_{1/2}..G_{k-1/2}, L_0..L_{k-1} in that order.
class WhittakerCoeffModule : public CoeffModule {
  public:
    WhittakerCoeffModule(WhittakerData data, long window = 8);

    const WhittakerData& data() const { return data_; }

    int d() const override { return 1; }
    int t() const override { return 2 * data_.k - 1; }
    Rational c1() const override { return data_.c1; }
    Rational c2() const override { return data_.c2; }
    int key_parity(const CoeffKey& key) const override;
    long key_weight2(const CoeffKey& key) const override;
    CoeffVec act(const GenIndex& g, const CoeffKey& key) const override;
    std::vector<CoeffKey> keys(long weight2_bound, int degree_bound) const override;

  private:
    CoeffVec mul(const GenIndex& g, const CoeffKey& key) const;

    WhittakerData data_;
    mutable std::map<std::pair<GenIndex, CoeffKey>, CoeffVec> memo_;
};

InducedModule build_whittaker(const WhittakerData& data, long weight2_bound);

}  // namespace salg
