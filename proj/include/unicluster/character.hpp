#pragma once

#include "unicluster/coordring.hpp"
#include "unicluster/mutation.hpp"

namespace unicluster {

// Number of composition series of x (over a prime field) whose subquotient
// types follow the given vertex sequence; 0 when the type does not match the
// dimension vector. Enumerated chain by chain.
Int count_comp_series(const Rep& x, const std::vector<int>& type);

// Euler characteristic of the composition-series variety: point counts over
// a prime list, polynomial interpolation in q with a consistency
// certificate, evaluation at q = 1. Throws if the certificate fails.
Int euler_char(const Rep& x, const std::vector<int>& type);
Int euler_char_with_primes(const Rep& x, const std::vector<int>& type, const std::vector<long>& primes,
                           int degree_bound);

// First n primes starting at 2.
std::vector<long> default_primes(int n);

struct CharPoly {
    MultiPoly poly;
    Word word;
};

// The cluster character: sum over exponent vectors of
// chi(Phi_{X, a1^i1 ... a6^i6}) t1^i1...t6^i6 / (i1! ... i6!).
// Coefficients are checked to be nonnegative integers.
CharPoly cluster_char(const Rep& x, const Word& w);
const CharPoly& catalog_char(CatalogId id, const Word& w);  // cached

// Pullback of a minor through the word parametrization, cached.
const MultiPoly& minor_pullback(const MinorSpec& spec, const Word& w);

// The unique non-trivial minor whose pullback equals the character of x;
// throws on zero or multiple matches.
MinorSpec match_minor(const Rep& x, const Word& w);

// phi_{x + y} = phi_x phi_y.
bool verify_multiplicativity(const Rep& x, const Rep& y, const Word& w);

// phi_{T_i} phi_{T_i*} = phi_{T_a} + phi_{T_b} across an exchange-graph edge,
// middle terms evaluated through their summand decompositions.
bool verify_exchange(const ExchangeGraph::Edge& e, const Word& w);

// The same identity expressed in a-variables via the character table.
bool edge_minor_identity(const ExchangeGraph::Edge& e);

}  // namespace unicluster
