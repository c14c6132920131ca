#include "uqrs/vertex.hpp"

namespace uqrs {

std::vector<PartitionTerm> partitions_of(int n) {
  std::vector<PartitionTerm> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      PartitionTerm t;
      t.parts = parts;
      t.length = static_cast<int>(parts.size());
      mpz_class denom = 1;
      for (std::size_t k = 0; k < parts.size();) {
        std::size_t e = k;
        while (e < parts.size() && parts[e] == parts[k]) ++e;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e - k));
        denom *= f;
        k = e;
      }
      t.inv_mult_factorial = Rational(mpz_class(1), denom);
      t.inv_mult_factorial.canonicalize();
      out.push_back(std::move(t));
      return;
    }
    for (int p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

Monomial lowering_scale(const RootData& roots, const Cocycle& eps, int i) {
  Monomial out = eps.base(i, i).inverse();
  if (i < roots.rank()) out = out * monomial_pow(rs_monomial(1, 1), Rational(1, 4));
  return out;
}

template class VertexEngine<SymbolicField>;
template class VertexEngine<NumericField>;

}  // namespace uqrs
