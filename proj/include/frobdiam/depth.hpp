#ifndef FROBDIAM_DEPTH_HPP
#define FROBDIAM_DEPTH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "json.hpp"

#include "frobdiam/frobenius.hpp"

namespace frobdiam
{

using Support = std::vector<std::vector<bool>>;

Support support_of(IntMatrix const &a);
Support support_product(Support const &a, Support const &b);

// For nonnegative integer matrices, A <= qB for some q > 0 holds exactly when
// every nonzero entry of A sits where B is nonzero: take q = max A.
bool support_contained(Support const &a, Support const &b);

struct DepthReport
{
  std::size_t minimal_depth = 0;
  // least m >= 0 with supp(S^(m+1)) in supp(S^m): depth 2m+1
  std::size_t odd_m = 0;
  // least m >= 1 with supp(S^m M) in supp(S^(m-1) M): depth 2m
  std::size_t even_m = 0;
  // depth 1, i.e. S diagonal
  bool degenerate = false;
  // number of nonzero entries of supp(S^m), m = 0, 1, ... until stable
  std::vector<std::size_t> support_chain_lengths;
};

/// Whether H has depth n in G, read off the Frobenius matrix M.
bool has_depth(IntMatrix const &m, std::size_t n);

DepthReport minimal_depth(IntMatrix const &m);
DepthReport minimal_depth(Inclusion const &inc);

nlohmann::json depth_to_json(DepthReport const &report);

} // namespace frobdiam

#endif // FROBDIAM_DEPTH_HPP
