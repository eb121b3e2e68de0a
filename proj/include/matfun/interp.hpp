#pragma once

#include <vector>

#include "matfun/function_spec.hpp"
#include "matfun/polynomial.hpp"

namespace matfun {

struct NodeMult {
    Complex lambda;
    unsigned multiplicity = 1;
};
using NodeList = std::vector<NodeMult>;

// One interpolation node: value and derivative conditions at lambda.
// data is jet-scaled, data[p] = c^(p)/p!, and has length = multiplicity.
struct InterpolationNode {
    Complex lambda;
    unsigned multiplicity = 1;
    std::vector<Complex> data;
};

class InterpolationSpec {
public:
    // Validates multiplicities, data lengths and pairwise node distinctness.
    // Throws NodesTooClose when two lambdas are within node separation tolerance.
    static InterpolationSpec from_nodes(std::vector<InterpolationNode> nodes);

    // data entries are raw derivative values c^(m) (the external convention);
    // they are jet-scaled internally.
    static InterpolationSpec from_raw(const NodeList& nodes,
                                      const std::vector<std::vector<Complex>>& raw_data);

    const std::vector<InterpolationNode>& nodes() const { return nodes_; }
    unsigned total_degree() const { return total_; }  // n = sum of multiplicities

private:
    InterpolationSpec() = default;

    std::vector<InterpolationNode> nodes_;
    unsigned total_ = 0;
};

// Newton form of the interpolation polynomial:
//   L = a_0 + a_1 (x - z_0) + a_2 (x - z_0)(x - z_1) + ...
// with repeated nodes contiguous in z.
struct HermiteNewtonForm {
    std::vector<Complex> centers;  // z_0 .. z_{n-1}
    std::vector<Complex> coeffs;   // a_0 .. a_{n-1}

    Polynomial to_polynomial() const;
};

inline constexpr unsigned kMaxInterpolationNodes = 64;

// Confluent divided differences; nodes sorted by descending multiplicity then
// lexicographic (re, im) so repeated nodes are contiguous and output is
// deterministic.
HermiteNewtonForm hermite_newton_form(const InterpolationSpec& spec);

// The unique polynomial of degree < n matching all conditions. Simple node
// sets (all multiplicities 1) go through the explicit Lagrange product
// formula; the general case goes through the Newton form. The defining
// conditions are re-checked after construction; a residual above tolerance
// raises IllConditioned.
Polynomial hermite_solve(const InterpolationSpec& spec);

// Fills node data from f via jet_of, then solves.
Polynomial hermite_from_function(const FunctionSpec& f, const NodeList& nodes);

// Given L0 interpolating `existing`, returns L0 + c * prod (x - lambda_j)^m_j
// with the unique c enforcing one extra condition: either a fresh simple node
// (target_order = 0) or one more derivative at an existing node (target_order
// = its current multiplicity).
Polynomial extend_one_point(const Polynomial& l0, const NodeList& existing, Complex new_node,
                            Complex target_value, unsigned target_order);

// Interpolation on the union of two disjoint node sets from the interpolations
// of Q/T2 on set1 and Q/T1 on set2:  L = [Q T2^-1]_1 T2 + [Q T1^-1]_2 T1.
Polynomial merge_union(const FunctionSpec& q, const NodeList& set1, const NodeList& set2);
Polynomial merge_union(const Polynomial& q, const NodeList& set1, const NodeList& set2);

// Interpolation polynomial with value 1 at nodes[i] and all other data zero,
// via the closed form: Taylor polynomial of 1/prod_{j!=i}(x-lambda_j)^m_j at
// lambda_i, times that product.
Polynomial principal_resolvent(const NodeList& nodes, size_t i);

struct RemainderBound {
    double x0 = 0.0;
    double bound = 0.0;
    double actual_error = 0.0;
    bool holds = false;  // |actual_error| <= bound
};

// Lagrange remainder bound |f(x0) - L(x0)| <= deriv_sup/n! * prod |x0-lambda_j|^m_j
// for real nodes and real x0. deriv_sup must dominate |f^(n)| on the convex
// hull of nodes and x0. Throws NonRealInput for non-real nodes or x0.
RemainderBound remainder_bound_check(const FunctionSpec& f, const NodeList& nodes, Complex x0,
                                     double deriv_sup);

// Estimates sup |f^(n)| over the hull of the nodes and x0 by dense sampling;
// used by the CLI when the caller does not supply deriv_sup.
double remainder_derivative_sup(const FunctionSpec& f, const NodeList& nodes, double x0,
                                unsigned samples = 1024);

}  // namespace matfun
