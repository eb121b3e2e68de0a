#pragma once

#include <nlohmann/json_fwd.hpp>

#include "matfun/function_spec.hpp"
#include "matfun/interp.hpp"
#include "matfun/jordan.hpp"
#include "matfun/matrix_functions.hpp"
#include "matfun/ode.hpp"
#include "matfun/spectrum.hpp"

namespace matfun {

using Json = nlohmann::json;

// All complex values cross the text boundary as strings ("5", "-0.04",
// "1+2i"); readers throw std::invalid_argument on malformed input.

// ["25","15","-9","1"] -- ascending degree
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"rows":[["9","-15","-25"],["1","0","0"],["0","1","0"]]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

std::vector<Complex> complex_vector_from_json(const Json& j);
Json complex_vector_to_json(const std::vector<Complex>& v);

// {"eigenvalues":[{"value":"5","multiplicity":2},...]}; char_poly is written
// but optional on read (reconstructed from the roots when absent).
Json to_json(const SpectrumEstimate& s);
SpectrumEstimate spectrum_from_json(const Json& j);

// {"nodes":[{"lambda":"5","multiplicity":2,"data":["0.2","-0.04"]},...]} with
// data as raw derivative values c^(m); jet scaling is internal.
Json to_json(const InterpolationSpec& s);
InterpolationSpec interpolation_spec_from_json(const Json& j);

// {"kind":"exp"} | {"kind":"power","k":3} | {"kind":"polynomial","coeffs":[...]}
// | {"kind":"rational","num":[...],"den":[...]} | {"kind":"scaled_exp","t":"1"} | ...
Json to_json(const FunctionSpec& f);
FunctionSpec function_spec_from_json(const Json& j);

// {"coeffs":["25","15","-9"]}
Json to_json(const LinearODE& ode);
LinearODE ode_from_json(const Json& j);

Json to_json(const SolutionBasis& basis);
Json to_json(const RemainderBound& bound);
Json to_json(const JordanForm& form);
Json to_json(const ResolventIdentityReport& report);
Json to_json(const SpectralDecomposition& decomp, const ResolventIdentityReport& report);

}  // namespace matfun
