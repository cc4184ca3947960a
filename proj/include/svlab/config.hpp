#ifndef SVLAB_CONFIG_HPP
#define SVLAB_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "svlab/curve.hpp"
#include "svlab/multipoly.hpp"
#include "svlab/unipoly.hpp"
#include "svlab/variety.hpp"

namespace svlab {

/**
 * One JSON run configuration.  Top-level keys:
 *
 *   n, k              required ints (ambient dimension, variety dimension)
 *   N                 int, required when hypersurfaces are present
 *   generators        array of polynomial strings in x0..xn (may be empty)
 *   hypersurfaces     array of {"poly": str, "degree": int}
 *   curve_f, curve_g  arrays of n+1 univariate polynomial strings in z
 *   r_grid            array of radii, each > 1
 *   tolerances        {"quadrature": double > 0, "root": double > 0}
 *   seed              unsigned integer
 *   caps              {"d_cap": int >= 0, "retry": int >= 1}
 *   hilbert_dmax      int in [1, 16]
 *   jensen            {"num": str, "den": str}, both nonzero
 *   alpha_beta_samples  array of arrays of n+1 constant coefficient strings
 *
 * Unknown keys anywhere are rejected with ConfigError.  Polynomial syntax
 * errors surface as ParseError with the byte offset inside the offending
 * string.
 */
struct RunConfig {
    int n = 0;
    int k = 0;
    std::optional<int> n_param;
    std::vector<MultiPoly> generators;
    std::vector<MultiPoly> hyp_polys;
    std::vector<int> hyp_degrees;
    std::optional<RationalCurve> curve_f;
    std::optional<RationalCurve> curve_g;
    std::vector<double> r_grid{2.0, 10.0, 100.0, 1000.0};
    double quad_tol = 1e-8;
    double root_tol = 1e-12;
    std::uint64_t seed = 0xC0FFEE;
    int d_cap = 0;
    int max_retries = 16;
    int hilbert_dmax = 6;
    std::optional<std::pair<UniPoly, UniPoly>> jensen;
    std::vector<std::vector<GaussRat>> alpha_beta_samples;

    VarietyModel make_variety() const;

    /// Throws ConfigError when the config carries no hypersurfaces or no N.
    HypersurfaceFamily make_family() const;
};

/// Parse a config from JSON text; `source` names it in error messages.
RunConfig parse_config(const std::string& text, const std::string& source);

/// Read and parse a config file.
RunConfig load_config(const std::string& path);

} // namespace svlab

#endif
