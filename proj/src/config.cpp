#include "svlab/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "svlab/errors.hpp"
#include "svlab/parse.hpp"

namespace svlab {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (allowed.find(it.key()) == allowed.end())
            throw ConfigError(where + ": unknown key \"" + it.key() + "\"");
}

int get_int(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw ConfigError("\"" + key + "\" must be an integer");
    return v.get<int>();
}

double get_double(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("\"" + key + "\" must be a number");
    double x = v.get<double>();
    if (!std::isfinite(x))
        throw ConfigError("\"" + key + "\" must be finite");
    return x;
}

std::string get_string(const json& v, const std::string& what) {
    if (!v.is_string())
        throw ConfigError(what + " must be a string");
    return v.get<std::string>();
}

/// Constant coefficient strings reuse the polynomial coefficient grammar.
GaussRat parse_constant(const std::string& text, const std::string& what) {
    UniPoly p = parse_uni(text);
    if (p.degree() > 0)
        throw ConfigError(what + " must be a constant, got \"" + text + "\"");
    return p.coeff(0);
}

RationalCurve parse_curve(const json& arr, int n, const std::string& key) {
    if (!arr.is_array())
        throw ConfigError("\"" + key + "\" must be an array of strings");
    if (static_cast<int>(arr.size()) != n + 1)
        throw ConfigError("\"" + key + "\" must have n+1 = " + std::to_string(n + 1) +
                          " components, got " + std::to_string(arr.size()));
    RationalCurve c;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string text =
            get_string(arr[i], "\"" + key + "\"[" + std::to_string(i) + "]");
        try {
            c.comps.push_back(parse_uni(text));
        } catch (const ParseError& e) {
            throw ParseError(key + "[" + std::to_string(i) + "]: " + e.what(),
                             e.offset());
        }
    }
    return c;
}

} // namespace

VarietyModel RunConfig::make_variety() const { return VarietyModel(n, k, generators); }

HypersurfaceFamily RunConfig::make_family() const {
    if (hyp_polys.empty())
        throw ConfigError("config has no hypersurfaces");
    if (!n_param)
        throw ConfigError("config has hypersurfaces but no N");
    return HypersurfaceFamily::make(hyp_polys, *n_param);
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what(), e.byte);
    }
    if (!root.is_object())
        throw ConfigError(source + ": top level must be an object");

    reject_unknown(root,
                   {"n", "k", "N", "generators", "hypersurfaces", "curve_f", "curve_g",
                    "r_grid", "tolerances", "seed", "caps", "hilbert_dmax", "jensen",
                    "alpha_beta_samples"},
                   source);

    RunConfig cfg;
    if (!root.contains("n") || !root.contains("k"))
        throw ConfigError(source + ": \"n\" and \"k\" are required");
    cfg.n = get_int(root, "n");
    cfg.k = get_int(root, "k");
    if (cfg.n < 1) throw ConfigError("\"n\" must be >= 1");
    if (cfg.k < 1 || cfg.k > cfg.n)
        throw ConfigError("\"k\" must satisfy 1 <= k <= n");

    if (root.contains("N")) {
        cfg.n_param = get_int(root, "N");
        if (*cfg.n_param < cfg.k)
            throw ConfigError("\"N\" must be >= k");
    }

    if (root.contains("generators")) {
        const json& arr = root.at("generators");
        if (!arr.is_array())
            throw ConfigError("\"generators\" must be an array of strings");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            std::string s =
                get_string(arr[i], "\"generators\"[" + std::to_string(i) + "]");
            try {
                cfg.generators.push_back(parse_multi(s, cfg.n + 1));
            } catch (const ParseError& e) {
                throw ParseError("generators[" + std::to_string(i) + "]: " + e.what(),
                                 e.offset());
            }
        }
    }

    if (root.contains("hypersurfaces")) {
        const json& arr = root.at("hypersurfaces");
        if (!arr.is_array())
            throw ConfigError("\"hypersurfaces\" must be an array of objects");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& h = arr[i];
            std::string where = "hypersurfaces[" + std::to_string(i) + "]";
            if (!h.is_object())
                throw ConfigError(where + " must be an object");
            reject_unknown(h, {"poly", "degree"}, where);
            if (!h.contains("poly") || !h.contains("degree"))
                throw ConfigError(where + " needs \"poly\" and \"degree\"");
            std::string s = get_string(h.at("poly"), where + ".poly");
            MultiPoly p(cfg.n + 1);
            try {
                p = parse_multi(s, cfg.n + 1);
            } catch (const ParseError& e) {
                throw ParseError(where + ".poly: " + e.what(), e.offset());
            }
            int deg = get_int(h, "degree");
            if (p.is_zero() || !p.is_homogeneous() || p.homogeneous_degree() != deg)
                throw ConfigError(where + ": polynomial is not homogeneous of degree " +
                                  std::to_string(deg));
            cfg.hyp_polys.push_back(std::move(p));
            cfg.hyp_degrees.push_back(deg);
        }
    }

    if (root.contains("curve_f"))
        cfg.curve_f = parse_curve(root.at("curve_f"), cfg.n, "curve_f");
    if (root.contains("curve_g"))
        cfg.curve_g = parse_curve(root.at("curve_g"), cfg.n, "curve_g");

    if (root.contains("r_grid")) {
        const json& arr = root.at("r_grid");
        if (!arr.is_array() || arr.empty())
            throw ConfigError("\"r_grid\" must be a nonempty array");
        cfg.r_grid.clear();
        for (const json& v : arr) {
            if (!v.is_number())
                throw ConfigError("\"r_grid\" entries must be numbers");
            double r = v.get<double>();
            if (!std::isfinite(r) || r <= 1.0)
                throw ConfigError("\"r_grid\" entries must be finite and > 1");
            cfg.r_grid.push_back(r);
        }
    }

    if (root.contains("tolerances")) {
        const json& t = root.at("tolerances");
        if (!t.is_object())
            throw ConfigError("\"tolerances\" must be an object");
        reject_unknown(t, {"quadrature", "root"}, "tolerances");
        if (t.contains("quadrature")) cfg.quad_tol = get_double(t, "quadrature");
        if (t.contains("root")) cfg.root_tol = get_double(t, "root");
        if (cfg.quad_tol <= 0 || cfg.root_tol <= 0)
            throw ConfigError("tolerances must be positive");
    }

    if (root.contains("seed")) {
        const json& v = root.at("seed");
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw ConfigError("\"seed\" must be a nonnegative integer");
        if (v.is_number_integer() && v.get<long long>() < 0)
            throw ConfigError("\"seed\" must be a nonnegative integer");
        cfg.seed = v.get<std::uint64_t>();
    }

    if (root.contains("caps")) {
        const json& c = root.at("caps");
        if (!c.is_object())
            throw ConfigError("\"caps\" must be an object");
        reject_unknown(c, {"d_cap", "retry"}, "caps");
        if (c.contains("d_cap")) cfg.d_cap = get_int(c, "d_cap");
        if (c.contains("retry")) cfg.max_retries = get_int(c, "retry");
        if (cfg.d_cap < 0) throw ConfigError("\"d_cap\" must be >= 0");
        if (cfg.max_retries < 1) throw ConfigError("\"retry\" must be >= 1");
    }

    if (root.contains("hilbert_dmax")) {
        cfg.hilbert_dmax = get_int(root, "hilbert_dmax");
        if (cfg.hilbert_dmax < 1 || cfg.hilbert_dmax > 16)
            throw ConfigError("\"hilbert_dmax\" must be in [1, 16]");
    }

    if (root.contains("jensen")) {
        const json& jj = root.at("jensen");
        if (!jj.is_object())
            throw ConfigError("\"jensen\" must be an object");
        reject_unknown(jj, {"num", "den"}, "jensen");
        if (!jj.contains("num") || !jj.contains("den"))
            throw ConfigError("\"jensen\" needs \"num\" and \"den\"");
        UniPoly num, den;
        try {
            num = parse_uni(get_string(jj.at("num"), "jensen.num"));
        } catch (const ParseError& e) {
            throw ParseError(std::string("jensen.num: ") + e.what(), e.offset());
        }
        try {
            den = parse_uni(get_string(jj.at("den"), "jensen.den"));
        } catch (const ParseError& e) {
            throw ParseError(std::string("jensen.den: ") + e.what(), e.offset());
        }
        if (num.is_zero() || den.is_zero())
            throw ConfigError("jensen numerator and denominator must be nonzero");
        cfg.jensen = {num, den};
    }

    if (root.contains("alpha_beta_samples")) {
        const json& arr = root.at("alpha_beta_samples");
        if (!arr.is_array())
            throw ConfigError("\"alpha_beta_samples\" must be an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const json& s = arr[i];
            std::string where = "alpha_beta_samples[" + std::to_string(i) + "]";
            if (!s.is_array() || static_cast<int>(s.size()) != cfg.n + 1)
                throw ConfigError(where + " must be an array of n+1 strings");
            std::vector<GaussRat> pt;
            for (std::size_t j = 0; j < s.size(); ++j)
                pt.push_back(parse_constant(
                    get_string(s[j], where + "[" + std::to_string(j) + "]"),
                    where + "[" + std::to_string(j) + "]"));
            cfg.alpha_beta_samples.push_back(std::move(pt));
        }
    }

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw ConfigError("cannot read config file " + path);
    return parse_config(buf.str(), path);
}

} // namespace svlab
