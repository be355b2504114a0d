#pragma once

#include "chern/chern_polynomial.hpp"
#include "chern/invariance.hpp"
#include "chern/manifolds.hpp"
#include "chern/projbundle.hpp"
#include "chern/rational.hpp"
#include "chern/ypoly.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chern {

using nlohmann::json;

/// Rationals render as bare integers when they fit in 64 bits, and as exact
/// "p/q" (or big-integer) strings otherwise.
inline json rational_to_json(const Rational& r) {
    if (is_integer(r)) {
        const Integer& n = numerator(r);
        if (n >= std::numeric_limits<long long>::min() &&
            n <= std::numeric_limits<long long>::max())
            return json(static_cast<long long>(n));
        return json(n.str());
    }
    return json(to_string(r));
}

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected rational as integer or \"p/q\" string");
}

inline json to_json(const Partition& p) {
    json a = json::array();
    for (int x : p) a.push_back(x);
    return a;
}

inline Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be an array");
    Partition p = j.get<Partition>();
    if (!is_valid_partition(p))
        throw std::invalid_argument("not a weakly decreasing positive tuple");
    return p;
}

inline json to_json(const ChernVector& v) {
    json vals = json::array();
    for (const auto& x : v.values) vals.push_back(rational_to_json(x));
    return json{{"dim", v.dim}, {"values", vals}};
}

inline ChernVector chern_vector_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<Rational> vals;
    for (const auto& x : j.at("values")) vals.push_back(rational_from_json(x));
    return ChernVector(dim, std::move(vals));
}

inline json to_json(const ChernPolynomial& p) {
    json terms = json::array();
    for (const auto& [k, v] : p.terms())
        terms.push_back(json{{"partition", to_json(k)},
                             {"coeff", rational_to_json(v)}});
    return terms;
}

/// chi_y-style functionals carry an extra y-degree per record.
inline json to_json(const YChernPolynomial& p) {
    json terms = json::array();
    for (const auto& [k, v] : p.terms())
        for (int d = 0; d <= v.degree(); ++d)
            if (!(v.coeff(d) == 0))
                terms.push_back(json{{"partition", to_json(k)},
                                     {"coeff", rational_to_json(v.coeff(d))},
                                     {"y_degree", d}});
    return terms;
}

inline ChernPolynomial chern_polynomial_from_json(const json& j, int truncation) {
    ChernPolynomial p(truncation);
    for (const auto& t : j)
        p.add_term(partition_from_json(t.at("partition")),
                   rational_from_json(t.at("coeff")));
    return p;
}

inline json to_json(const SurfaceData& s) {
    return json{{"c1_sq", s.c1_sq}, {"c2", s.c2}};
}

inline SurfaceData surface_from_json(const json& j) {
    return SurfaceData(j.at("c1_sq").get<long long>(),
                       j.at("c2").get<long long>());
}

inline json to_json(const ProjBundleData& d) {
    return json{{"b_sq", d.b_sq}, {"b_f", d.b_f}, {"f_sq", d.f_sq},
                {"c2B", d.c2B}, {"c2E", d.c2E}};
}

inline ProjBundleData proj_bundle_from_json(const json& j) {
    return ProjBundleData{j.at("b_sq").get<long long>(),
                          j.at("b_f").get<long long>(),
                          j.at("f_sq").get<long long>(),
                          j.at("c2B").get<long long>(),
                          j.at("c2E").get<long long>()};
}

inline json to_json(const HodgeDiamond& d) {
    return json{{"n", d.n}, {"h", d.h}};
}

inline HodgeDiamond hodge_from_json(const json& j) {
    return HodgeDiamond(j.at("n").get<int>(),
                        j.at("h").get<std::vector<std::vector<long long>>>());
}

inline json to_json(const Functional& f) {
    json c = json::array();
    for (const auto& x : f.coeffs) c.push_back(rational_to_json(x));
    return json{{"dim", f.dim}, {"coeffs", c}};
}

inline json to_json(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_to_json(x));
    return a;
}

inline json to_json(const TheoremReport& r) {
    json checks = json::array();
    for (const auto& [name, ok] : r.checks)
        checks.push_back(json{{"name", name}, {"pass", ok}});
    json diffs = json::array();
    for (const auto& d : r.difference_vectors) diffs.push_back(to_json(d));
    json basis = json::array();
    for (const auto& f : r.annihilator_basis) basis.push_back(to_json(f));
    json expected = json::array();
    for (const auto& f : r.expected_basis) expected.push_back(to_json(f));
    return json{{"theorem", r.theorem},
                {"inputs", r.inputs},
                {"difference_vectors", diffs},
                {"annihilator_basis", basis},
                {"expected_basis", expected},
                {"checks", checks},
                {"pass", r.pass}};
}

/// One self-describing JSON document of named entries:
/// {"entries":[{"name":..., "kind":"surface"|"chern_vector"|"proj_bundle"|
/// "hodge_diamond"|"pair", ...}]}.
class Catalog {
  public:
    struct Pair {
        std::string left;
        std::string right;
        std::string label;
        std::string provenance;
    };

    static Catalog parse(const json& j) {
        Catalog cat;
        for (const auto& e : j.at("entries")) {
            std::string name = e.at("name").get<std::string>();
            std::string kind = e.at("kind").get<std::string>();
            if (cat.kinds_.count(name))
                throw std::invalid_argument("duplicate catalog name: " + name);
            cat.kinds_[name] = kind;
            if (kind == "surface")
                cat.surfaces_[name] = surface_from_json(e);
            else if (kind == "chern_vector")
                cat.vectors_[name] = chern_vector_from_json(e);
            else if (kind == "proj_bundle")
                cat.bundles_[name] = proj_bundle_from_json(e);
            else if (kind == "hodge_diamond")
                cat.diamonds_[name] = hodge_from_json(e);
            else if (kind == "pair")
                cat.pairs_[name] =
                    Pair{e.at("left").get<std::string>(),
                         e.at("right").get<std::string>(),
                         e.value("label", name), e.value("provenance", "")};
            else
                throw std::invalid_argument("unknown catalog kind: " + kind);
        }
        // pair entries must reference existing vector entries of equal dim
        for (const auto& [name, p] : cat.pairs_) {
            const auto& l = cat.vector(p.left);
            const auto& r = cat.vector(p.right);
            if (l.dim != r.dim)
                throw std::invalid_argument("pair " + name +
                                            ": member dimensions differ");
        }
        return cat;
    }

    bool has(const std::string& name) const { return kinds_.count(name) > 0; }
    const std::string& kind(const std::string& name) const {
        auto it = kinds_.find(name);
        if (it == kinds_.end()) throw std::out_of_range("no entry: " + name);
        return it->second;
    }

    const SurfaceData& surface(const std::string& name) const {
        return at(surfaces_, name, "surface");
    }
    const ChernVector& vector(const std::string& name) const {
        return at(vectors_, name, "chern_vector");
    }
    const ProjBundleData& bundle(const std::string& name) const {
        return at(bundles_, name, "proj_bundle");
    }
    const HodgeDiamond& diamond(const std::string& name) const {
        return at(diamonds_, name, "hodge_diamond");
    }
    const Pair& pair(const std::string& name) const {
        return at(pairs_, name, "pair");
    }
    const std::map<std::string, Pair>& pairs() const { return pairs_; }

  private:
    template <typename M>
    const typename M::mapped_type& at(const M& m, const std::string& name,
                                      const char* kind) const {
        auto it = m.find(name);
        if (it == m.end())
            throw std::out_of_range(std::string("no ") + kind + " entry: " + name);
        return it->second;
    }

    std::map<std::string, std::string> kinds_;
    std::map<std::string, SurfaceData> surfaces_;
    std::map<std::string, ChernVector> vectors_;
    std::map<std::string, ProjBundleData> bundles_;
    std::map<std::string, HodgeDiamond> diamonds_;
    std::map<std::string, Pair> pairs_;
};

}  // namespace chern
