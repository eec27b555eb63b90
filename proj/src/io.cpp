#include "spslab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spslab/rng.hpp"

namespace spslab {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& msg) {
    throw InputError(origin + ": " + msg);
}

// Big numbers are canonical decimal strings; bare JSON integers are
// accepted on input for hand-written files.
BigInt read_big(const ordered_json& j, const std::string& origin, const char* what) {
    if (j.is_string()) {
        try {
            return parse_decimal(j.get<std::string>());
        } catch (const InputError& err) {
            fail(origin, err.what());
        }
    }
    if (j.is_number_unsigned()) return BigInt(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) {
        const std::int64_t v = j.get<std::int64_t>();
        BigInt b(static_cast<long>(v));
        return b;
    }
    fail(origin, std::string(what) + " must be a decimal string");
}

std::vector<BigInt> read_bits(const ordered_json& j, const std::string& origin,
                              const char* what) {
    if (!j.is_array()) fail(origin, std::string(what) + " must be an array");
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& b : j) out.push_back(read_big(b, origin, what));
    return out;
}

SpsExpr parse_sps(const ordered_json& doc, const std::string& origin) {
    if (!doc.contains("factors") || !doc["factors"].is_array())
        fail(origin, "\"factors\" must be an array");
    if (!doc.contains("products") || !doc["products"].is_array())
        fail(origin, "\"products\" must be an array");

    std::vector<SparsePoly> factors;
    // Digit decompositions per factor, empty when the file used plain
    // decimal coefficients throughout.
    std::vector<std::vector<SparseCoeff>> digit_lists;

    for (const auto& fj : doc["factors"]) {
        if (!fj.is_object() || !fj.contains("monomials") || !fj["monomials"].is_array())
            fail(origin, "factor must be {\"monomials\": [...]}");
        struct Entry {
            BigInt exp;
            BigInt coeff;
            SparseCoeff digits;
        };
        std::vector<Entry> entries;
        bool carries_digits = false;
        for (const auto& mj : fj["monomials"]) {
            if (!mj.is_object() || !mj.contains("coeff") || !mj.contains("exp"))
                fail(origin, "monomial must have \"coeff\" and \"exp\"");
            Entry e;
            e.exp = read_big(mj["exp"], origin, "exponent");
            const auto& cj = mj["coeff"];
            if (cj.is_object()) {
                if (!cj.contains("plus") || !cj.contains("minus"))
                    fail(origin, "digit coefficient needs \"plus\" and \"minus\"");
                e.digits = SparseCoeff::from_bits(
                    read_bits(cj["plus"], origin, "bit position"),
                    read_bits(cj["minus"], origin, "bit position"));
                e.coeff = e.digits.value();
                carries_digits = true;
            } else {
                e.coeff = read_big(cj, origin, "coefficient");
                e.digits = SparseCoeff::decompose(e.coeff);
            }
            if (sgn(e.exp) < 0) fail(origin, "negative exponent");
            entries.push_back(std::move(e));
        }
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.exp < b.exp; });
        for (std::size_t i = 0; i + 1 < entries.size(); ++i)
            if (entries[i].exp == entries[i + 1].exp && carries_digits)
                fail(origin, "digit-decomposed factor repeats exponent " +
                                 entries[i].exp.get_str());

        std::vector<Monomial> terms;
        std::vector<SparseCoeff> digits;
        for (auto& e : entries) {
            if (sgn(e.coeff) == 0) continue;
            terms.push_back({std::move(e.exp), e.coeff});
            digits.push_back(std::move(e.digits));
        }
        factors.push_back(SparsePoly::from_monomials(std::move(terms)));
        if (carries_digits && factors.back().term_count() != digits.size())
            fail(origin, "factor with digit coefficients repeats exponents");
        digit_lists.push_back(carries_digits ? std::move(digits)
                                             : std::vector<SparseCoeff>{});
    }

    std::vector<std::vector<std::size_t>> products;
    for (const auto& pj : doc["products"]) {
        if (!pj.is_array()) fail(origin, "product must be an array of factor indices");
        std::vector<std::size_t> refs;
        for (const auto& ij : pj) {
            if (!ij.is_number_unsigned())
                fail(origin, "factor index must be a nonnegative integer");
            refs.push_back(ij.get<std::size_t>());
        }
        products.push_back(std::move(refs));
    }

    try {
        SpsExpr e(std::move(factors), std::move(products));
        for (std::size_t i = 0; i < digit_lists.size(); ++i)
            if (!digit_lists[i].empty())
                e.set_factor_digits(i, std::move(digit_lists[i]));
        return e;
    } catch (const InputError& err) {
        fail(origin, err.what());
    }
}

Depth4Formula parse_depth4(const ordered_json& doc, const std::string& origin) {
    if (!doc.contains("x_arity") || !doc["x_arity"].is_number_unsigned() ||
        !doc.contains("z_arity") || !doc["z_arity"].is_number_unsigned())
        fail(origin, "\"x_arity\" and \"z_arity\" must be nonnegative integers");
    if (!doc.contains("terms") || !doc["terms"].is_array())
        fail(origin, "\"terms\" must be an array");

    std::vector<Depth4Term> terms;
    for (const auto& tj : doc["terms"]) {
        if (!tj.is_array()) fail(origin, "term must be an array of blocks");
        Depth4Term term;
        for (const auto& bj : tj) {
            if (!bj.is_array()) fail(origin, "block must be an array of leaves");
            Depth4Block block;
            for (const auto& lj : bj) {
                if (!lj.is_object()) fail(origin, "leaf must be an object");
                Depth4Leaf leaf;
                if (lj.contains("x"))
                    for (const auto& v : lj["x"]) {
                        if (!v.is_number_unsigned())
                            fail(origin, "x index must be a positive integer");
                        leaf.x_vars.push_back(v.get<std::uint32_t>());
                    }
                if (lj.contains("z"))
                    for (const auto& v : lj["z"]) {
                        if (!v.is_number_unsigned())
                            fail(origin, "z index must be a positive integer");
                        leaf.z_vars.push_back(v.get<std::uint32_t>());
                    }
                if (lj.contains("const"))
                    for (const auto& v : lj["const"])
                        leaf.constants.push_back(read_big(v, origin, "constant"));
                block.leaves.push_back(std::move(leaf));
            }
            term.blocks.push_back(std::move(block));
        }
        terms.push_back(std::move(term));
    }
    try {
        return Depth4Formula(doc["x_arity"].get<std::uint32_t>(),
                             doc["z_arity"].get<std::uint32_t>(), std::move(terms));
    } catch (const InputError& err) {
        fail(origin, err.what());
    }
}

} // namespace

Instance parse_instance(const std::string& text, const std::string& origin) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        fail(origin, std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        fail(origin, "top level must be an object with a \"kind\" tag");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "sps") return Instance{parse_sps(doc, origin)};
    if (kind == "depth4") return Instance{parse_depth4(doc, origin)};
    fail(origin, "unknown kind \"" + kind + "\" (expected \"sps\" or \"depth4\")");
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), path);
}

namespace {

ordered_json coeff_json(const SparsePoly& f,
                        const std::vector<SparseCoeff>& digits, std::size_t term) {
    if (digits.empty()) return f.monomials()[term].coefficient.get_str();
    ordered_json bits;
    auto strs = [](const std::vector<BigInt>& v) {
        ordered_json arr = ordered_json::array();
        for (const auto& b : v) arr.push_back(b.get_str());
        return arr;
    };
    bits["plus"] = strs(digits[term].plus_bits());
    bits["minus"] = strs(digits[term].minus_bits());
    return bits;
}

} // namespace

std::string serialize_instance(const SpsExpr& e) {
    ordered_json doc;
    doc["kind"] = "sps";
    doc["factors"] = ordered_json::array();
    for (std::size_t i = 0; i < e.factors().size(); ++i) {
        const SparsePoly& f = e.factors()[i];
        ordered_json monomials = ordered_json::array();
        for (std::size_t t = 0; t < f.term_count(); ++t) {
            ordered_json mj;
            mj["coeff"] = coeff_json(f, e.factor_digits()[i], t);
            mj["exp"] = f.monomials()[t].exponent.get_str();
            monomials.push_back(std::move(mj));
        }
        doc["factors"].push_back({{"monomials", std::move(monomials)}});
    }
    doc["products"] = e.products();
    return doc.dump(2) + "\n";
}

std::string serialize_instance(const Depth4Formula& f) {
    ordered_json doc;
    doc["kind"] = "depth4";
    doc["x_arity"] = f.x_arity();
    doc["z_arity"] = f.z_arity();
    doc["terms"] = ordered_json::array();
    for (const auto& term : f.terms()) {
        ordered_json tj = ordered_json::array();
        for (const auto& block : term.blocks) {
            ordered_json bj = ordered_json::array();
            for (const auto& leaf : block.leaves) {
                ordered_json lj;
                lj["x"] = leaf.x_vars;
                lj["z"] = leaf.z_vars;
                ordered_json consts = ordered_json::array();
                for (const auto& c : leaf.constants) consts.push_back(c.get_str());
                lj["const"] = std::move(consts);
                bj.push_back(std::move(lj));
            }
            tj.push_back(std::move(bj));
        }
        doc["terms"].push_back(std::move(tj));
    }
    return doc.dump(2) + "\n";
}

std::string serialize_instance(const Instance& inst) {
    return inst.is_sps() ? serialize_instance(inst.sps())
                         : serialize_instance(inst.depth4());
}

ordered_json verdict_to_json(const PitVerdict& v) {
    ordered_json j;
    j["outcome"] = v.outcome == PitOutcome::zero ? "zero" : "nonzero";
    j["method"] = v.method;
    if (v.witness) {
        const PitWitness& w = *v.witness;
        ordered_json wj;
        switch (w.kind) {
        case PitWitness::Kind::integer_exact:
            wj["kind"] = "integer-exact";
            wj["point"] = w.point.get_str();
            wj["value"] = w.value.get_str();
            break;
        case PitWitness::Kind::integer_modular:
            wj["kind"] = "integer-modular";
            wj["point"] = w.point.get_str();
            wj["value"] = w.value.get_str();
            wj["modulus"] = w.modulus;
            break;
        case PitWitness::Kind::unity_remainder:
            wj["kind"] = "unity-remainder";
            wj["order"] = w.point.get_str();
            wj["exponent"] = w.exponent.get_str();
            wj["value"] = w.value.get_str();
            break;
        case PitWitness::Kind::expansion_term:
            wj["kind"] = "expansion-term";
            wj["exponent"] = w.point.get_str();
            wj["value"] = w.value.get_str();
            break;
        }
        j["witness"] = std::move(wj);
    }
    if (v.method == "random-mod") {
        j["seed"] = v.seed;
        j["rng"] = Rng::name();
        j["trial_points"] = v.eval_points;
    }
    if (!v.primes.empty()) j["primes"] = v.primes;
    j["error_bound"] = v.error_bound;
    return j;
}

} // namespace spslab
