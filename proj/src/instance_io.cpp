#include "critdeg/instance_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace critdeg {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InstanceError("instance error at " + where + ": " + what);
}

Int to_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<Int>();
}

IntVec to_point(const json& j, int n, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        fail(where, "expected an array of " + std::to_string(n) + " integer coordinates");
    IntVec p;
    for (std::size_t c = 0; c < j.size(); ++c)
        p.push_back(to_int(j[c], where + "[" + std::to_string(c) + "]"));
    return p;
}

mpz_class to_bigint(const json& j, const std::string& where) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(where, "value is not a decimal integer string");
        }
    }
    fail(where, "expected an integer or a decimal string");
}

}  // namespace

InstanceFile parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InstanceError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InstanceError("instance error at $: expected a JSON object");

    InstanceFile inst;
    if (!j.contains("n")) fail("$.n", "missing");
    inst.n = static_cast<int>(to_int(j["n"], "$.n"));
    if (inst.n < 1 || inst.n > 6) fail("$.n", "n must be in [1,6]");

    if (!j.contains("polytopes") || !j["polytopes"].is_array())
        fail("$.polytopes", "expected an array of vertex lists");
    if (static_cast<int>(j["polytopes"].size()) != inst.n + 1)
        fail("$.polytopes", "expected exactly n+1 = " + std::to_string(inst.n + 1) + " vertex lists");
    for (std::size_t i = 0; i < j["polytopes"].size(); ++i) {
        const std::string where = "$.polytopes[" + std::to_string(i) + "]";
        const json& plist = j["polytopes"][i];
        if (!plist.is_array() || plist.empty()) fail(where, "expected a nonempty vertex array");
        std::vector<IntVec> pts;
        for (std::size_t k = 0; k < plist.size(); ++k)
            pts.push_back(to_point(plist[k], inst.n, where + "[" + std::to_string(k) + "]"));
        inst.polytopes.push_back(std::move(pts));
    }

    const bool has_sections = j.contains("sections");
    const bool has_seed = j.contains("generic_seed");
    if (has_sections && has_seed)
        fail("$", "give either \"sections\" or \"generic_seed\", not both");
    if (has_seed) {
        if (!j["generic_seed"].is_number_unsigned() && !j["generic_seed"].is_number_integer())
            fail("$.generic_seed", "expected an unsigned integer");
        inst.generic_seed = j["generic_seed"].get<std::uint64_t>();
    }
    if (has_sections) {
        const json& secs = j["sections"];
        if (!secs.is_array() || static_cast<int>(secs.size()) != inst.n + 1)
            fail("$.sections", "expected exactly n+1 coefficient maps");
        std::vector<SparseSection> sections;
        for (std::size_t i = 0; i < secs.size(); ++i) {
            const std::string where = "$.sections[" + std::to_string(i) + "]";
            if (!secs[i].is_array() || secs[i].empty()) fail(where, "expected a nonempty array");
            SparseSection s;
            s.polytope_index = static_cast<int>(i);
            for (std::size_t k = 0; k < secs[i].size(); ++k) {
                const std::string entry = where + "[" + std::to_string(k) + "]";
                const json& e = secs[i][k];
                if (!e.is_object() || !e.contains("point") || !e.contains("value"))
                    fail(entry, "expected an object with \"point\" and \"value\"");
                IntVec pt = to_point(e["point"], inst.n, entry + ".point");
                mpz_class value = to_bigint(e["value"], entry + ".value");
                if (sgn(value) != 0) s.coeffs.emplace_back(std::move(pt), std::move(value));
            }
            if (s.coeffs.empty()) fail(where, "section is identically zero");
            std::sort(s.coeffs.begin(), s.coeffs.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            sections.push_back(std::move(s));
        }
        inst.sections = std::move(sections);
    }
    return inst;
}

InstanceFile load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InstanceError("cannot open instance file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str());
}

std::string serialize_instance(const InstanceFile& instance) {
    json j;
    j["n"] = instance.n;
    json polys = json::array();
    for (const auto& plist : instance.polytopes) {
        json verts = json::array();
        for (const auto& p : plist) verts.push_back(p);
        polys.push_back(std::move(verts));
    }
    j["polytopes"] = std::move(polys);
    if (instance.generic_seed) j["generic_seed"] = *instance.generic_seed;
    if (instance.sections) {
        json secs = json::array();
        for (const auto& s : *instance.sections) {
            json entries = json::array();
            for (const auto& [pt, c] : s.coeffs)
                entries.push_back({{"point", pt}, {"value", c.get_str()}});
            secs.push_back(std::move(entries));
        }
        j["sections"] = std::move(secs);
    }
    return j.dump(2) + "\n";
}

PolytopeFamily family_from_instance(const InstanceFile& instance) {
    std::vector<LatticePolytope> members;
    for (std::size_t i = 0; i < instance.polytopes.size(); ++i) {
        try {
            members.push_back(LatticePolytope::hull(instance.n, instance.polytopes[i]));
        } catch (const std::exception& e) {
            throw InstanceError("instance error at $.polytopes[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return PolytopeFamily(instance.n, std::move(members));
}

OracleOptions oracle_from_instance(const InstanceFile& instance, const PolytopeFamily& family) {
    OracleOptions opts;
    if (instance.generic_seed) {
        opts.enabled = true;
        opts.generic = true;
        opts.seed = *instance.generic_seed;
        return opts;
    }
    if (!instance.sections) return opts;
    opts.enabled = true;
    opts.generic = false;
    opts.explicit_sections = *instance.sections;
    for (std::size_t i = 0; i < opts.explicit_sections.size(); ++i)
        for (const auto& [pt, c] : opts.explicit_sections[i].coeffs) {
            (void)c;
            if (!family.member(static_cast<int>(i)).contains(pt)) {
                std::ostringstream msg;
                msg << "instance error at $.sections[" << i << "]: support point (";
                for (std::size_t k = 0; k < pt.size(); ++k) msg << (k ? "," : "") << pt[k];
                msg << ") lies outside polytope " << i;
                throw InstanceError(msg.str());
            }
        }
    return opts;
}

namespace {

json bounds_json(const CodimReport& r) {
    json j;
    j["lower"] = r.bounds->lower;
    j["upper"] = r.bounds->upper;
    return j;
}

}  // namespace

json report_to_json(const CodimReport& r) {
    json j;
    j["n"] = r.n;
    j["essential"]["essential"] = r.essential.essential;
    if (r.essential.violating_subset)
        j["essential"]["violating_subset"] = *r.essential.violating_subset;
    j["verdict"] = verdict_name(r.verdict);
    j["provenance"] = {{"tool_version", kToolVersion},
                       {"seed", r.oracle_seed_requested ? json(*r.oracle_seed_requested) : json(nullptr)}};
    if (r.bounds) j["bounds"] = bounds_json(r);
    if (r.abc) {
        j["formula"]["applicable"] = r.abc->applicable;
        j["formula"]["violators"] = r.abc->violators;
        if (r.formula_value) j["formula"]["value"] = *r.formula_value;
    }
    if (r.bignef) {
        j["bignef"]["applicable"] = true;
        j["bignef"]["case"] = r.bignef->first == BignefTag::FullDim ? "full-dim" : "surface";
        j["bignef"]["value"] = r.bignef->second;
    } else if (r.bounds) {
        j["bignef"]["applicable"] = false;
    }
    if (r.bounds) {
        switch (r.restrictdelta) {
            case RestrictDelta::NotApplicable: j["restrictdelta"] = "not-applicable"; break;
            case RestrictDelta::Ok: j["restrictdelta"] = "ok"; break;
            case RestrictDelta::Violated: j["restrictdelta"] = "violated"; break;
        }
        j["genfor"]["applicable"] = r.genfor_value.has_value();
        if (r.genfor_value) j["genfor"]["value"] = *r.genfor_value;
    }
    if (r.e1) j["e1_table"] = *r.e1;
    if (r.rho_coeffs) {
        j["critical_degree"]["coeffs"] = *r.rho_coeffs;
        j["critical_degree"]["dim_s_rho"] = *r.dim_s_rho;
    }
    j["oracle"]["enabled"] = r.oracle_value.has_value();
    if (r.oracle_value) {
        j["oracle"]["value"] = *r.oracle_value;
        j["oracle"]["reseeds"] = r.reseeds_used;
        if (r.oracle_seed_used) j["oracle"]["seed_used"] = *r.oracle_seed_used;
    }
    return j;
}

std::string report_json_string(const CodimReport& r) { return report_to_json(r).dump(2) + "\n"; }

CodimReport report_from_json(const json& j) {
    CodimReport r;
    r.n = j.at("n").get<int>();
    r.essential.essential = j.at("essential").at("essential").get<bool>();
    if (j.at("essential").contains("violating_subset"))
        r.essential.violating_subset = j["essential"]["violating_subset"].get<std::vector<int>>();
    for (Verdict v : {Verdict::NotEssential, Verdict::NoOracle, Verdict::Agree,
                      Verdict::WithinBounds, Verdict::Disagree, Verdict::Indeterminate})
        if (verdict_name(v) == j.at("verdict").get<std::string>()) r.verdict = v;
    if (j.contains("bounds")) {
        CodimBounds b;
        b.lower = j["bounds"]["lower"].get<long long>();
        b.upper = j["bounds"]["upper"].get<long long>();
        r.bounds = b;
    }
    if (j.contains("formula")) {
        AbcResult abc;
        abc.applicable = j["formula"]["applicable"].get<bool>();
        abc.violators = j["formula"]["violators"].get<std::vector<std::vector<int>>>();
        r.abc = abc;
        if (j["formula"].contains("value")) r.formula_value = j["formula"]["value"].get<long long>();
    }
    if (j.contains("bignef") && j["bignef"]["applicable"].get<bool>())
        r.bignef = std::make_pair(
            j["bignef"]["case"].get<std::string>() == "full-dim" ? BignefTag::FullDim : BignefTag::Surface,
            j["bignef"]["value"].get<long long>());
    if (j.contains("restrictdelta")) {
        const std::string s = j["restrictdelta"].get<std::string>();
        r.restrictdelta = s == "ok" ? RestrictDelta::Ok
                                    : (s == "violated" ? RestrictDelta::Violated : RestrictDelta::NotApplicable);
    }
    if (j.contains("genfor") && j["genfor"]["applicable"].get<bool>())
        r.genfor_value = j["genfor"]["value"].get<long long>();
    if (j.contains("e1_table")) r.e1 = j["e1_table"].get<std::vector<std::vector<long long>>>();
    if (j.contains("critical_degree")) {
        r.rho_coeffs = j["critical_degree"]["coeffs"].get<IntVec>();
        r.dim_s_rho = j["critical_degree"]["dim_s_rho"].get<long long>();
    }
    if (j.contains("provenance") && !j["provenance"]["seed"].is_null())
        r.oracle_seed_requested = j["provenance"]["seed"].get<std::uint64_t>();
    if (j.at("oracle").at("enabled").get<bool>()) {
        r.oracle_value = j["oracle"]["value"].get<long long>();
        r.reseeds_used = j["oracle"]["reseeds"].get<int>();
        if (j["oracle"].contains("seed_used"))
            r.oracle_seed_used = j["oracle"]["seed_used"].get<std::uint64_t>();
    }
    return r;
}

namespace {

std::string subset_str(const std::vector<int>& subset) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << subset[i];
    out << "}";
    return out.str();
}

}  // namespace

std::string report_text(const CodimReport& r) {
    std::ostringstream out;
    out << "family: n = " << r.n << "\n";
    if (!r.essential.essential) {
        out << "essential: NO, violating J = " << subset_str(*r.essential.violating_subset) << "\n";
        out << "no codimension claims apply to non-essential families\n";
        out << "verdict: " << verdict_name(r.verdict) << "\n";
        return out.str();
    }
    out << "essential: yes\n";
    out << "critical degree rho: coeffs (";
    for (std::size_t i = 0; i < r.rho_coeffs->size(); ++i)
        out << (i ? "," : "") << (*r.rho_coeffs)[i];
    out << "), dim S_rho = " << *r.dim_s_rho << "\n";
    out << "bounds: " << r.bounds->lower << " <= dim (S/I)_rho <= " << r.bounds->upper << "\n";
    if (r.formula_value) {
        out << "exact formula (conditions (a)/(b)/(c) hold): " << *r.formula_value << "\n";
    } else {
        out << "exact formula: not applicable; violators:";
        for (const auto& v : r.abc->violators) out << " " << subset_str(v);
        out << "\n";
    }
    if (r.bignef)
        out << "big-and-nef case (" << (r.bignef->first == BignefTag::FullDim ? "full-dim" : "surface")
            << "): " << r.bignef->second << "\n";
    out << "restrictdelta: "
        << (r.restrictdelta == RestrictDelta::Ok
                ? "ok"
                : (r.restrictdelta == RestrictDelta::Violated ? "violated" : "not-applicable"))
        << "\n";
    if (r.genfor_value) out << "inclusion-exclusion formula: " << *r.genfor_value << "\n";
    if (r.oracle_value) {
        out << "oracle dim (S/I)_rho = " << *r.oracle_value;
        if (r.oracle_seed_used) out << " (seed " << *r.oracle_seed_used << ", reseeds " << r.reseeds_used << ")";
        out << "\n";
    }
    out << "verdict: " << verdict_name(r.verdict) << "\n";
    return out.str();
}

std::string e1_table_text(const CodimReport& r) {
    std::ostringstream out;
    const auto& table = *r.e1;
    const int n = r.n;
    out << "dim E_1^{p,q} (rows q = " << n << "..0, columns p = 0.." << n + 1 << ")\n";
    for (int q = n; q >= 0; --q) {
        out << "q=" << q << ":";
        for (int p = 0; p <= n + 1; ++p)
            out << " " << table[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
        out << "\n";
    }
    return out.str();
}

}  // namespace critdeg
