#include "fixedspace/report.hpp"

#include <sstream>
#include <stdexcept>

namespace fixedspace {

namespace {

std::string family_key(GroupSpec::Family f) {
    switch (f) {
        case GroupSpec::Family::Symplectic: return "symplectic";
        case GroupSpec::Family::GSpCoset: return "gsp-coset";
        case GroupSpec::Family::Unitary: return "unitary";
        case GroupSpec::Family::GeneralLinear: return "general-linear";
    }
    return "";
}

GroupSpec::Family family_from_key(const std::string& s) {
    if (s == "symplectic") return GroupSpec::Family::Symplectic;
    if (s == "gsp-coset") return GroupSpec::Family::GSpCoset;
    if (s == "unitary") return GroupSpec::Family::Unitary;
    if (s == "general-linear") return GroupSpec::Family::GeneralLinear;
    throw std::invalid_argument("unknown group family: " + s);
}

Provenance provenance_from_key(const std::string& s) {
    if (s == "formula") return Provenance::Formula;
    if (s == "brute-force") return Provenance::BruteForce;
    if (s == "empirical") return Provenance::Empirical;
    throw std::invalid_argument("unknown provenance: " + s);
}

Descriptor descriptor_from_str(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty descriptor");
    if (s.find('x') != std::string::npos) {
        std::vector<long> orders;
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, 'x')) orders.push_back(std::stol(tok));
        return Descriptor::of_shape(std::move(orders));
    }
    bool digits = true;
    for (char c : s) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (digits) return Descriptor::of_rank(std::stoi(s));
    return Descriptor::of_label(s);
}

Json ell_or_m_json(const GroupSpec& g) {
    if (g.modulus == 0) return Json("l");
    return Json(g.modulus);
}

}  // namespace

Json table_json(const DistributionTable& t) {
    Json j;
    j["group"] = t.group.str();
    j["family"] = family_key(t.group.family);
    j["rank"] = t.group.rank;
    j["ell_or_m"] = ell_or_m_json(t.group);
    j["modulus"] = t.group.modulus;
    if (t.group.family == GroupSpec::Family::GSpCoset) j["xi"] = t.group.xi;
    j["provenance"] = provenance_str(t.provenance);
    j["entries"] = Json::array();
    for (const auto& [d, v] : t.entries) j["entries"].push_back({{"descriptor", d.str()}, {"value", v.str()}});
    return j;
}

DistributionTable table_from_json(const Json& j) {
    DistributionTable t;
    t.group.family = family_from_key(j.at("family").get<std::string>());
    t.group.rank = j.at("rank").get<int>();
    t.group.modulus = j.at("modulus").get<long>();
    t.group.xi = j.contains("xi") ? j.at("xi").get<long>() : 1;
    t.provenance = provenance_from_key(j.at("provenance").get<std::string>());
    for (const auto& e : j.at("entries"))
        t.entries.emplace_back(descriptor_from_str(e.at("descriptor").get<std::string>()),
                               ExactScalar::parse(e.at("value").get<std::string>()));
    return t;
}

std::string table_csv(const DistributionTable& t) {
    std::ostringstream os;
    os << "group,ell_or_m,modulus,xi,provenance,descriptor,value\n";
    for (const auto& [d, v] : t.entries) {
        os << t.group.str() << "," << (t.group.modulus == 0 ? "l" : std::to_string(t.group.modulus)) << ","
           << t.group.modulus << ","
           << (t.group.family == GroupSpec::Family::GSpCoset ? std::to_string(t.group.xi) : "") << ","
           << provenance_str(t.provenance) << "," << d.str() << "," << v.str() << "\n";
    }
    return os.str();
}

std::string table_text(const DistributionTable& t) {
    std::ostringstream os;
    os << t.group.str() << "  [" << provenance_str(t.provenance) << "]\n";
    size_t width = 0;
    for (const auto& [d, v] : t.entries) width = std::max(width, d.str().size());
    for (const auto& [d, v] : t.entries) {
        std::string key = d.str();
        os << "  " << key << std::string(width - key.size() + 2, ' ') << v.str() << "\n";
    }
    return os.str();
}

Json beta_json(const BetaReport& r) {
    Json j;
    j["family"] = r.family;
    j["q"] = r.q;
    j["ell"] = r.ell;
    j["xi"] = r.xi;
    j["sample_size"] = r.sample_size;
    Json emp = Json::object(), pred = Json::object(), dev = Json::object();
    for (const auto& [d, v] : r.empirical.entries) emp[d.str()] = v.str();
    for (const auto& [d, v] : r.predicted.entries) pred[d.str()] = v.str();
    for (const auto& [d, v] : r.deviations) dev[d.str()] = rat_str(v);
    j["empirical"] = emp;
    j["predicted"] = pred;
    j["deviations"] = dev;
    j["sqrt_q_scale"] = r.sqrt_q_scale;
    return j;
}

BetaReport beta_from_json(const Json& j) {
    BetaReport r;
    r.family = j.at("family").get<std::string>();
    r.q = j.at("q").get<long>();
    r.ell = j.at("ell").get<long>();
    r.xi = j.at("xi").get<long>();
    r.sample_size = j.at("sample_size").get<long long>();
    r.sqrt_q_scale = j.at("sqrt_q_scale").get<std::string>();
    for (const auto& [key, value] : j.at("empirical").items())
        r.empirical.entries.emplace_back(descriptor_from_str(key), ExactScalar::parse(value.get<std::string>()));
    for (const auto& [key, value] : j.at("predicted").items())
        r.predicted.entries.emplace_back(descriptor_from_str(key), ExactScalar::parse(value.get<std::string>()));
    for (const auto& [key, value] : j.at("deviations").items())
        r.deviations.emplace_back(descriptor_from_str(key), rat_parse(value.get<std::string>()));
    r.empirical.provenance = Provenance::Empirical;
    r.predicted.provenance = Provenance::Formula;
    return r;
}

std::string beta_csv(const BetaReport& r) {
    std::ostringstream os;
    os << "family,q,ell,xi,sample_size,descriptor,empirical,predicted,deviation,sqrt_q_scale\n";
    for (const auto& [d, v] : r.predicted.entries) {
        const ExactScalar* emp = r.empirical.find(d);
        std::string devs;
        for (const auto& [dd, dev] : r.deviations)
            if (dd == d) devs = rat_str(dev);
        os << r.family << "," << r.q << "," << r.ell << "," << r.xi << "," << r.sample_size << "," << d.str()
           << "," << (emp ? emp->str() : "0") << "," << v.str() << "," << devs << "," << r.sqrt_q_scale << "\n";
    }
    return os.str();
}

std::string beta_text(const BetaReport& r) {
    std::ostringstream os;
    os << r.family << " over F_" << r.q << ", ell = " << r.ell << ", xi = " << r.xi
       << ", samples = " << r.sample_size << "\n";
    os << "  descriptor   empirical           predicted           |deviation|\n";
    for (const auto& [d, v] : r.predicted.entries) {
        const ExactScalar* emp = r.empirical.find(d);
        std::string devs;
        for (const auto& [dd, dev] : r.deviations)
            if (dd == d) devs = rat_str(dev);
        std::string key = d.str(), e = emp ? emp->str() : "0", p = v.str();
        os << "  " << key << std::string(key.size() < 12 ? 12 - key.size() : 1, ' ') << e
           << std::string(e.size() < 19 ? 19 - e.size() : 1, ' ') << p
           << std::string(p.size() < 19 ? 19 - p.size() : 1, ' ') << devs << "\n";
    }
    os << "  reference scale " << r.sqrt_q_scale << "\n";
    return os.str();
}

}  // namespace fixedspace
