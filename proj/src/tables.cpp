#include "fixedspace/tables.hpp"

#include <algorithm>
#include <sstream>

namespace fixedspace {

std::string GroupSpec::str() const {
    std::ostringstream os;
    bool symbolic = modulus == 0;  // table in the indeterminate
    switch (family) {
        case Family::Symplectic:
            os << "Sp_" << 2 * rank << (symbolic ? "(F_l)" : "(Z/" + std::to_string(modulus) + ")");
            break;
        case Family::GSpCoset:
            os << "GSp_" << 2 * rank << "^" << xi
               << (symbolic ? "(F_l)" : "(Z/" + std::to_string(modulus) + ")");
            break;
        case Family::Unitary:
            os << "GU_" << rank << (symbolic ? "(F_m^2)" : "(F_" + std::to_string(modulus * modulus) + ")");
            break;
        case Family::GeneralLinear:
            os << "GL_" << rank << (symbolic ? "(F_l)" : "(F_" + std::to_string(modulus) + ")");
            break;
    }
    return os.str();
}

Descriptor Descriptor::of_rank(int r) {
    Descriptor d;
    d.kind = Kind::Rank;
    d.rank = r;
    return d;
}

Descriptor Descriptor::of_shape(std::vector<long> orders) {
    Descriptor d;
    d.kind = Kind::Shape;
    std::sort(orders.begin(), orders.end());
    d.orders = std::move(orders);
    return d;
}

Descriptor Descriptor::of_label(std::string label) {
    Descriptor d;
    d.kind = Kind::Label;
    d.label = std::move(label);
    return d;
}

std::string Descriptor::str() const {
    switch (kind) {
        case Kind::Rank: return std::to_string(rank);
        case Kind::Label: return label;
        case Kind::Shape: {
            if (orders.empty()) return "1";
            std::ostringstream os;
            for (size_t i = 0; i < orders.size(); ++i) {
                if (i) os << "x";
                os << orders[i];
            }
            return os.str();
        }
    }
    return "";
}

std::strong_ordering Descriptor::operator<=>(const Descriptor& o) const {
    if (auto c = kind <=> o.kind; c != nullptr) return c;
    switch (kind) {
        case Kind::Rank: return rank <=> o.rank;
        case Kind::Label: return label.compare(o.label) <=> 0;
        case Kind::Shape:
            if (auto c = orders.size() <=> o.orders.size(); c != nullptr) return c;
            for (size_t i = 0; i < orders.size(); ++i)
                if (auto c = orders[i] <=> o.orders[i]; c != nullptr) return c;
            return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
}

std::string provenance_str(Provenance p) {
    switch (p) {
        case Provenance::Formula: return "formula";
        case Provenance::BruteForce: return "brute-force";
        case Provenance::Empirical: return "empirical";
    }
    return "";
}

const ExactScalar* DistributionTable::find(const Descriptor& d) const {
    for (const auto& [key, value] : entries)
        if (key == d) return &value;
    return nullptr;
}

ExactScalar DistributionTable::sum() const {
    if (entries.empty()) return ExactScalar(Rat(0));
    ExactScalar s = entries.front().second;
    for (size_t i = 1; i < entries.size(); ++i) s = s + entries[i].second;
    return s;
}

bool DistributionTable::same_entries(const DistributionTable& o) const {
    if (entries.size() != o.entries.size()) return false;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (!(entries[i].first == o.entries[i].first)) return false;
        if (!(entries[i].second == o.entries[i].second)) return false;
    }
    return true;
}

}  // namespace fixedspace
