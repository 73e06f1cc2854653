#include "apolar/scheme.hpp"

#include <sstream>

namespace apolar {

PointedScheme::PointedScheme(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (Entry& e : entries_)
        if (e.tangent) e.tangent = reduce_tangent(e.point, *e.tangent);
    validate();
}

PointedScheme PointedScheme::single_point(const ProjPoint& p) {
    return PointedScheme({Entry{p, std::nullopt}});
}

PointedScheme PointedScheme::double_point(const ProjPoint& p, const ProjPoint& tangent) {
    return PointedScheme({Entry{p, tangent}});
}

long PointedScheme::degree() const {
    long d = 0;
    for (const Entry& e : entries_) d += e.tangent ? 2 : 1;
    return d;
}

void PointedScheme::append_point(const ProjPoint& p) {
    entries_.push_back(Entry{p, std::nullopt});
    validate();
}

void PointedScheme::append_double_point(const ProjPoint& p, const ProjPoint& tangent) {
    entries_.push_back(Entry{p, reduce_tangent(p, tangent)});
    validate();
}

void PointedScheme::validate() const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            require_user(entries_[i].point != entries_[j].point, "RepeatedPoint",
                         "scheme points must be pairwise distinct");
    }
}

bool PointedScheme::operator==(const PointedScheme& o) const {
    if (entries_.size() != o.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].point != o.entries_[i].point) return false;
        if (entries_[i].tangent.has_value() != o.entries_[i].tangent.has_value()) return false;
        if (entries_[i].tangent && *entries_[i].tangent != *o.entries_[i].tangent) return false;
    }
    return true;
}

std::string PointedScheme::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ", ";
        os << entries_[i].point.to_string();
        if (entries_[i].tangent) os << " + tangent " << entries_[i].tangent->to_string();
    }
    os << "}";
    return os.str();
}

} // namespace apolar
