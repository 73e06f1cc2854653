#ifndef APOLAR_SCHEME_HPP
#define APOLAR_SCHEME_HPP

#include <optional>
#include <string>
#include <vector>

#include "apolar/forms.hpp"

namespace apolar {

/// Zero-dimensional scheme with multiplicity at most 2 per point: a list
/// of points, each optionally carrying a tangent direction. Degree =
/// number of points + number of tangents. Tangents are stored reduced
/// modulo their base point.
class PointedScheme {
public:
    struct Entry {
        ProjPoint point;
        std::optional<ProjPoint> tangent;
    };

    PointedScheme() = default;
    explicit PointedScheme(std::vector<Entry> entries);

    static PointedScheme single_point(const ProjPoint& p);
    static PointedScheme double_point(const ProjPoint& p, const ProjPoint& tangent);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t point_count() const { return entries_.size(); }
    long degree() const;

    void append_point(const ProjPoint& p);
    void append_double_point(const ProjPoint& p, const ProjPoint& tangent);

    bool operator==(const PointedScheme& o) const;

    std::string to_string() const;

private:
    std::vector<Entry> entries_;
    void validate() const;
};

} // namespace apolar

#endif
