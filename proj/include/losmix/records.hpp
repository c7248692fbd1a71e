#ifndef LOSMIX_RECORDS_HPP
#define LOSMIX_RECORDS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace losmix {

/// A raw feature value prior to encoding: numeric or categorical code.
using FieldValue = std::variant<double, std::string>;

enum class FieldKind { Numeric, Categorical };

/// Declaration of one feature column. Categorical fields list their legal
/// levels (post-transform) and a reference level that the one-hot encoding
/// drops. An optional prefix transform truncates codes (e.g. DRG "B70" -> "B7")
/// before level validation.
struct FieldSpec {
    std::string name;
    FieldKind kind = FieldKind::Numeric;
    std::vector<std::string> levels;
    std::string reference;
    int prefix_length = 0;  // 0 = no transform
    std::optional<std::string> missing_value;  // substitute; absent = reject
};

struct FeatureSchema {
    std::vector<FieldSpec> fields;

    const FieldSpec* find(const std::string& name) const {
        for (const auto& f : fields)
            if (f.name == name) return &f;
        return nullptr;
    }
};

/// One hospital stay: positive length of stay in days plus the raw feature
/// values in schema field order (may be empty for covariate-free data).
struct StayRecord {
    double los_days = 0.0;
    std::vector<FieldValue> values;
};

}  // namespace losmix

#endif
