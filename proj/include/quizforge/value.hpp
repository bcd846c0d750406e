#pragma once

#include <string>
#include <variant>
#include <vector>

#include "quizforge/diagnostics.hpp"

namespace quizforge {

/// Interpreter value: number scalar, numeric vector (row or column), string,
/// or boolean. Booleans coerce to 0/1 in numeric contexts.
class Value {
public:
    enum class Kind { Num, Vec, Str, Bool };

    struct VecData {
        std::vector<double> elems;
        bool row = true;
    };

    Value() : v_(0.0) {}

    static Value number(double x) { return Value(x); }
    static Value boolean(bool b) { Value v; v.v_ = b; return v; }
    static Value str(std::string s) { Value v; v.v_ = std::move(s); return v; }
    static Value vec(std::vector<double> elems, bool row = true) {
        if (elems.empty())
            throw SpikeError(ErrorCode::TypeError, "vectors must have at least one element");
        Value v;
        v.v_ = VecData{std::move(elems), row};
        return v;
    }

    Kind kind() const {
        switch (v_.index()) {
        case 0: return Kind::Num;
        case 1: return Kind::Bool;
        case 2: return Kind::Str;
        default: return Kind::Vec;
        }
    }

    bool is_num() const { return kind() == Kind::Num; }
    bool is_bool() const { return kind() == Kind::Bool; }
    bool is_str() const { return kind() == Kind::Str; }
    bool is_vec() const { return kind() == Kind::Vec; }

    /// Numeric view; Bool coerces to 0/1, anything else is a type error.
    double num() const;

    /// Integer view with round-to-nearest; errors on non-numeric values.
    long long int_round() const;

    const std::string& str() const;
    const VecData& vec() const;

    /// Truth of a control-flow guard: Bool as-is, numbers nonzero, vectors
    /// true when all elements are nonzero.
    bool truthy() const;

    /// Human-readable rendering (error messages, %s fallbacks).
    std::string display() const;

    bool operator==(const Value& other) const { return v_ == other.v_; }

private:
    explicit Value(double x) : v_(x) {}
    std::variant<double, bool, std::string, VecData> v_;
};

inline bool operator==(const Value::VecData& a, const Value::VecData& b) {
    return a.row == b.row && a.elems == b.elems;
}

} // namespace quizforge
