#pragma once

#include <string_view>

namespace postorder {

/// Outcome of comparing two elements of a preordered set.
enum class Relation { Less, Greater, Equivalent, Incomparable };

inline Relation relation_from(bool le, bool ge) {
  if (le && ge) return Relation::Equivalent;
  if (le) return Relation::Less;
  if (ge) return Relation::Greater;
  return Relation::Incomparable;
}

inline bool is_le(Relation r) { return r == Relation::Less || r == Relation::Equivalent; }
inline bool is_ge(Relation r) { return r == Relation::Greater || r == Relation::Equivalent; }

inline Relation reversed(Relation r) {
  switch (r) {
    case Relation::Less: return Relation::Greater;
    case Relation::Greater: return Relation::Less;
    default: return r;
  }
}

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less: return "less";
    case Relation::Greater: return "greater";
    case Relation::Equivalent: return "equivalent";
    case Relation::Incomparable: return "incomparable";
  }
  return "incomparable";
}

}  // namespace postorder
