#pragma once

#include <set>
#include <string>

#include "gpi/group.hpp"

namespace gpi {

// The six isomorphism classes of elementary gradings on the Lie algebra of
// 3x3 upper triangular matrices.
enum class GradingClass { Universal, Canonical, AlmostUniversal, AlmostCanonical, Remaining, Trivial };

std::string to_string(GradingClass c);
GradingClass grading_class_from_string(const std::string& name);

// Elementary grading on UT3^(-): deg e12 = g, deg e23 = h, deg e13 = g*h,
// diagonal units of trivial degree.
struct GradingSpec {
    GroupDescriptor group;
    GroupElement deg_e12;  // g
    GroupElement deg_e23;  // h
    GroupElement deg_e13;  // g*h, derived
    GradingClass cls;
    std::set<GroupElement> support;  // {1, g, h, gh}

    static GradingSpec make(const GroupDescriptor& group, const GroupElement& g, const GroupElement& h);

    bool in_support(const GroupElement& d) const { return support.count(d) != 0; }
    // The degree carried by z-variables: the unique nontrivial support
    // degree of the class (Almost Canonical and Remaining only).
    bool has_distinguished_degree() const;
    GroupElement distinguished_degree() const;

    std::string to_string() const;
};

struct ClassificationResult {
    GradingClass cls;
    std::set<GroupElement> support;
};

ClassificationResult classify_grading(const GroupDescriptor& group, const GroupElement& g,
                                      const GroupElement& h);

bool gradings_isomorphic(const GradingSpec& a, const GradingSpec& b);

GradingSpec coarsen_grading(const GradingSpec& gamma, const GroupHom& alpha);

}  // namespace gpi
