#include "gpi/grading.hpp"

#include <stdexcept>

namespace gpi {

std::string to_string(GradingClass c) {
    switch (c) {
        case GradingClass::Universal: return "Universal";
        case GradingClass::Canonical: return "Canonical";
        case GradingClass::AlmostUniversal: return "AlmostUniversal";
        case GradingClass::AlmostCanonical: return "AlmostCanonical";
        case GradingClass::Remaining: return "Remaining";
        case GradingClass::Trivial: return "Trivial";
    }
    return "?";
}

GradingClass grading_class_from_string(const std::string& name) {
    if (name == "Universal" || name == "universal") return GradingClass::Universal;
    if (name == "Canonical" || name == "canonical") return GradingClass::Canonical;
    if (name == "AlmostUniversal" || name == "almost-universal") return GradingClass::AlmostUniversal;
    if (name == "AlmostCanonical" || name == "almost-canonical") return GradingClass::AlmostCanonical;
    if (name == "Remaining" || name == "remaining") return GradingClass::Remaining;
    if (name == "Trivial" || name == "trivial") return GradingClass::Trivial;
    throw std::invalid_argument("unknown grading class: " + name);
}

ClassificationResult classify_grading(const GroupDescriptor& group, const GroupElement& g,
                                      const GroupElement& h) {
    if (!valid_element(group, g) || !valid_element(group, h))
        throw std::invalid_argument("grading degrees not valid under the group");
    GroupElement k = mul(group, g, h);
    ClassificationResult out;
    out.support = {identity(group), g, h, k};

    bool g1 = g.is_identity(), h1 = h.is_identity(), k1 = k.is_identity();
    if (g1 && h1)
        out.cls = GradingClass::Trivial;
    else if (g1 != h1)
        out.cls = GradingClass::Remaining;
    else if (g == h)
        out.cls = k1 ? GradingClass::AlmostCanonical : GradingClass::Canonical;
    else if (k1)
        out.cls = GradingClass::AlmostUniversal;
    else
        out.cls = GradingClass::Universal;
    return out;
}

GradingSpec GradingSpec::make(const GroupDescriptor& group, const GroupElement& g, const GroupElement& h) {
    auto cls = classify_grading(group, g, h);
    GradingSpec spec;
    spec.group = group;
    spec.deg_e12 = reduce(group, g);
    spec.deg_e23 = reduce(group, h);
    spec.deg_e13 = mul(group, g, h);
    spec.cls = cls.cls;
    spec.support = std::move(cls.support);
    return spec;
}

bool GradingSpec::has_distinguished_degree() const {
    return cls == GradingClass::AlmostCanonical || cls == GradingClass::Remaining ||
           cls == GradingClass::Canonical;
}

GroupElement GradingSpec::distinguished_degree() const {
    switch (cls) {
        case GradingClass::AlmostCanonical: return deg_e12;  // = deg_e23, order 2
        case GradingClass::Remaining: return deg_e12.is_identity() ? deg_e23 : deg_e12;
        case GradingClass::Canonical: return deg_e12;
        default:
            throw std::domain_error("grading class " + gpi::to_string(cls) +
                                    " has no unique nontrivial degree for z-variables");
    }
}

std::string GradingSpec::to_string() const {
    return gpi::to_string(cls) + " Gamma(" + deg_e12.to_string() + "," + deg_e23.to_string() +
           ") over " + group.to_string();
}

bool gradings_isomorphic(const GradingSpec& a, const GradingSpec& b) {
    if (a.group != b.group) throw std::invalid_argument("gradings over different groups");
    return (a.deg_e12 == b.deg_e12 && a.deg_e23 == b.deg_e23) ||
           (a.deg_e12 == b.deg_e23 && a.deg_e23 == b.deg_e12);
}

GradingSpec coarsen_grading(const GradingSpec& gamma, const GroupHom& alpha) {
    if (alpha.domain != gamma.group) throw std::invalid_argument("homomorphism domain mismatch");
    if (!alpha.valid()) throw std::invalid_argument("invalid group homomorphism");
    return GradingSpec::make(alpha.codomain, alpha.apply(gamma.deg_e12), alpha.apply(gamma.deg_e23));
}

}  // namespace gpi
