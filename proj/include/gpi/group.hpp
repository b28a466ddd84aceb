#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gpi {

// Finitely generated abelian group, given by one order per generator
// (0 = infinite order). Elements are coordinate vectors reduced modulo the
// finite orders, written multiplicatively throughout the library.
struct GroupDescriptor {
    std::vector<long> orders;

    std::size_t rank() const { return orders.size(); }
    bool operator==(const GroupDescriptor&) const = default;
    auto operator<=>(const GroupDescriptor&) const = default;

    std::string to_string() const;
    // Grammar: factors separated by '*', each factor 'Z' or 'Z<n>'.
    // 'x' is accepted as a separator alias.
    static GroupDescriptor parse(const std::string& text);
};

struct GroupElement {
    std::vector<long> coords;

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;

    bool is_identity() const;
    std::string to_string() const;
    // Element syntax: "(a,b,...)"; a bare integer is accepted for rank 1.
    static GroupElement parse(const std::string& text, const GroupDescriptor& group);
};

GroupElement reduce(const GroupDescriptor& g, GroupElement e);
GroupElement identity(const GroupDescriptor& g);
GroupElement mul(const GroupDescriptor& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupDescriptor& g, const GroupElement& a);
GroupElement pow(const GroupDescriptor& g, const GroupElement& a, long n);
bool valid_element(const GroupDescriptor& g, const GroupElement& e);

// Homomorphism between finitely generated abelian groups, one image per
// domain generator. Validity: the image's order divides the generator's
// order whenever the latter is finite.
struct GroupHom {
    GroupDescriptor domain;
    GroupDescriptor codomain;
    std::vector<GroupElement> images;

    bool valid() const;
    GroupElement apply(const GroupElement& e) const;
    static GroupHom identity_hom(const GroupDescriptor& g);
    // this after other: (this ∘ other)(x) = this(other(x)).
    GroupHom compose_after(const GroupHom& other) const;
};

}  // namespace gpi
