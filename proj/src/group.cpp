#include "gpi/group.hpp"

#include <cctype>
#include <stdexcept>

namespace gpi {

namespace {
long mod_reduce(long v, long order) {
    if (order <= 0) return v;
    long m = v % order;
    return m < 0 ? m + order : m;
}
}  // namespace

std::string GroupDescriptor::to_string() const {
    if (orders.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) out += "*";
        out += orders[i] == 0 ? "Z" : "Z" + std::to_string(orders[i]);
    }
    return out;
}

GroupDescriptor GroupDescriptor::parse(const std::string& text) {
    GroupDescriptor g;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != 'Z' && text[i] != 'z')
            throw std::invalid_argument("bad group descriptor near position " + std::to_string(i) + ": " + text);
        ++i;
        long n = 0;
        bool has_digits = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            has_digits = true;
            n = n * 10 + (text[i] - '0');
            ++i;
        }
        if (has_digits && n < 2)
            throw std::invalid_argument("generator order must be >= 2: " + text);
        g.orders.push_back(has_digits ? n : 0);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != '*' && text[i] != 'x' && text[i] != 'X')
                throw std::invalid_argument("bad group descriptor separator: " + text);
            ++i;
            skip_ws();
        }
    }
    if (g.orders.empty()) throw std::invalid_argument("empty group descriptor");
    return g;
}

bool GroupElement::is_identity() const {
    for (long c : coords)
        if (c != 0) return false;
    return true;
}

std::string GroupElement::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords[i]);
    }
    return out + ")";
}

GroupElement GroupElement::parse(const std::string& text, const GroupDescriptor& group) {
    GroupElement e;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool parens = i < text.size() && text[i] == '(';
    if (parens) ++i;
    while (true) {
        skip_ws();
        bool negative = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            negative = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("bad group element: " + text);
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        e.coords.push_back(negative ? -v : v);
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        break;
    }
    if (parens) {
        if (i >= text.size() || text[i] != ')')
            throw std::invalid_argument("bad group element: " + text);
        ++i;
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("bad group element: " + text);
    if (e.coords.size() != group.rank())
        throw std::invalid_argument("element " + text + " has wrong rank for group " + group.to_string());
    return reduce(group, e);
}

GroupElement reduce(const GroupDescriptor& g, GroupElement e) {
    if (e.coords.size() != g.rank()) throw std::invalid_argument("element rank mismatch");
    for (std::size_t i = 0; i < e.coords.size(); ++i) e.coords[i] = mod_reduce(e.coords[i], g.orders[i]);
    return e;
}

GroupElement identity(const GroupDescriptor& g) {
    return GroupElement{std::vector<long>(g.rank(), 0)};
}

GroupElement mul(const GroupDescriptor& g, const GroupElement& a, const GroupElement& b) {
    if (a.coords.size() != g.rank() || b.coords.size() != g.rank())
        throw std::invalid_argument("element rank mismatch");
    GroupElement out;
    out.coords.resize(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        out.coords[i] = mod_reduce(a.coords[i] + b.coords[i], g.orders[i]);
    return out;
}

GroupElement inverse(const GroupDescriptor& g, const GroupElement& a) {
    GroupElement out;
    out.coords.resize(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) out.coords[i] = mod_reduce(-a.coords[i], g.orders[i]);
    return out;
}

GroupElement pow(const GroupDescriptor& g, const GroupElement& a, long n) {
    GroupElement out;
    out.coords.resize(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) out.coords[i] = mod_reduce(a.coords[i] * n, g.orders[i]);
    return out;
}

bool valid_element(const GroupDescriptor& g, const GroupElement& e) {
    if (e.coords.size() != g.rank()) return false;
    for (std::size_t i = 0; i < g.rank(); ++i)
        if (e.coords[i] != mod_reduce(e.coords[i], g.orders[i])) return false;
    return true;
}

bool GroupHom::valid() const {
    if (images.size() != domain.rank()) return false;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!valid_element(codomain, images[i])) return false;
        long n = domain.orders[i];
        if (n > 0 && !pow(codomain, images[i], n).is_identity()) return false;
    }
    return true;
}

GroupElement GroupHom::apply(const GroupElement& e) const {
    if (e.coords.size() != domain.rank()) throw std::invalid_argument("element rank mismatch");
    GroupElement out = identity(codomain);
    for (std::size_t i = 0; i < domain.rank(); ++i)
        out = mul(codomain, out, pow(codomain, images[i], e.coords[i]));
    return out;
}

GroupHom GroupHom::identity_hom(const GroupDescriptor& g) {
    GroupHom h{g, g, {}};
    for (std::size_t i = 0; i < g.rank(); ++i) {
        GroupElement e = identity(g);
        e.coords[i] = g.orders[i] == 1 ? 0 : 1;
        h.images.push_back(reduce(g, e));
    }
    return h;
}

GroupHom GroupHom::compose_after(const GroupHom& other) const {
    if (other.codomain != domain) throw std::invalid_argument("homomorphisms do not compose");
    GroupHom out{other.domain, codomain, {}};
    for (const auto& img : other.images) out.images.push_back(apply(img));
    return out;
}

}  // namespace gpi
