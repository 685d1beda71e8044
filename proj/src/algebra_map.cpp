#include "legch/algebra_map.hpp"

#include <algorithm>

namespace legch {

AlgebraMap& AlgebraMap::assign(Symbol g, Poly image) {
    // only explicit images are compared against the identity
    if (image.is_explicit() && image == Poly::generator(g))
        images_.erase(g);
    else
        images_.insert_or_assign(g, std::move(image));
    return *this;
}

Poly AlgebraMap::image(Symbol g) const {
    auto it = images_.find(g);
    return it == images_.end() ? Poly::generator(g) : it->second;
}

std::vector<Symbol> AlgebraMap::domain() const {
    std::vector<Symbol> out;
    out.reserve(images_.size());
    for (const auto& [g, _] : images_) out.push_back(g);
    std::sort(out.begin(), out.end(), ByName{});
    return out;
}

Poly AlgebraMap::apply(const Poly& p) const {
    if (images_.empty()) return p;
    return p.substitute([this](Symbol s) -> std::optional<Poly> {
        auto it = images_.find(s);
        if (it == images_.end()) return std::nullopt;
        return it->second;
    });
}

std::string AlgebraMap::to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto g : domain()) {
        if (!first) out += ", ";
        first = false;
        out += g.str() + " -> " + images_.at(g).to_string();
    }
    return out + "}";
}

bool operator==(const AlgebraMap& a, const AlgebraMap& b) {
    for (const auto& [g, img] : a.images_)
        if (!(b.image(g) == img)) return false;
    for (const auto& [g, img] : b.images_)
        if (!(a.image(g) == img)) return false;
    return true;
}

AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner) {
    AlgebraMap out;
    std::vector<Symbol> gens = inner.domain();
    for (auto g : outer.domain()) gens.push_back(g);
    for (auto g : gens) out.assign(g, outer.apply(inner.image(g)));
    return out;
}

AlgebraMap restrict(const AlgebraMap& m, const std::vector<Symbol>& keep) {
    AlgebraMap out;
    for (auto g : keep)
        if (m.moves(g)) out.assign(g, m.image(g));
    return out;
}

}  // namespace legch
