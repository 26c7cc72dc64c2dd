#include "endocable/perm.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace endocable {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    std::vector<bool> seen(n, false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("Perm: image list is not a bijection");
        seen[v] = true;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> im(degree);
    std::iota(im.begin(), im.end(), 0);
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm Perm::cycle(int degree, const std::vector<int>& points) {
    Perm p = identity(degree);
    for (std::size_t i = 0; i < points.size(); ++i)
        p.images_[points[i]] = points[(i + 1) % points.size()];
    return Perm(p.images_);  // revalidate: rejects repeated points
}

Perm Perm::rotation(int degree, int shift) {
    std::vector<int> im(degree);
    for (int i = 0; i < degree; ++i)
        im[i] = ((i + shift) % degree + degree) % degree;
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> im(degree());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    Perm p;
    p.images_ = std::move(im);
    return p;
}

Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("Perm: degree mismatch in composition");
    std::vector<int> im(p.degree());
    for (int i = 0; i < p.degree(); ++i) im[i] = p.images_[q.images_[i]];
    Perm r;
    r.images_ = std::move(im);
    return r;
}

Perm Perm::power(long long k) const {
    Perm base = k >= 0 ? *this : inverse();
    unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                  : static_cast<unsigned long long>(-k);
    Perm acc = identity(degree());
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

bool Perm::has_fixed_point() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] == i) return true;
    return false;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        std::vector<int> cyc;
        int x = i;
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(x);
            x = images_[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Perm::CycleStructure Perm::cycle_structure() const {
    CycleStructure cs;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, x = i;
        while (!seen[x]) {
            seen[x] = true;
            ++len;
            x = images_[x];
        }
        cs.cycle_type.push_back(len);
        cs.order = std::lcm(cs.order, static_cast<long long>(len));
    }
    std::sort(cs.cycle_type.begin(), cs.cycle_type.end());
    cs.is_full_cycle = degree() > 0 && cs.cycle_type.size() == 1;
    return cs;
}

std::string Perm::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < degree(); ++i) {
        if (i) os << ' ';
        os << images_[i];
    }
    return os.str();
}

Perm Perm::parse(const std::string& line) {
    std::istringstream is(line);
    std::vector<int> im;
    int v;
    while (is >> v) im.push_back(v);
    return Perm(std::move(im));
}

std::size_t PermHash::operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
        h ^= static_cast<std::size_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

PermGroup PermGroup::closure(std::vector<Perm> generators, std::size_t cap) {
    if (generators.empty())
        throw std::invalid_argument("PermGroup: empty generating set");
    const int degree = generators[0].degree();
    for (const Perm& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("PermGroup: generators of mixed degree");

    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());

    PermGroup grp;
    grp.degree_ = degree;
    grp.generators_ = generators;

    std::unordered_map<Perm, int, PermHash> index;
    std::queue<int> todo;
    auto visit = [&](Perm p, std::vector<int> word) {
        auto [it, fresh] = index.emplace(std::move(p), grp.elements_.size());
        if (!fresh) return;
        if (grp.elements_.size() >= cap)
            throw CapExceededError("PermGroup: closure exceeds cap of " +
                                   std::to_string(cap));
        grp.elements_.push_back(it->first);
        grp.words_.push_back(std::move(word));
        todo.push(it->second);
    };

    visit(Perm::identity(degree), {});
    while (!todo.empty()) {
        int id = todo.front();
        todo.pop();
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            std::vector<int> word = grp.words_[id];
            word.push_back(static_cast<int>(gi));
            visit(grp.elements_[id] * generators[gi], std::move(word));
        }
    }
    return grp;
}

int PermGroup::index_of(const Perm& p) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == p) return static_cast<int>(i);
    return -1;
}

int PermGroup::compose(int a, int b) const {
    return index_of(elements_[a] * elements_[b]);
}

int PermGroup::inverse(int a) const { return index_of(elements_[a].inverse()); }

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree_, false);
    for (int start = 0; start < degree_; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit{start};
        seen[start] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            for (const Perm& g : generators_) {
                int y = g(orbit[k]);
                if (!seen[y]) {
                    seen[y] = true;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool PermGroup::is_semiregular() const {
    for (const Perm& g : elements_)
        if (!g.is_identity() && g.has_fixed_point()) return false;
    return true;
}

std::vector<int> PermGroup::center() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        bool central = true;
        for (const Perm& g : generators_) {
            if (elements_[i] * g != g * elements_[i]) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<int> PermGroup::centralizer_of(const std::vector<int>& subset) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        bool commutes = true;
        for (int s : subset) {
            if (elements_[i] * elements_[s] != elements_[s] * elements_[i]) {
                commutes = false;
                break;
            }
        }
        if (commutes) out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace endocable
