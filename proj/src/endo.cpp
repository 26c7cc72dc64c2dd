#include "endocable/endo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace endocable {

namespace {

bool is_additive_hom(const Brace& B, const std::vector<int>& image,
                     int* wa = nullptr, int* wb = nullptr) {
    for (int a = 0; a < B.size(); ++a) {
        for (int b = 0; b < B.size(); ++b) {
            if (image[B.add(a, b)] != B.add(image[a], image[b])) {
                if (wa) *wa = a;
                if (wb) *wb = b;
                return false;
            }
        }
    }
    return true;
}

bool commutes_with_lambda(const Brace& B, const std::vector<int>& image,
                          const std::vector<int>& gs) {
    for (int g : gs)
        for (int h = 0; h < B.size(); ++h)
            if (B.lam(g, image[h]) != image[B.lam(g, h)]) return false;
    return true;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

LambdaEndo LambdaEndo::classify(const Brace& B, std::vector<int> image) {
    if (static_cast<int>(image.size()) != B.size())
        throw std::invalid_argument("LambdaEndo: image array of wrong length");
    for (int v : image)
        if (v < 0 || v >= B.size())
            throw std::invalid_argument("LambdaEndo: image entry out of range");
    int wa, wb;
    if (!is_additive_hom(B, image, &wa, &wb))
        throw NotAdditiveHomError("LambdaEndo: not an additive homomorphism at (" +
                                  std::to_string(wa) + "," + std::to_string(wb) +
                                  ")");
    std::vector<int> all(B.size());
    for (int g = 0; g < B.size(); ++g) all[g] = g;
    bool full = commutes_with_lambda(B, image, all);
    bool relative = full || commutes_with_lambda(B, image, sorted_unique(image));
    return LambdaEndo(&B, std::move(image), full, relative);
}

LambdaEndo LambdaEndo::identity(const Brace& B) { return scalar(B, 1); }
LambdaEndo LambdaEndo::zero(const Brace& B) { return scalar(B, 0); }

LambdaEndo LambdaEndo::scalar(const Brace& B, long long k) {
    std::vector<int> image(B.size());
    for (int g = 0; g < B.size(); ++g) image[g] = B.scalar(k, g);
    return classify(B, std::move(image));
}

LambdaEndo LambdaEndo::central(const Brace& B, int z) {
    for (int g = 0; g < B.size(); ++g)
        if (B.mul(z, g) != B.mul(g, z))
            throw NotCentralError("LambdaEndo::central: z is not central");
    std::vector<int> image(B.size());
    for (int h = 0; h < B.size(); ++h) image[h] = B.lam(z, h);
    return classify(B, std::move(image));
}

LambdaEndo LambdaEndo::group_ring(const Brace& B,
                                  const std::map<int, long long>& coeffs) {
    std::vector<long long> c(B.size(), 0);
    for (auto [g, k] : coeffs) {
        if (g < 0 || g >= B.size())
            throw std::invalid_argument("group_ring: coefficient index out of range");
        c[g] = k;
    }
    for (int h = 0; h < B.size(); ++h)
        for (int g = 0; g < B.size(); ++g)
            if (c[B.mul(B.mul(h, g), B.inv(h))] != c[g])
                throw NotCentralInGroupRingError(
                    "group_ring: coefficients not conjugation-invariant at (h=" +
                    std::to_string(h) + ", g=" + std::to_string(g) + ")");
    std::vector<int> image(B.size());
    for (int h = 0; h < B.size(); ++h) {
        int acc = 0;
        for (int g = 0; g < B.size(); ++g)
            if (c[g] != 0) acc = B.add(acc, B.scalar(c[g], B.lam(g, h)));
        image[h] = acc;
    }
    return classify(B, std::move(image));
}

std::vector<int> LambdaEndo::image_set() const { return sorted_unique(image_); }

LambdaEndo operator+(const LambdaEndo& a, const LambdaEndo& b) {
    if (a.brace_ != b.brace_)
        throw BraceMismatchError("LambdaEndo: sum over different braces");
    const Brace& B = *a.brace_;
    std::vector<int> image(B.size());
    for (int g = 0; g < B.size(); ++g) image[g] = B.add(a.image_[g], b.image_[g]);
    return LambdaEndo::classify(B, std::move(image));
}

LambdaEndo compose(const LambdaEndo& a, const LambdaEndo& b) {
    if (a.brace_ != b.brace_)
        throw BraceMismatchError("LambdaEndo: composition over different braces");
    const Brace& B = *a.brace_;
    std::vector<int> image(B.size());
    for (int g = 0; g < B.size(); ++g) image[g] = a.image_[b.image_[g]];
    return LambdaEndo::classify(B, std::move(image));
}

namespace {

void require_realization_over(const CycleSet& X, const Brace& B) {
    if (!B.has_perm_realization() || B.degree() != X.size())
        throw std::invalid_argument(
            "cable: endomorphism brace is not a permutation brace of X");
    for (int x = 0; x < X.size(); ++x)
        if (B.perm(B.generator_id(x)) != X.lambda(x))
            throw std::invalid_argument(
                "cable: endomorphism brace does not realize X");
}

}  // namespace

CycleSet cable(const CycleSet& X, const LambdaEndo& phi) {
    if (!phi.is_full() && !phi.is_relative())
        throw NotRelativeEndoError(
            "cable: phi is not a (relative) lambda-endomorphism");
    const Brace& B = phi.brace();
    require_realization_over(X, B);
    const int n = X.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        const Perm p = B.perm(B.inv(phi(B.generator_id(x))));
        for (int y = 0; y < n; ++y) table[x][y] = p(y);
    }
    return CycleSet::validate(std::move(table));
}

std::vector<std::vector<int>> blocks(const CycleSet& X, const LambdaEndo& phi) {
    if (!phi.is_full())
        throw NotFullEndoError("blocks: phi is not a full lambda-endomorphism");
    const Brace& B = phi.brace();
    require_realization_over(X, B);
    const int n = X.size();
    std::vector<int> label(n);
    for (int x = 0; x < n; ++x) label[x] = phi(B.generator_id(x));

    std::map<int, std::vector<int>> by_label;
    for (int x = 0; x < n; ++x) by_label[label[x]].push_back(x);
    std::vector<std::vector<int>> parts;
    for (auto& [value, members] : by_label) parts.push_back(std::move(members));
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    for (int g = 0; g < B.size(); ++g) {
        const Perm& p = B.perm(g);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (label[x] == label[y] && label[p(x)] != label[p(y)])
                    throw std::logic_error("blocks: partition is not invariant");
    }

    Retraction r = retract(cable(X, phi));
    if (parts != r.classes)
        throw std::logic_error(
            "blocks: partition differs from the retraction classes of X_phi");
    return parts;
}

Report phi_z_report(const Brace& B, int z) {
    for (int g = 0; g < B.size(); ++g)
        if (B.mul(z, g) != B.mul(g, z))
            throw NotCentralError("phi_z_report: z is not central");

    Report r;
    std::vector<int> phi(B.size());
    for (int g = 0; g < B.size(); ++g) phi[g] = B.sub(g, B.lam(z, g));
    std::vector<int> image = sorted_unique(phi);

    const bool involution = B.mul(z, z) == 0 && z != 0;
    if (involution) {
        bool ok = true;
        for (int g = 0; g < B.size() && ok; ++g)
            ok = phi[phi[g]] == B.scalar(2, phi[g]);
        for (int g : image)
            if (ok) ok = phi[g] == B.scalar(2, g);
        r.check("phi_z_square_is_doubling", ok);

        ok = true;
        for (int g : image)
            if (B.lam(z, g) != B.neg(g)) ok = false;
        r.check("phi_z_negates_image", ok);

        ok = true;
        for (int g : image)
            if (B.lam(g, z) != B.sub(z, B.scalar(2, g))) ok = false;
        r.check("phi_z_action_on_z", ok);
    } else {
        r.skip("phi_z_square_is_doubling", "z is not a multiplicative involution");
        r.skip("phi_z_negates_image", "z is not a multiplicative involution");
        r.skip("phi_z_action_on_z", "z is not a multiplicative involution");
    }

    bool closed_form = true;
    for (int g = 0; g < B.size(); ++g)
        if (phi[g] != B.sub(z, B.lam(g, z))) closed_form = false;
    r.check("phi_z_closed_form", closed_form);

    if (z == 0) {
        r.skip("phi_z_escapes_center", "z = 0 lies in the zero image");
    } else {
        r.check("phi_z_escapes_center",
                !std::binary_search(image.begin(), image.end(), z));
    }
    return r;
}

namespace {

struct NamedEndo {
    std::string name;
    LambdaEndo endo;
};

std::string perm_witness(const std::string& what, const Perm& a, const Perm& b) {
    return what + ": [" + a.to_string() + "] vs [" + b.to_string() + "]";
}

}  // namespace

Report identity_suite(const CycleSet& X, std::size_t cap,
                      unsigned long long seed) {
    Report r;
    const int n = X.size();
    BraceCheckOptions check;
    check.seed = seed;
    Brace B = Brace::permutation_brace(X, cap, check);
    const Perm T = X.diagonal();
    const long long exp_add = B.additive_exponent();
    const std::vector<int> center = B.center().members;

    r.result("size", std::to_string(n));
    r.result("group_order", std::to_string(B.size()));
    r.result("additive_exponent", std::to_string(exp_add));
    r.result("center_size", std::to_string(center.size()));

    // Base family: scalars and lambda_z for central z, deduplicated by image.
    std::vector<NamedEndo> base;
    std::map<std::vector<int>, int> seen;
    auto push = [&](std::string name, LambdaEndo e) {
        if (seen.emplace(e.image(), base.size()).second)
            base.push_back({std::move(name), std::move(e)});
    };
    for (long long k = 0; k < exp_add; ++k)
        push("scalar" + std::to_string(k), LambdaEndo::scalar(B, k));
    for (int z : center)
        push("lambda_z" + std::to_string(z), LambdaEndo::central(B, z));

    std::map<std::vector<int>, CycleSet> cabled;
    auto cable_of = [&](const LambdaEndo& e) -> const CycleSet& {
        auto it = cabled.find(e.image());
        if (it == cabled.end())
            it = cabled.emplace(e.image(), cable(X, e)).first;
        return it->second;
    };

    // Per-endomorphism facts, over base endos and their pairwise sums.
    std::vector<NamedEndo> family = base;
    std::set<std::vector<int>> family_images;
    for (const NamedEndo& f : family) family_images.insert(f.endo.image());
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i; j < base.size(); ++j) {
            LambdaEndo s = base[i].endo + base[j].endo;
            if (family_images.insert(s.image()).second)
                family.push_back({base[i].name + "+" + base[j].name, std::move(s)});
        }

    bool groups_match = true, left_ideal = true, blocks_match = true;
    std::string witness_group, witness_blocks;
    for (const NamedEndo& f : family) {
        const CycleSet& Xf = cable_of(f.endo);
        PermGroup Gf = permutation_group(Xf, cap);
        std::set<Perm> got(Gf.elements().begin(), Gf.elements().end());
        std::set<Perm> expect;
        for (int g = 0; g < B.size(); ++g) expect.insert(B.perm(f.endo(g)));
        if (got != expect) {
            groups_match = false;
            if (witness_group.empty()) witness_group = f.name;
        }
        if (!B.is_left_ideal(f.endo.image_set())) left_ideal = false;
        try {
            blocks(X, f.endo);
        } catch (const std::logic_error&) {
            blocks_match = false;
            if (witness_blocks.empty()) witness_blocks = f.name;
        }
    }
    r.check("permutation_group_of_cabling_is_image", groups_match, witness_group);
    r.check("cabling_image_is_left_ideal", left_ideal);
    r.check("blocks_are_retraction_classes_of_cabling", blocks_match, witness_blocks);

    // Mixed-cabling law and the addition laws over ordered base pairs.
    bool mixed = true, adding = true, diag_hom = true;
    std::string witness_mixed, witness_adding, witness_diag;
    for (const NamedEndo& f : base) {
        const CycleSet& Xf = cable_of(f.endo);
        const Perm Tf = Xf.diagonal();
        for (const NamedEndo& g : base) {
            const CycleSet& Xg = cable_of(g.endo);
            const Perm Tg = Xg.diagonal();
            for (int x = 0; x < n && mixed; ++x)
                for (int y = 0; y < n && mixed; ++y)
                    for (int z = 0; z < n && mixed; ++z)
                        if (Xg.op(Xf.op(x, y), Xf.op(x, z)) !=
                            Xf.op(Xg.op(y, x), Xg.op(y, z))) {
                            mixed = false;
                            witness_mixed = f.name + "," + g.name;
                        }
            const CycleSet& Xs = cable_of(f.endo + g.endo);
            for (int x = 0; x < n && adding; ++x)
                for (int y = 0; y < n && adding; ++y)
                    if (Xs.op(x, y) != Xg.op(Tf(x), Xf.op(x, y)) ||
                        Xs.op(x, y) != Xf.op(Tg(x), Xg.op(x, y))) {
                        adding = false;
                        witness_adding = f.name + "," + g.name;
                    }
            const Perm Ts = Xs.diagonal();
            if (Ts != Tf * Tg || Ts != Tg * Tf) {
                diag_hom = false;
                if (witness_diag.empty()) witness_diag = f.name + "," + g.name;
            }
        }
    }
    r.check("mixed_cabling_law", mixed, witness_mixed);
    r.check("adding_two_cablings", adding, witness_adding);
    r.check("diagonal_of_sum_is_composition", diag_hom, witness_diag);

    // T_{k id} = T^k for 0 <= k <= exp_add.
    bool powers = true;
    std::string witness_powers;
    for (long long k = 0; k <= exp_add; ++k) {
        const Perm Tk = cable_of(LambdaEndo::scalar(B, k)).diagonal();
        if (Tk != T.power(k)) {
            powers = false;
            witness_powers = perm_witness("k=" + std::to_string(k), Tk, T.power(k));
            break;
        }
    }
    r.check("scalar_cabling_diagonal_is_power", powers, witness_powers);

    // Dual structure at k = -1: x * y = lambda_{T^-1(x)}(y).
    {
        const CycleSet& Xd = cable_of(LambdaEndo::scalar(B, -1));
        const Perm Tinv = T.inverse();
        bool dual = true;
        for (int x = 0; x < n && dual; ++x)
            for (int y = 0; y < n && dual; ++y)
                if (Xd.op(x, y) != X.lambda(Tinv(x))(y)) dual = false;
        r.check("dual_cabling_structure", dual);
    }

    // Central cablings: T_{lambda_z} is T conjugated by lambda_z, and the
    // conjugate commutes with T.
    bool conj = true, commute = true;
    for (int z : center) {
        const Perm lz = B.perm(z);
        const Perm Tz = lz.inverse() * T * lz;
        if (cable_of(LambdaEndo::central(B, z)).diagonal() != Tz) conj = false;
        if (T * Tz != Tz * T) commute = false;
    }
    r.check("central_cabling_diagonal_is_conjugate", conj);
    r.check("diagonal_commutes_with_conjugated_diagonal", commute);

    for (int z : center) r.merge(phi_z_report(B, z));

    // Fix elements act as cycle-set automorphisms centralizing T.
    bool fix_auto = true;
    for (int f : B.fix().members) {
        const Perm lf = B.perm(f);
        for (int x = 0; x < n && fix_auto; ++x)
            for (int y = 0; y < n && fix_auto; ++y)
                if (lf(X.op(x, y)) != X.op(lf(x), lf(y))) fix_auto = false;
        if (lf * T != T * lf) fix_auto = false;
    }
    r.check("fix_elements_are_T_centralizing_automorphisms", fix_auto);

    return r;
}

Report replacement_check(const CycleSet& X, int z, long long k, std::size_t cap) {
    Report r;
    Brace B = Brace::permutation_brace(X, cap);
    auto primes = prime_divisors(B.size());
    if (!(B.size() == 1 || (primes.size() == 1 && primes[0] == 2))) {
        r.skip("replacement_second_involution", "permutation group is not a 2-group");
        return r;
    }
    bool central = true;
    for (int g = 0; g < B.size(); ++g)
        if (B.mul(z, g) != B.mul(g, z)) central = false;
    if (!central || B.multiplicative_order(z) != 2) {
        r.skip("replacement_second_involution",
               "z is not a central multiplicative involution");
        return r;
    }

    std::vector<int> image(B.size());
    for (int g = 0; g < B.size(); ++g)
        image[g] = B.scalar(k, B.sub(g, B.lam(z, g)));
    LambdaEndo kphi = LambdaEndo::classify(B, std::move(image));

    CycleSet Xk = cable(X, kphi);
    long long d = 1;
    for (int g : kphi.image_set()) d = std::lcm(d, B.additive_order(g));
    r.result("cabled_class", std::to_string(d));
    r.result("cabled_retractable", is_retractable(Xk) ? "true" : "false");

    if (!is_retractable(Xk) || d % 4 != 0) {
        r.skip("replacement_second_involution",
               "premises not met: cabling irretractable or class not divisible by 4");
        return r;
    }

    for (int c : B.center().members) {
        if (c != z && B.multiplicative_order(c) == 2) {
            r.check("replacement_second_involution", true);
            r.result("second_involution", std::to_string(c));
            return r;
        }
    }
    r.check("replacement_second_involution", false,
            "no second central involution despite met premises");
    return r;
}

std::vector<LambdaEndo> enumerate_lambda_endos(const Brace& B, long long cap) {
    // Greedy additive generating set, largest orders first.
    std::vector<int> order_sorted(B.size());
    for (int g = 0; g < B.size(); ++g) order_sorted[g] = g;
    std::sort(order_sorted.begin(), order_sorted.end(), [&](int a, int b) {
        auto oa = B.additive_order(a), ob = B.additive_order(b);
        return oa != ob ? oa > ob : a < b;
    });
    std::vector<int> gens;
    std::vector<int> span{0};
    for (int g : order_sorted) {
        if (static_cast<int>(span.size()) == B.size()) break;
        if (std::binary_search(span.begin(), span.end(), g)) continue;
        gens.push_back(g);
        span = B.additive_span(gens);
    }

    // Candidate images per generator: additive order must divide the
    // generator's order.
    std::vector<std::vector<int>> candidates;
    long long total = 1;
    for (int g : gens) {
        std::vector<int> c;
        for (int h = 0; h < B.size(); ++h)
            if (B.additive_order(g) % B.additive_order(h) == 0) c.push_back(h);
        total *= static_cast<long long>(c.size());
        if (total > cap)
            throw CapExceededError("enumerate_lambda_endos: " +
                                   std::to_string(total) + " candidates exceed cap");
        candidates.push_back(std::move(c));
    }

    // Breadth-first additive words over the generating set; every element
    // gets a (parent, generator) pair for image reconstruction.
    std::vector<int> parent(B.size(), -1), via(B.size(), -1);
    std::vector<int> bfs_order{0};
    {
        std::vector<bool> seen(B.size(), false);
        seen[0] = true;
        for (std::size_t i = 0; i < bfs_order.size(); ++i) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                int next = B.add(bfs_order[i], gens[gi]);
                if (!seen[next]) {
                    seen[next] = true;
                    parent[next] = bfs_order[i];
                    via[next] = static_cast<int>(gi);
                    bfs_order.push_back(next);
                }
            }
        }
        if (bfs_order.size() != static_cast<std::size_t>(B.size()))
            throw std::logic_error("enumerate_lambda_endos: generators do not span");
    }

    std::vector<int> all(B.size());
    for (int g = 0; g < B.size(); ++g) all[g] = g;

    std::set<std::vector<int>> images;
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<int> image(B.size(), 0);
        for (int e : bfs_order)
            if (e != 0)
                image[e] = B.add(image[parent[e]], candidates[via[e]][pick[via[e]]]);
        if (is_additive_hom(B, image) && commutes_with_lambda(B, image, all))
            images.insert(std::move(image));
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < candidates[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
    }

    std::vector<LambdaEndo> out;
    for (const auto& image : images) out.push_back(LambdaEndo::classify(B, image));
    return out;
}

}  // namespace endocable
